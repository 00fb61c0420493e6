#pragma once

#include <stdexcept>
#include <string>

namespace laumon {

enum class InputErrorKind {
    NonPositiveN,
    OmegaBelowOne,
    KOutOfRange,
    EmptySubset,
    DuplicateEntry,
    SubsetOutOfRange,
    NotASubset,
    MalformedPattern,
    MalformedLVector,
    MalformedComponent,
    Other,
};

/// Rejected user input. Maps to exit code 2 / LMN_ERR_INVALID_ARGUMENT.
class InputError : public std::invalid_argument {
public:
    InputError(InputErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    InputErrorKind kind() const noexcept { return kind_; }

private:
    InputErrorKind kind_;
};

/// An explicit enumeration budget was exhausted.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked mathematical identity did not hold.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Construction invariant violated; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace laumon
