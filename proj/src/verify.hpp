#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"

namespace laumon {

/// Grid: 1 <= n <= max_n, 1 <= omega <= max_omega, 0 <= k <= n, every
/// nonempty S of [n]. The brute-force oracle and the desingularization
/// checks only run up to their own, smaller bounds.
struct VerifyOptions {
    int max_n = 4;
    int max_omega = 2;
    int oracle_max_n = 4;
    int desing_max_n = 3;
    int threads = 0;                  // 0: LAUMON_THREADS, else hardware concurrency
    std::vector<std::string> only;    // invariant names; empty runs all
    EnumerationBudget budget;
};

struct InvariantSummary {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    std::string first_failure;  // instance and detail of the earliest failure in grid order
};

struct VerifyResult {
    std::vector<InvariantSummary> invariants;  // in registry order
    bool ok = true;
    std::string report;  // deterministic: no timings, no thread count
};

/// Every invariant name the harness knows, in report order.
const std::vector<std::string>& invariant_names();

/// Throws InputError for bad bounds or an unknown invariant name.
VerifyResult run_verify(const VerifyOptions& options);

/// Worker count from LAUMON_THREADS when set and positive, else hardware concurrency.
int default_thread_count();

}  // namespace laumon
