#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "coord_rep.hpp"

namespace laumon {

using Rational = mpq_class;

/// Row-echelon accumulator over exact rationals for sparse systems.
/// Rows are added one at a time and reduced against the current pivots.
class SparseEliminator {
public:
    using Row = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

    explicit SparseEliminator(int columns);

    /// Reduces the row and keeps it if independent. Returns true if the rank grew.
    bool add_row(Row row);

    int rank() const { return rank_; }
    int columns() const { return columns_; }
    int nullity() const { return columns_ - rank_; }

private:
    int columns_;
    int rank_ = 0;
    std::vector<Row> pivot_rows_;  // indexed by leading column; empty if none
};

/// dim Hom(A, B) for two representations of the same quiver.
int hom_dim(const CoordRep& A, const CoordRep& B);

/// dim End(A).
inline int end_space_dim(const CoordRep& A) { return hom_dim(A, A); }

/// Tangent space dimension Hom(V, M/V) at the coordinate subrepresentation V.
int tangent_dim(const CoordRep& ambient, const CoordinateSubrep& sub);

struct EnumerationBudget {
    std::int64_t max_nodes = 50'000'000;  // candidate subsets visited during search
};

/// Product over vertices of binom(dim, target), saturating at INT64_MAX.
std::int64_t candidate_space_size(const CoordRep& rep, const std::vector<int>& dims);

/// All coordinate subrepresentations of `rep` with the given dimension
/// vector, sorted lexicographically. Throws BudgetExceeded.
std::vector<CoordinateSubrep> enumerate_subreps(const CoordRep& rep, const std::vector<int>& dims,
                                                EnumerationBudget budget = {});

}  // namespace laumon
