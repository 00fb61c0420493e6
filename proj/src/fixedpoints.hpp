#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace laumon {

/// A torus fixed point: per vertex, the sorted kω-subset of [1, m] spanning
/// the coordinate subrepresentation.
struct JugglingPattern {
    std::vector<IndexSet> sets;

    auto operator<=>(const JugglingPattern&) const = default;
};

/// Tail length per chain; entry j-1 belongs to the chain labelled j.
using LVector = std::vector<int>;

/// Multiset of nonzero indecomposable summands (end vertex, length), sorted.
struct StratumKey {
    std::vector<std::pair<int, int>> parts;

    auto operator<=>(const StratumKey&) const = default;
};

/// Shift-inclusion test. Throws InputError if J has the wrong arity or a set
/// of the wrong size or out of range; returns false if only the arrow
/// condition fails.
bool validate_pattern(const ParahoricData& P, const JugglingPattern& J);

/// All tail-length vectors meeting the dimension condition, lexicographic.
std::vector<LVector> all_lvectors(const Instance& I);

/// All fixed points, sorted lexicographically by (J_1, ..., J_r).
std::vector<JugglingPattern> all_patterns(const Instance& I);

/// Cell dimension statistic: sum over vertices of, for each index not pushed
/// in from the previous vertex, the number of larger indices outside J_i.
int energy(const ParahoricData& P, const JugglingPattern& J);

LVector to_lvector(const Instance& I, const JugglingPattern& J);
JugglingPattern from_lvector(const Instance& I, const LVector& l);

StratumKey stratum_key(const Instance& I, const JugglingPattern& J);
std::map<StratumKey, std::vector<JugglingPattern>> strata_partition(const Instance& I);

/// Number of free cell coordinates after gluing along the arrow relations.
int cell_parameter_count(const ParahoricData& P, const JugglingPattern& J);

/// Dominance: J >= J' iff the q-th smallest element of J_i is <= that of J'_i
/// for every vertex i and every q.
bool dominates(const JugglingPattern& J, const JugglingPattern& Jp);

}  // namespace laumon
