#pragma once

#include <vector>

#include "fixedpoints.hpp"

namespace laumon {

/// Instance over S' with the same n, k, omega. Throws InputError unless
/// S' is a nonempty subset of P.S.
ParahoricData sub_instance(const ParahoricData& P, const std::vector<int>& Sp);

/// Forget the subspaces at vertices outside S'.
JugglingPattern project_pattern(const ParahoricData& P, const std::vector<int>& Sp, const JugglingPattern& J);

/// Tail lengths after projection: per chain, the number of tail entries that
/// sit at vertices kept in S'.
LVector project_lvector(const Instance& I, const std::vector<int>& Sp, const LVector& l);

/// Greedy preimage of a fixed point over S' in the fixed points over S.
/// project_pattern(lift_pattern(J')) == J'.
JugglingPattern lift_pattern(const ParahoricData& Pp, const std::vector<int>& S, const JugglingPattern& Jp);

/// The projection maps the fixed points over S onto those over S'.
bool image_check(const Instance& I, const std::vector<int>& Sp);

/// For P with S = [n]: removing the vertices of T one at a time in any order
/// gives the same map on fixed points. All orderings for |T| <= 3, a fixed
/// pseudo-random sample otherwise.
bool commutation_check(const Instance& I, const std::vector<int>& T);

}  // namespace laumon
