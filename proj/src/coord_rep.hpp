#pragma once

#include <vector>

#include "core.hpp"

namespace laumon {

/// A quiver representation whose arrows act on distinguished bases by partial
/// injections (0/1 matrices with at most one 1 per row and column). Every
/// representation in this project is of this form: the shift ambients, their
/// images under the extension functor, coordinate subrepresentations and
/// their quotients.
struct CoordRep {
    struct Arrow {
        int source = 0;
        int target = 0;
        std::vector<int> image;  // image[b] = basis position at target, or -1
    };

    std::vector<std::vector<int>> labels;  // per vertex: external index of each basis element
    std::vector<Arrow> arrows;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int dim(int v) const { return static_cast<int>(labels[v].size()); }
    std::vector<int> dims() const;
};

/// Per-vertex sorted sets of basis labels, closed under every arrow.
using CoordinateSubrep = std::vector<IndexSet>;

/// U_{m,S} on the cyclic quiver with basis labels 1..m at every vertex.
CoordRep ambient_rep(const ParahoricData& P);

/// True iff `sub` (labels) is closed under the arrows of `rep`.
bool is_subrep(const CoordRep& rep, const CoordinateSubrep& sub);

/// The subrepresentation spanned by `sub`; requires is_subrep.
CoordRep restrict_to(const CoordRep& rep, const CoordinateSubrep& sub);

/// The quotient rep / sub on the complementary basis.
CoordRep quotient_by(const CoordRep& rep, const CoordinateSubrep& sub);

/// Relabels basis positions at each vertex by a permutation; the result is
/// isomorphic to `rep`. perm[v][old_position] = new_position.
CoordRep permute_basis(const CoordRep& rep, const std::vector<std::vector<int>>& perm);

}  // namespace laumon
