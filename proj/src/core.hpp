#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace laumon {

/// Sorted set of 1-based basis indices.
using IndexSet = std::vector<int>;

/// Validated instance (n, k, omega, S).
///
/// Vertices of the cyclic quiver are 0-based internally: vertex i stands for
/// the element S[i]. Basis indices are 1-based and run over [1, m].
struct ParahoricData {
    int n = 0;
    int k = 0;
    int omega = 0;
    std::vector<int> S;     // strictly increasing, elements of [1, n]
    int r = 0;              // |S|
    std::vector<int> gaps;  // gaps[i] = S[i+1] - S[i], with S[r] := S[0] + n
    int m = 0;              // omega * n, per-vertex ambient dimension
    int L = 0;              // omega * r, chain length

    int gap(int vertex) const { return gaps[wrap(vertex)]; }
    int wrap(int vertex) const { return ((vertex % r) + r) % r; }
    int target() const { return k * omega; }

    bool operator==(const ParahoricData&) const = default;
    std::string describe() const;
};

ParahoricData make_parahoric(int n, int k, int omega, std::vector<int> S);

/// U_{m,S} as a tuple of shift maps: arrow i sends (i, t) to (i+1, t + gaps[i]).
struct ShiftRepresentation {
    int r = 0;
    int dim = 0;
    std::vector<int> offsets;

    /// Image index of basis vector t at the source of arrow `vertex`, if nonzero.
    std::optional<int> apply(int vertex, int t) const {
        const int image = t + offsets[vertex];
        if (image > dim) return std::nullopt;
        return image;
    }
};

ShiftRepresentation build_ambient(const ParahoricData& P);

struct BasisVector {
    int vertex = 0;  // 0-based vertex of the cyclic quiver
    int index = 0;   // 1-based basis index

    auto operator<=>(const BasisVector&) const = default;
};

/// One indecomposable summand of the ambient, as the orbit of a non-image
/// basis vector under the arrows.
struct Chain {
    int label = 0;  // torus label in [1, n]
    std::vector<BasisVector> entries;
    int end_vertex() const { return entries.back().vertex; }
};

/// Torus label of a basis vector: S[vertex] - index + 1, normalized into [1, n].
int torus_label(const ParahoricData& P, const BasisVector& v);

/// The n chains of the ambient, sorted by label (chains[j-1] has label j).
std::vector<Chain> chains(const ParahoricData& P);

using DimVector = std::vector<int>;

/// Dimension vector of the indecomposable of the given length ending at
/// `end_vertex` on a cyclic quiver with r vertices.
DimVector indec_dim_vector(int end_vertex, int length, int r);
/// Same, additionally rejecting lengths above the chain length of P.
DimVector indec_dim_vector(const ParahoricData& P, int end_vertex, int length);

struct ChainPosition {
    int label = 0;     // chain label in [1, n]
    int position = 0;  // 0-based position along the chain
};

/// An instance together with its chain decomposition and a reverse lookup
/// from basis vectors to chain positions. Constructed implicitly from
/// ParahoricData so that module functions accept either.
class Instance {
public:
    Instance(const ParahoricData& P);  // NOLINT(google-explicit-constructor)

    const ParahoricData& data() const { return P_; }
    const std::vector<Chain>& all_chains() const { return chains_; }
    const Chain& chain(int label) const { return chains_[label - 1]; }
    ChainPosition locate(const BasisVector& v) const { return lookup_[v.vertex][v.index - 1]; }

private:
    ParahoricData P_;
    std::vector<Chain> chains_;
    std::vector<std::vector<ChainPosition>> lookup_;
};

/// Vertex i with S[i] <= j < S[i+1] (cyclically mod n), for j in [1, n].
int floor_vertex(const ParahoricData& P, int j);

}  // namespace laumon
