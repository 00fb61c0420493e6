#pragma once

#include <vector>

#include "coord_rep.hpp"
#include "geometry.hpp"
#include "oracle.hpp"

namespace laumon {

/// Vertex (i, j), i in [0, r), j in [1, L], of the extended quiver is stored at
/// index i * L + (j - 1). Arrows: all a-arrows (i,j)->(i,j+1) first, then all
/// b-arrows (i,j)->(i+1,j-1), each group in vertex order.
struct ExtendedQuiver {
    int r = 0;
    int L = 0;

    int vertex(int i, int j) const { return (((i % r) + r) % r) * L + (j - 1); }
    int vertex_count() const { return r * L; }
    int a_arrow_count() const { return r * (L - 1); }
    int b_arrow_count() const { return r * (L - 1); }
};

ExtendedQuiver extended_quiver(const ParahoricData& P);

/// The extension functor applied to the ambient. The space at (i, j) is the
/// image of the (j-1)-step path out of vertex i: the chain entries at cyclic
/// vertex i+j-1 with chain position >= j (1-based), labelled by basis index.
CoordRep build_hat_ambient(const Instance& I);

/// The extension functor applied to a coordinate subrepresentation of the
/// ambient, as a coordinate subrepresentation of build_hat_ambient.
CoordinateSubrep lambda_of(const Instance& I, const JugglingPattern& J);

using HatDimVector = std::vector<int>;

/// Dimension vector of the extension of the top pattern of component I.
HatDimVector hat_dim_vector(const ParahoricData& P, const IndexSet& component);

/// Fixed points of the desingularization of component I: all coordinate
/// subrepresentations of the hat ambient with dimension hat_dim_vector.
std::vector<CoordinateSubrep> hat_fixed_points(const Instance& I, const IndexSet& component,
                                               EnumerationBudget budget = {});

/// The level-1 spaces of a hat point, i.e. the restriction functor.
JugglingPattern restrict_hat(const ParahoricData& P, const CoordinateSubrep& hat_point);

/// dim End of the hat ambient.
int hat_aut_dim_oracle(const ParahoricData& P);

/// The induced point over S' of a hat point over S.
CoordinateSubrep project_hat(const ParahoricData& P, const std::vector<int>& Sp, const CoordinateSubrep& hat_point);

struct DesingReport {
    int components = 0;
    int hat_points = 0;
    bool tangent_ok = true;       // every hat fixed point has tangent dim omega k (n-k)
    bool fibers_ok = true;        // res images == fixed points of the component closure
    bool dominance_ok = true;     // res images lie below the top pattern
    bool aut_ok = true;           // hat and base endomorphism dimensions agree
    int hat_aut_dim = 0;
    int base_aut_dim = 0;
};

/// Runs every desingularization check on one instance.
DesingReport desing_check(const Instance& I, EnumerationBudget budget = {});

struct HatProjectionReport {
    bool square_commutes = true;  // restrict . project_hat == project_pattern . restrict
    bool surjective = true;       // onto the hat fixed points of every component over S'
};

HatProjectionReport hat_projection_check(const Instance& I, const std::vector<int>& Sp, EnumerationBudget budget = {});

}  // namespace laumon
