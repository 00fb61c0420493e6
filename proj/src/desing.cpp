#include "desing.hpp"

#include <algorithm>
#include <set>

#include "momentgraph.hpp"
#include "projections.hpp"

namespace laumon {

ExtendedQuiver extended_quiver(const ParahoricData& P) { return ExtendedQuiver{P.r, P.L}; }

namespace {

// entries of the hat space at (i, j): chain entries at vertex i+j-1 with 0-based position >= j-1
std::vector<BasisVector> hat_basis(const Instance& I, int i, int j) {
    const auto& P = I.data();
    const int v = P.wrap(i + j - 1);
    std::vector<BasisVector> basis;
    for (int t = 1; t <= P.m; ++t) {
        if (I.locate({v, t}).position >= j - 1) basis.push_back({v, t});
    }
    return basis;
}

int position_of(const CoordRep& rep, int vertex, int label) {
    const auto& labels = rep.labels[vertex];
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    return (it != labels.end() && *it == label) ? static_cast<int>(it - labels.begin()) : -1;
}

}  // namespace

CoordRep build_hat_ambient(const Instance& I) {
    const auto& P = I.data();
    const auto Q = extended_quiver(P);
    const auto U = build_ambient(P);
    CoordRep rep;
    rep.labels.resize(Q.vertex_count());
    for (int i = 0; i < P.r; ++i) {
        for (int j = 1; j <= P.L; ++j) {
            for (const auto& b : hat_basis(I, i, j)) rep.labels[Q.vertex(i, j)].push_back(b.index);
        }
    }
    for (int i = 0; i < P.r; ++i) {
        for (int j = 1; j < P.L; ++j) {
            const int src = Q.vertex(i, j), tgt = Q.vertex(i, j + 1);
            const int v = P.wrap(i + j - 1);
            CoordRep::Arrow a{src, tgt, std::vector<int>(rep.dim(src), -1)};
            for (int b = 0; b < rep.dim(src); ++b) {
                if (auto image = U.apply(v, rep.labels[src][b])) a.image[b] = position_of(rep, tgt, *image);
            }
            rep.arrows.push_back(std::move(a));
        }
    }
    for (int i = 0; i < P.r; ++i) {
        for (int j = 2; j <= P.L; ++j) {
            const int src = Q.vertex(i, j), tgt = Q.vertex(i + 1, j - 1);
            CoordRep::Arrow b{src, tgt, std::vector<int>(rep.dim(src), -1)};
            for (int x = 0; x < rep.dim(src); ++x) {
                b.image[x] = position_of(rep, tgt, rep.labels[src][x]);
                if (b.image[x] < 0) throw InternalError("hat inclusion misses a basis vector");
            }
            rep.arrows.push_back(std::move(b));
        }
    }
    return rep;
}

CoordinateSubrep lambda_of(const Instance& I, const JugglingPattern& J) {
    const auto& P = I.data();
    const auto Q = extended_quiver(P);
    CoordinateSubrep sub(Q.vertex_count());
    for (int i = 0; i < P.r; ++i) {
        for (int j = 1; j <= P.L; ++j) {
            for (const auto& b : hat_basis(I, i, j)) {
                // the ancestor j-1 steps back along the chain must lie in J_i
                const auto where = I.locate(b);
                const auto& ancestor = I.chain(where.label).entries[where.position - (j - 1)];
                const auto& set = J.sets[ancestor.vertex];
                if (std::binary_search(set.begin(), set.end(), ancestor.index)) sub[Q.vertex(i, j)].push_back(b.index);
            }
        }
    }
    return sub;
}

HatDimVector hat_dim_vector(const ParahoricData& P, const IndexSet& component) {
    if (!is_component_index(P, component))
        throw InputError(InputErrorKind::MalformedComponent, "index set is not an irreducible component of " + P.describe());
    const Instance I(P);
    const auto sub = lambda_of(I, component_top_pattern(P, component));
    HatDimVector dims;
    for (const auto& s : sub) dims.push_back(static_cast<int>(s.size()));
    return dims;
}

std::vector<CoordinateSubrep> hat_fixed_points(const Instance& I, const IndexSet& component, EnumerationBudget budget) {
    return enumerate_subreps(build_hat_ambient(I), hat_dim_vector(I.data(), component), budget);
}

JugglingPattern restrict_hat(const ParahoricData& P, const CoordinateSubrep& hat_point) {
    const auto Q = extended_quiver(P);
    if (static_cast<int>(hat_point.size()) != Q.vertex_count())
        throw InputError(InputErrorKind::MalformedPattern, "hat point has the wrong number of vertices");
    JugglingPattern J;
    for (int i = 0; i < P.r; ++i) J.sets.push_back(hat_point[Q.vertex(i, 1)]);
    return J;
}

int hat_aut_dim_oracle(const ParahoricData& P) { return end_space_dim(build_hat_ambient(Instance(P))); }

CoordinateSubrep project_hat(const ParahoricData& P, const std::vector<int>& Sp, const CoordinateSubrep& hat_point) {
    const auto Pp = sub_instance(P, Sp);
    const auto Q = extended_quiver(P);
    const auto Qp = extended_quiver(Pp);
    if (static_cast<int>(hat_point.size()) != Q.vertex_count())
        throw InputError(InputErrorKind::MalformedPattern, "hat point has the wrong number of vertices");
    CoordinateSubrep out(Qp.vertex_count());
    for (int ip = 0; ip < Pp.r; ++ip) {
        const int i = static_cast<int>(std::lower_bound(P.S.begin(), P.S.end(), Pp.S[ip]) - P.S.begin());
        int distance = 0;  // along S', in units of [n]
        int steps = 0;     // along S
        int walked = 0;
        for (int jp = 1; jp <= Pp.L; ++jp) {
            if (jp > 1) distance += Pp.gap(ip + jp - 2);
            while (walked < distance) walked += P.gap(i + steps++);
            if (walked != distance || steps + 1 > P.L) throw InternalError("hat projection path mismatch");
            out[Qp.vertex(ip, jp)] = hat_point[Q.vertex(i, steps + 1)];
        }
    }
    return out;
}

DesingReport desing_check(const Instance& I, EnumerationBudget budget) {
    const auto& P = I.data();
    DesingReport report;
    const auto hat = build_hat_ambient(I);
    const int expected_dim = P.omega * P.k * (P.n - P.k);
    for (const auto& comp : irr_components(P)) {
        ++report.components;
        const auto points = enumerate_subreps(hat, hat_dim_vector(P, comp.subset), budget);
        report.hat_points += static_cast<int>(points.size());
        std::set<JugglingPattern> images;
        for (const auto& W : points) {
            if (tangent_dim(hat, W) != expected_dim) report.tangent_ok = false;
            auto J = restrict_hat(P, W);
            if (!validate_pattern(P, J) || !dominates(comp.top, J)) report.dominance_ok = false;
            images.insert(std::move(J));
        }
        const auto closure = cell_closure(I, comp.top);
        if (!std::equal(images.begin(), images.end(), closure.begin(), closure.end())) report.fibers_ok = false;
    }
    report.hat_aut_dim = end_space_dim(hat);
    report.base_aut_dim = aut_dim_oracle(P);
    report.aut_ok = report.hat_aut_dim == report.base_aut_dim;
    return report;
}

HatProjectionReport hat_projection_check(const Instance& I, const std::vector<int>& Sp, EnumerationBudget budget) {
    const auto& P = I.data();
    const Instance Ip(sub_instance(P, Sp));
    const auto& Pp = Ip.data();
    HatProjectionReport report;
    const auto hat = build_hat_ambient(I);
    for (const auto& comp : irr_components(P)) {
        const auto points = enumerate_subreps(hat, hat_dim_vector(P, comp.subset), budget);
        std::set<CoordinateSubrep> image;
        for (const auto& W : points) {
            auto V = project_hat(P, Pp.S, W);
            if (restrict_hat(Pp, V) != project_pattern(P, Pp.S, restrict_hat(P, W))) report.square_commutes = false;
            image.insert(std::move(V));
        }
        if (!is_component_index(Pp, comp.subset)) continue;
        const auto expected = hat_fixed_points(Ip, comp.subset, budget);
        if (!std::equal(image.begin(), image.end(), expected.begin(), expected.end())) report.surjective = false;
    }
    return report;
}

}  // namespace laumon
