#include "coord_rep.hpp"

#include <algorithm>

namespace laumon {

namespace {

// position of each label at a vertex, -1 if absent
std::vector<int> position_map(const std::vector<int>& labels, const IndexSet& chosen) {
    std::vector<int> pos(labels.size(), -1);
    int next = 0;
    for (std::size_t b = 0; b < labels.size(); ++b) {
        if (std::binary_search(chosen.begin(), chosen.end(), labels[b])) pos[b] = next++;
    }
    return pos;
}

std::vector<int> complement_map(const std::vector<int>& labels, const IndexSet& chosen) {
    std::vector<int> pos(labels.size(), -1);
    int next = 0;
    for (std::size_t b = 0; b < labels.size(); ++b) {
        if (!std::binary_search(chosen.begin(), chosen.end(), labels[b])) pos[b] = next++;
    }
    return pos;
}

CoordRep reindex(const CoordRep& rep, const std::vector<std::vector<int>>& pos) {
    CoordRep out;
    out.labels.resize(rep.vertex_count());
    for (int v = 0; v < rep.vertex_count(); ++v) {
        for (int b = 0; b < rep.dim(v); ++b) {
            if (pos[v][b] >= 0) out.labels[v].push_back(rep.labels[v][b]);
        }
    }
    for (const auto& a : rep.arrows) {
        CoordRep::Arrow na{a.source, a.target, {}};
        na.image.assign(out.dim(a.source), -1);
        for (int b = 0; b < rep.dim(a.source); ++b) {
            const int nb = pos[a.source][b];
            if (nb < 0 || a.image[b] < 0) continue;
            na.image[nb] = pos[a.target][a.image[b]];
        }
        out.arrows.push_back(std::move(na));
    }
    return out;
}

}  // namespace

std::vector<int> CoordRep::dims() const {
    std::vector<int> d(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) d[v] = static_cast<int>(labels[v].size());
    return d;
}

CoordRep ambient_rep(const ParahoricData& P) {
    const auto U = build_ambient(P);
    CoordRep rep;
    rep.labels.assign(P.r, {});
    for (int v = 0; v < P.r; ++v) {
        for (int t = 1; t <= P.m; ++t) rep.labels[v].push_back(t);
    }
    for (int v = 0; v < P.r; ++v) {
        CoordRep::Arrow a{v, P.wrap(v + 1), std::vector<int>(P.m, -1)};
        for (int t = 1; t <= P.m; ++t) {
            if (auto img = U.apply(v, t)) a.image[t - 1] = *img - 1;
        }
        rep.arrows.push_back(std::move(a));
    }
    return rep;
}

bool is_subrep(const CoordRep& rep, const CoordinateSubrep& sub) {
    if (static_cast<int>(sub.size()) != rep.vertex_count()) return false;
    for (const auto& a : rep.arrows) {
        const auto& src = sub[a.source];
        const auto& tgt = sub[a.target];
        for (int b = 0; b < rep.dim(a.source); ++b) {
            if (a.image[b] < 0) continue;
            if (!std::binary_search(src.begin(), src.end(), rep.labels[a.source][b])) continue;
            if (!std::binary_search(tgt.begin(), tgt.end(), rep.labels[a.target][a.image[b]])) return false;
        }
    }
    return true;
}

CoordRep restrict_to(const CoordRep& rep, const CoordinateSubrep& sub) {
    std::vector<std::vector<int>> pos(rep.vertex_count());
    for (int v = 0; v < rep.vertex_count(); ++v) pos[v] = position_map(rep.labels[v], sub[v]);
    return reindex(rep, pos);
}

CoordRep quotient_by(const CoordRep& rep, const CoordinateSubrep& sub) {
    std::vector<std::vector<int>> pos(rep.vertex_count());
    for (int v = 0; v < rep.vertex_count(); ++v) pos[v] = complement_map(rep.labels[v], sub[v]);
    return reindex(rep, pos);
}

CoordRep permute_basis(const CoordRep& rep, const std::vector<std::vector<int>>& perm) {
    CoordRep out;
    out.labels.resize(rep.vertex_count());
    for (int v = 0; v < rep.vertex_count(); ++v) {
        out.labels[v].assign(rep.dim(v), 0);
        for (int b = 0; b < rep.dim(v); ++b) out.labels[v][perm[v][b]] = rep.labels[v][b];
    }
    for (const auto& a : rep.arrows) {
        CoordRep::Arrow na{a.source, a.target, std::vector<int>(rep.dim(a.source), -1)};
        for (int b = 0; b < rep.dim(a.source); ++b) {
            if (a.image[b] >= 0) na.image[perm[a.source][b]] = perm[a.target][a.image[b]];
        }
        out.arrows.push_back(std::move(na));
    }
    return out;
}

}  // namespace laumon
