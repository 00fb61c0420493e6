#include "core.hpp"

#include <algorithm>
#include <sstream>

namespace laumon {

std::string ParahoricData::describe() const {
    std::ostringstream out;
    out << "(n=" << n << ", k=" << k << ", omega=" << omega << ", S={";
    for (std::size_t i = 0; i < S.size(); ++i) out << (i ? "," : "") << S[i];
    out << "})";
    return out.str();
}

ParahoricData make_parahoric(int n, int k, int omega, std::vector<int> S) {
    if (n < 1) throw InputError(InputErrorKind::NonPositiveN, "n must be positive, got " + std::to_string(n));
    if (omega < 1)
        throw InputError(InputErrorKind::OmegaBelowOne, "omega must be at least 1, got " + std::to_string(omega));
    if (k < 0 || k > n)
        throw InputError(InputErrorKind::KOutOfRange,
                         "k must lie in [0, " + std::to_string(n) + "], got " + std::to_string(k));
    if (S.empty()) throw InputError(InputErrorKind::EmptySubset, "S must be nonempty");
    for (int s : S) {
        if (s < 1 || s > n)
            throw InputError(InputErrorKind::SubsetOutOfRange,
                             "S must be a subset of [1, " + std::to_string(n) + "], found " + std::to_string(s));
    }
    std::sort(S.begin(), S.end());
    if (auto dup = std::adjacent_find(S.begin(), S.end()); dup != S.end())
        throw InputError(InputErrorKind::DuplicateEntry, "S contains duplicate entry " + std::to_string(*dup));

    ParahoricData P;
    P.n = n;
    P.k = k;
    P.omega = omega;
    P.S = std::move(S);
    P.r = static_cast<int>(P.S.size());
    P.m = omega * n;
    P.L = omega * P.r;
    P.gaps.resize(P.r);
    for (int i = 0; i < P.r; ++i) {
        const int next = (i + 1 < P.r) ? P.S[i + 1] : P.S[0] + n;
        P.gaps[i] = next - P.S[i];
    }
    return P;
}

ShiftRepresentation build_ambient(const ParahoricData& P) {
    return ShiftRepresentation{P.r, P.m, P.gaps};
}

int torus_label(const ParahoricData& P, const BasisVector& v) {
    const int raw = P.S[v.vertex] - v.index + 1;
    return ((raw - 1) % P.n + P.n) % P.n + 1;
}

std::vector<Chain> chains(const ParahoricData& P) {
    const auto U = build_ambient(P);
    std::vector<Chain> result;
    result.reserve(P.n);
    // Vectors outside the image of the arrow into `start` are exactly the
    // indices 1..gap of that arrow.
    for (int start = 0; start < P.r; ++start) {
        const int incoming = P.wrap(start - 1);
        for (int t = 1; t <= P.gap(incoming); ++t) {
            Chain c;
            BasisVector cur{start, t};
            c.label = torus_label(P, cur);
            while (true) {
                c.entries.push_back(cur);
                if (torus_label(P, cur) != c.label) throw InternalError("chain label is not constant");
                auto next = U.apply(cur.vertex, cur.index);
                if (!next) break;
                cur = BasisVector{P.wrap(cur.vertex + 1), *next};
            }
            if (static_cast<int>(c.entries.size()) != P.L)
                throw InternalError("chain of length " + std::to_string(c.entries.size()) + " in " + P.describe());
            result.push_back(std::move(c));
        }
    }
    std::sort(result.begin(), result.end(), [](const Chain& a, const Chain& b) { return a.label < b.label; });
    for (int j = 0; j < P.n; ++j) {
        if (result[j].label != j + 1) throw InternalError("chain labels do not form a permutation of [n]");
    }
    return result;
}

DimVector indec_dim_vector(int end_vertex, int length, int r) {
    if (r < 1) throw InputError(InputErrorKind::Other, "quiver must have at least one vertex");
    if (length < 0) throw InputError(InputErrorKind::Other, "negative indecomposable length");
    DimVector dims(r, 0);
    for (int p = 0; p < length; ++p) dims[(((end_vertex - p) % r) + r) % r] += 1;
    return dims;
}

DimVector indec_dim_vector(const ParahoricData& P, int end_vertex, int length) {
    if (length > P.L)
        throw InputError(InputErrorKind::Other,
                         "indecomposable length " + std::to_string(length) + " exceeds " + std::to_string(P.L));
    return indec_dim_vector(end_vertex, length, P.r);
}

int floor_vertex(const ParahoricData& P, int j) {
    // max{ i : S[i] <= j }, wrapping to the last vertex when j < S[0].
    int best = P.r - 1;
    for (int i = 0; i < P.r; ++i) {
        if (P.S[i] <= j) best = i;
    }
    return best;
}

Instance::Instance(const ParahoricData& P) : P_(P), chains_(chains(P)) {
    lookup_.assign(P.r, std::vector<ChainPosition>(P.m));
    for (const auto& c : chains_) {
        for (int p = 0; p < static_cast<int>(c.entries.size()); ++p) {
            const auto& e = c.entries[p];
            lookup_[e.vertex][e.index - 1] = ChainPosition{c.label, p};
        }
    }
}

}  // namespace laumon
