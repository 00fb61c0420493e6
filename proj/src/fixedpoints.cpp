#include "fixedpoints.hpp"

#include <algorithm>
#include <numeric>

namespace laumon {

namespace {

bool contains(const IndexSet& set, int value) { return std::binary_search(set.begin(), set.end(), value); }

void check_shape(const ParahoricData& P, const JugglingPattern& J) {
    if (static_cast<int>(J.sets.size()) != P.r)
        throw InputError(InputErrorKind::MalformedPattern,
                         "pattern has " + std::to_string(J.sets.size()) + " components, expected " + std::to_string(P.r));
    for (const auto& set : J.sets) {
        if (static_cast<int>(set.size()) != P.target())
            throw InputError(InputErrorKind::MalformedPattern,
                             "pattern component of size " + std::to_string(set.size()) + ", expected " +
                                 std::to_string(P.target()));
        for (std::size_t a = 0; a < set.size(); ++a) {
            if (set[a] < 1 || set[a] > P.m || (a > 0 && set[a - 1] >= set[a]))
                throw InputError(InputErrorKind::MalformedPattern, "pattern component is not a sorted subset of [1, m]");
        }
    }
}

class DisjointSets {
public:
    explicit DisjointSets(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

bool validate_pattern(const ParahoricData& P, const JugglingPattern& J) {
    check_shape(P, J);
    for (int i = 0; i < P.r; ++i) {
        const auto& next = J.sets[P.wrap(i + 1)];
        for (int j : J.sets[i]) {
            const int image = j + P.gap(i);
            if (image <= P.m && !contains(next, image)) return false;
        }
    }
    return true;
}

std::vector<LVector> all_lvectors(const Instance& I) {
    const auto& P = I.data();
    // per chain and tail length, the dimension vector contributed
    std::vector<std::vector<DimVector>> contrib(P.n);
    for (int j = 1; j <= P.n; ++j) {
        for (int len = 0; len <= P.L; ++len) contrib[j - 1].push_back(indec_dim_vector(P, I.chain(j).end_vertex(), len));
    }
    std::vector<LVector> result;
    LVector current(P.n, 0);
    DimVector filled(P.r, 0);
    const int target = P.target();
    // remaining capacity must be reachable: each later chain adds at most ω per vertex
    auto descend = [&](auto&& self, int j) -> void {
        if (j == P.n) {
            if (std::all_of(filled.begin(), filled.end(), [&](int d) { return d == target; })) result.push_back(current);
            return;
        }
        const int remaining_chains = P.n - j - 1;
        for (int len = 0; len <= P.L; ++len) {
            const auto& add = contrib[j][len];
            bool ok = true;
            for (int v = 0; v < P.r && ok; ++v) {
                const int d = filled[v] + add[v];
                ok = d <= target && d + remaining_chains * P.omega >= target;
            }
            if (!ok) continue;
            for (int v = 0; v < P.r; ++v) filled[v] += add[v];
            current[j] = len;
            self(self, j + 1);
            for (int v = 0; v < P.r; ++v) filled[v] -= add[v];
        }
        current[j] = 0;
    };
    descend(descend, 0);
    return result;
}

std::vector<JugglingPattern> all_patterns(const Instance& I) {
    std::vector<JugglingPattern> patterns;
    for (const auto& l : all_lvectors(I)) patterns.push_back(from_lvector(I, l));
    std::sort(patterns.begin(), patterns.end());
    return patterns;
}

int energy(const ParahoricData& P, const JugglingPattern& J) {
    int total = 0;
    for (int i = 0; i < P.r; ++i) {
        const auto& cur = J.sets[i];
        const auto& prev = J.sets[P.wrap(i - 1)];
        const int shift = P.gap(i - 1);
        for (int j : cur) {
            if (j - shift >= 1 && contains(prev, j - shift)) continue;
            // #([j+1, m] \ J_i)
            const auto above = cur.end() - std::upper_bound(cur.begin(), cur.end(), j);
            total += (P.m - j) - static_cast<int>(above);
        }
    }
    return total;
}

LVector to_lvector(const Instance& I, const JugglingPattern& J) {
    const auto& P = I.data();
    check_shape(P, J);
    LVector l(P.n, 0);
    for (int j = 1; j <= P.n; ++j) {
        const auto& c = I.chain(j);
        int len = 0;
        bool in_tail = false;
        for (const auto& e : c.entries) {
            const bool member = contains(J.sets[e.vertex], e.index);
            if (in_tail && !member)
                throw InputError(InputErrorKind::MalformedPattern, "pattern is not a union of chain tails");
            in_tail = in_tail || member;
            len += member ? 1 : 0;
        }
        l[j - 1] = len;
    }
    return l;
}

JugglingPattern from_lvector(const Instance& I, const LVector& l) {
    const auto& P = I.data();
    if (static_cast<int>(l.size()) != P.n)
        throw InputError(InputErrorKind::MalformedLVector, "l-vector must have one entry per chain");
    JugglingPattern J;
    J.sets.assign(P.r, {});
    for (int j = 1; j <= P.n; ++j) {
        const int len = l[j - 1];
        if (len < 0 || len > P.L)
            throw InputError(InputErrorKind::MalformedLVector, "tail length out of range [0, " + std::to_string(P.L) + "]");
        const auto& entries = I.chain(j).entries;
        for (int p = P.L - len; p < P.L; ++p) J.sets[entries[p].vertex].push_back(entries[p].index);
    }
    for (auto& set : J.sets) {
        if (static_cast<int>(set.size()) != P.target())
            throw InputError(InputErrorKind::MalformedLVector, "l-vector violates the dimension condition");
        std::sort(set.begin(), set.end());
    }
    return J;
}

StratumKey stratum_key(const Instance& I, const JugglingPattern& J) {
    const auto l = to_lvector(I, J);
    StratumKey key;
    for (int j = 1; j <= I.data().n; ++j) {
        if (l[j - 1] > 0) key.parts.emplace_back(I.chain(j).end_vertex(), l[j - 1]);
    }
    std::sort(key.parts.begin(), key.parts.end());
    return key;
}

std::map<StratumKey, std::vector<JugglingPattern>> strata_partition(const Instance& I) {
    std::map<StratumKey, std::vector<JugglingPattern>> strata;
    for (auto& J : all_patterns(I)) {
        auto key = stratum_key(I, J);
        strata[std::move(key)].push_back(std::move(J));
    }
    return strata;
}

int cell_parameter_count(const ParahoricData& P, const JugglingPattern& J) {
    const int m = P.m;
    auto node = [&](int i, int j, int l) { return (i * m + (j - 1)) * m + (l - 1); };
    DisjointSets sets(P.r * m * m);
    std::vector<char> exists(P.r * m * m, 0);
    for (int i = 0; i < P.r; ++i) {
        for (int j : J.sets[i]) {
            for (int l = j + 1; l <= m; ++l) {
                if (!contains(J.sets[i], l)) exists[node(i, j, l)] = 1;
            }
        }
    }
    // mu^{(i+1)}_{j+q, l+q} = mu^{(i)}_{j, l} when j + q <= m and l + q is not in J_{i+1}
    for (int i = 0; i < P.r; ++i) {
        const int q = P.gap(i);
        const int next = P.wrap(i + 1);
        for (int j : J.sets[i]) {
            if (j + q > m) continue;
            for (int l = j + 1; l + q <= m; ++l) {
                if (!exists[node(i, j, l)]) continue;
                if (contains(J.sets[next], l + q)) continue;
                if (!exists[node(next, j + q, l + q)]) continue;
                sets.unite(node(i, j, l), node(next, j + q, l + q));
            }
        }
    }
    int count = 0;
    for (int x = 0; x < static_cast<int>(exists.size()); ++x) {
        if (exists[x] && sets.find(x) == x) ++count;
    }
    return count;
}

bool dominates(const JugglingPattern& J, const JugglingPattern& Jp) {
    if (J.sets.size() != Jp.sets.size()) return false;
    for (std::size_t i = 0; i < J.sets.size(); ++i) {
        if (J.sets[i].size() != Jp.sets[i].size()) return false;
        for (std::size_t q = 0; q < J.sets[i].size(); ++q) {
            if (J.sets[i][q] > Jp.sets[i][q]) return false;
        }
    }
    return true;
}

}  // namespace laumon
