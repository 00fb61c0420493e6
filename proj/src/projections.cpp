#include "projections.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace laumon {

namespace {

int index_in(const std::vector<int>& S, int s) {
    auto it = std::lower_bound(S.begin(), S.end(), s);
    return (it != S.end() && *it == s) ? static_cast<int>(it - S.begin()) : -1;
}

void require_subset(const std::vector<int>& small, const std::vector<int>& big) {
    for (int s : small) {
        if (index_in(big, s) < 0)
            throw InputError(InputErrorKind::NotASubset,
                             "element " + std::to_string(s) + " of the target set is not in the source set");
    }
}

std::vector<int> normalized(std::vector<int> S) {
    std::sort(S.begin(), S.end());
    return S;
}

}  // namespace

ParahoricData sub_instance(const ParahoricData& P, const std::vector<int>& Sp) {
    auto target = make_parahoric(P.n, P.k, P.omega, Sp);
    require_subset(target.S, P.S);
    return target;
}

JugglingPattern project_pattern(const ParahoricData& P, const std::vector<int>& Sp, const JugglingPattern& J) {
    const auto Pp = sub_instance(P, Sp);
    if (static_cast<int>(J.sets.size()) != P.r)
        throw InputError(InputErrorKind::MalformedPattern, "pattern arity does not match the source instance");
    JugglingPattern out;
    for (int s : Pp.S) out.sets.push_back(J.sets[index_in(P.S, s)]);
    return out;
}

LVector project_lvector(const Instance& I, const std::vector<int>& Sp, const LVector& l) {
    const auto& P = I.data();
    const auto Pp = sub_instance(P, Sp);
    LVector out(P.n, 0);
    for (int j = 1; j <= P.n; ++j) {
        const auto& entries = I.chain(j).entries;
        for (int p = P.L - l[j - 1]; p < P.L; ++p) {
            if (index_in(Pp.S, P.S[entries[p].vertex]) >= 0) ++out[j - 1];
        }
    }
    return out;
}

JugglingPattern lift_pattern(const ParahoricData& Pp, const std::vector<int>& S, const JugglingPattern& Jp) {
    const auto P = make_parahoric(Pp.n, Pp.k, Pp.omega, S);
    require_subset(Pp.S, P.S);
    if (!validate_pattern(Pp, Jp)) throw InputError(InputErrorKind::MalformedPattern, "pattern to lift is not a fixed point");

    const int n = P.n, m = P.m, target = P.target();
    std::map<int, IndexSet> filled;
    for (int t = 0; t < Pp.r; ++t) filled[Pp.S[t]] = Jp.sets[t];

    auto cyclic_distance = [n](int from, int to) {
        const int d = ((to - from) % n + n) % n;
        return d == 0 ? n : d;
    };

    while (static_cast<int>(filled.size()) < P.r) {
        // smallest unfilled vertex whose predecessor in S is already filled
        int s0 = -1;
        for (int i = 0; i < P.r && s0 < 0; ++i) {
            if (filled.count(P.S[i])) continue;
            if (filled.count(P.S[P.wrap(i - 1)])) s0 = P.S[i];
        }
        if (s0 < 0) throw InternalError("lift found no insertable vertex");

        auto after = filled.upper_bound(s0);
        const auto& succ = (after == filled.end()) ? *filled.begin() : *after;
        const auto& pred = (after == filled.begin()) ? *filled.rbegin() : *std::prev(after);
        const int back = cyclic_distance(pred.first, s0);
        const int ahead = cyclic_distance(s0, succ.first);

        std::set<int> built;
        for (int j : pred.second) {
            if (j + back <= m) built.insert(j + back);
        }
        while (static_cast<int>(built.size()) < target) {
            int best = -1;
            for (int p = m; p >= 1 && best < 0; --p) {
                if (built.count(p)) continue;
                const bool beyond = p >= m - ahead + 1;
                const bool pulled_back = std::binary_search(succ.second.begin(), succ.second.end(), p + ahead);
                if (beyond || pulled_back) best = p;
            }
            if (best < 0) throw InternalError("lift pool exhausted at vertex " + std::to_string(s0));
            built.insert(best);
        }
        filled[s0] = IndexSet(built.begin(), built.end());
    }

    JugglingPattern J;
    for (int s : P.S) J.sets.push_back(filled[s]);
    if (!validate_pattern(P, J)) throw InternalError("lifted pattern is not a fixed point");
    return J;
}

bool image_check(const Instance& I, const std::vector<int>& Sp) {
    const auto Pp = sub_instance(I.data(), Sp);
    std::set<JugglingPattern> image;
    for (const auto& J : all_patterns(I)) image.insert(project_pattern(I.data(), Pp.S, J));
    const auto expected = all_patterns(Pp);
    return std::equal(image.begin(), image.end(), expected.begin(), expected.end());
}

bool commutation_check(const Instance& I, const std::vector<int>& T) {
    const auto& P = I.data();
    const auto removed = normalized(T);
    require_subset(removed, P.S);
    if (removed.size() >= P.S.size())
        throw InputError(InputErrorKind::EmptySubset, "cannot project out every vertex");
    if (removed.size() <= 1) return true;

    std::vector<std::vector<int>> orderings;
    auto perm = removed;
    if (perm.size() <= 3) {
        do orderings.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::mt19937 rng(0x5eed);
        for (int s = 0; s < 8; ++s) {
            std::shuffle(perm.begin(), perm.end(), rng);
            orderings.push_back(perm);
        }
    }

    const auto patterns = all_patterns(I);
    std::vector<std::vector<JugglingPattern>> results;
    for (const auto& order : orderings) {
        std::vector<JugglingPattern> images;
        for (const auto& J : patterns) {
            ParahoricData cur = P;
            JugglingPattern image = J;
            for (int t : order) {
                std::vector<int> next;
                for (int s : cur.S) {
                    if (s != t) next.push_back(s);
                }
                image = project_pattern(cur, next, image);
                cur = sub_instance(cur, next);
            }
            images.push_back(std::move(image));
        }
        results.push_back(std::move(images));
    }
    return std::all_of(results.begin(), results.end(), [&](const auto& r) { return r == results.front(); });
}

}  // namespace laumon
