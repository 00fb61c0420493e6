#include <doctest.h>

#include <algorithm>

#include "fixedpoints.hpp"

using namespace laumon;

namespace {

JugglingPattern pat(std::vector<IndexSet> sets) { return JugglingPattern{std::move(sets)}; }

}  // namespace

TEST_CASE("validate_pattern") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK(validate_pattern(P, pat({{1}, {2}})));
    CHECK_FALSE(validate_pattern(P, pat({{1}, {1}})));
    CHECK(validate_pattern(make_parahoric(3, 0, 1, {1, 2}), pat({{}, {}})));
}

TEST_CASE("malformed patterns are errors, not false") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK_THROWS_AS(validate_pattern(P, pat({{1}})), InputError);
    CHECK_THROWS_AS(validate_pattern(P, pat({{1, 2}, {2}})), InputError);
    CHECK_THROWS_AS(validate_pattern(P, pat({{3}, {2}})), InputError);
    CHECK_THROWS_AS(validate_pattern(P, pat({{0}, {2}})), InputError);
}

TEST_CASE("all_patterns on the small instances") {
    CHECK(all_patterns(make_parahoric(2, 1, 1, {1})) == std::vector<JugglingPattern>{pat({{1}}), pat({{2}})});
    CHECK(all_patterns(make_parahoric(2, 1, 1, {1, 2})) ==
          std::vector<JugglingPattern>{pat({{1}, {2}}), pat({{2}, {1}}), pat({{2}, {2}})});
    CHECK(all_patterns(make_parahoric(2, 1, 2, {1})) ==
          std::vector<JugglingPattern>{pat({{1, 3}}), pat({{2, 4}}), pat({{3, 4}})});
    CHECK(all_patterns(make_parahoric(3, 0, 2, {1, 3})) == std::vector<JugglingPattern>{pat({{}, {}})});
}

TEST_CASE("energies") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK(energy(P, pat({{1}, {2}})) == 1);
    CHECK(energy(P, pat({{2}, {1}})) == 1);
    CHECK(energy(P, pat({{2}, {2}})) == 0);
    const auto Q = make_parahoric(2, 1, 2, {1});
    CHECK(energy(Q, pat({{1, 3}})) == 2);
    CHECK(energy(Q, pat({{2, 4}})) == 1);
    CHECK(energy(Q, pat({{3, 4}})) == 0);
}

TEST_CASE("l-vectors select chain tails") {
    const Instance Q(make_parahoric(2, 1, 2, {1}));
    CHECK(from_lvector(Q, {2, 0}) == pat({{1, 3}}));
    CHECK(from_lvector(Q, {0, 2}) == pat({{2, 4}}));
    CHECK(from_lvector(Q, {1, 1}) == pat({{3, 4}}));
    CHECK(to_lvector(Q, pat({{3, 4}})) == LVector{1, 1});

    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    CHECK(to_lvector(I, pat({{2}, {2}})) == LVector{1, 1});
    CHECK(from_lvector(I, {1, 1}) == pat({{2}, {2}}));
    CHECK_THROWS_AS(from_lvector(I, {2, 2}), InputError);
    CHECK_THROWS_AS(from_lvector(I, {1}), InputError);
}

TEST_CASE("l-vector round trip over a grid") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> S;
                for (int i = 0; i < n; ++i) {
                    if (mask >> i & 1) S.push_back(i + 1);
                }
                const Instance I(make_parahoric(n, k, 2, S));
                const auto patterns = all_patterns(I);
                CHECK(patterns.size() == all_lvectors(I).size());
                CHECK(std::is_sorted(patterns.begin(), patterns.end()));
                for (const auto& J : patterns) {
                    CHECK(validate_pattern(I.data(), J));
                    CHECK(from_lvector(I, to_lvector(I, J)) == J);
                }
            }
        }
    }
}

TEST_CASE("strata") {
    const Instance X(make_parahoric(2, 1, 1, {1}));
    const auto parts = strata_partition(X);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first.parts == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(parts.begin()->second.size() == 2);

    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    // 0-based end vertices: keys {(2,2)}, {(1,2)}, {(1,1),(2,1)} in 1-based form
    CHECK(stratum_key(I, pat({{1}, {2}})).parts == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(stratum_key(I, pat({{2}, {1}})).parts == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(stratum_key(I, pat({{2}, {2}})).parts == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
    CHECK(strata_partition(I).size() == 3);

    const Instance Z(make_parahoric(3, 0, 1, {1, 2}));
    const auto zero = strata_partition(Z);
    REQUIRE(zero.size() == 1);
    CHECK(zero.begin()->first.parts.empty());
}

TEST_CASE("cell parameter counts") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK(cell_parameter_count(P, pat({{1}, {2}})) == 1);
    CHECK(cell_parameter_count(P, pat({{2}, {2}})) == 0);
    CHECK(cell_parameter_count(make_parahoric(2, 1, 2, {1}), pat({{1, 3}})) == 2);
}

TEST_CASE("cell parameters equal energy") {
    for (int n = 1; n <= 4; ++n) {
        for (int omega = 1; omega <= 2; ++omega) {
            for (int k = 0; k <= n; ++k) {
                for (int mask = 1; mask < (1 << n); ++mask) {
                    std::vector<int> S;
                    for (int i = 0; i < n; ++i) {
                        if (mask >> i & 1) S.push_back(i + 1);
                    }
                    const auto P = make_parahoric(n, k, omega, S);
                    for (const auto& J : all_patterns(P)) CHECK(cell_parameter_count(P, J) == energy(P, J));
                }
            }
        }
    }
}

TEST_CASE("dominance") {
    CHECK(dominates(pat({{1}, {2}}), pat({{2}, {2}})));
    CHECK_FALSE(dominates(pat({{2}, {2}}), pat({{1}, {2}})));
    CHECK_FALSE(dominates(pat({{1}, {2}}), pat({{2}, {1}})));
    CHECK(dominates(pat({{1, 3}}), pat({{2, 4}})));
    CHECK(dominates(pat({{2, 4}}), pat({{3, 4}})));
    CHECK(dominates(pat({{3, 4}}), pat({{3, 4}})));
}
