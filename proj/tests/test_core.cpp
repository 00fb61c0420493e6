#include <doctest.h>

#include <optional>
#include <set>

#include "core.hpp"

using namespace laumon;

TEST_CASE("derived fields") {
    auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK(P.r == 2);
    CHECK(P.gaps == std::vector<int>{1, 1});
    CHECK(P.m == 2);
    CHECK(P.L == 2);

    P = make_parahoric(2, 1, 1, {1});
    CHECK(P.r == 1);
    CHECK(P.gaps == std::vector<int>{2});
    CHECK(P.m == 2);
    CHECK(P.L == 1);

    P = make_parahoric(2, 1, 2, {1});
    CHECK(P.gaps == std::vector<int>{2});
    CHECK(P.m == 4);
    CHECK(P.L == 2);

    P = make_parahoric(5, 2, 1, {4, 1, 3});
    CHECK(P.S == std::vector<int>{1, 3, 4});
    CHECK(P.gaps == std::vector<int>{2, 1, 2});
}

TEST_CASE("each validation failure has its own kind") {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const InputError& e) {
            return e.kind();
        }
        return InputErrorKind::Other;
    };
    CHECK(kind_of([] { make_parahoric(0, 0, 1, {1}); }) == InputErrorKind::NonPositiveN);
    CHECK(kind_of([] { make_parahoric(2, 1, 0, {1}); }) == InputErrorKind::OmegaBelowOne);
    CHECK(kind_of([] { make_parahoric(2, 3, 1, {1}); }) == InputErrorKind::KOutOfRange);
    CHECK(kind_of([] { make_parahoric(2, -1, 1, {1}); }) == InputErrorKind::KOutOfRange);
    CHECK(kind_of([] { make_parahoric(2, 1, 1, {}); }) == InputErrorKind::EmptySubset);
    CHECK(kind_of([] { make_parahoric(3, 1, 1, {1, 1}); }) == InputErrorKind::DuplicateEntry);
    CHECK(kind_of([] { make_parahoric(3, 1, 1, {1, 4}); }) == InputErrorKind::SubsetOutOfRange);
    CHECK(kind_of([] { make_parahoric(3, 1, 1, {0}); }) == InputErrorKind::SubsetOutOfRange);
}

TEST_CASE("ambient shift maps") {
    auto U = build_ambient(make_parahoric(2, 1, 1, {1, 2}));
    CHECK(U.offsets == std::vector<int>{1, 1});
    CHECK(U.apply(0, 1) == 2);
    CHECK_FALSE(U.apply(0, 2).has_value());

    U = build_ambient(make_parahoric(2, 1, 1, {1}));
    CHECK_FALSE(U.apply(0, 1).has_value());
    CHECK_FALSE(U.apply(0, 2).has_value());

    U = build_ambient(make_parahoric(2, 1, 2, {1}));
    CHECK(U.apply(0, 1) == 3);
    CHECK(U.apply(0, 2) == 4);
    CHECK_FALSE(U.apply(0, 3).has_value());
    CHECK_FALSE(U.apply(0, 4).has_value());
}

TEST_CASE("nilpotency: going around the cycle omega r times kills everything") {
    for (int n = 1; n <= 5; ++n) {
        for (int omega = 1; omega <= 2; ++omega) {
            const auto P = make_parahoric(n, 0, omega, n >= 3 ? std::vector<int>{1, 3} : std::vector<int>{1});
            const auto U = build_ambient(P);
            for (int v = 0; v < P.r; ++v) {
                for (int t = 1; t <= P.m; ++t) {
                    std::optional<int> x = t;
                    int vertex = v;
                    for (int step = 0; step < P.L && x; ++step) x = U.apply(P.wrap(vertex++), *x);
                    CHECK_FALSE(x.has_value());
                }
            }
        }
    }
}

TEST_CASE("chains of the two-vertex instance") {
    const auto cs = chains(make_parahoric(2, 1, 1, {1, 2}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].label == 1);
    CHECK(cs[0].entries == std::vector<BasisVector>{{0, 1}, {1, 2}});
    CHECK(cs[1].label == 2);
    CHECK(cs[1].entries == std::vector<BasisVector>{{1, 1}, {0, 2}});
}

TEST_CASE("chains of the loop with offset two") {
    const auto cs = chains(make_parahoric(2, 1, 2, {1}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].entries == std::vector<BasisVector>{{0, 1}, {0, 3}});
    CHECK(cs[1].entries == std::vector<BasisVector>{{0, 2}, {0, 4}});
}

TEST_CASE("chains partition the basis and carry constant labels") {
    for (int n = 1; n <= 6; ++n) {
        for (int omega = 1; omega <= 2; ++omega) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> S;
                for (int i = 0; i < n; ++i) {
                    if (mask >> i & 1) S.push_back(i + 1);
                }
                const auto P = make_parahoric(n, 0, omega, S);
                const Instance I(P);
                std::set<BasisVector> seen;
                DimVector total(P.r, 0);
                for (const auto& c : I.all_chains()) {
                    CHECK(static_cast<int>(c.entries.size()) == P.L);
                    for (const auto& e : c.entries) {
                        CHECK(torus_label(P, e) == c.label);
                        seen.insert(e);
                    }
                    const auto d = indec_dim_vector(P, c.end_vertex(), P.L);
                    for (int v = 0; v < P.r; ++v) total[v] += d[v];
                }
                CHECK(static_cast<int>(seen.size()) == P.r * P.m);
                CHECK(total == DimVector(P.r, P.m));
            }
        }
    }
}

TEST_CASE("indecomposable dimension vectors") {
    CHECK(indec_dim_vector(0, 1, 2) == DimVector{1, 0});
    CHECK(indec_dim_vector(0, 2, 2) == DimVector{1, 1});
    CHECK(indec_dim_vector(1, 0, 3) == DimVector{0, 0, 0});
    CHECK(indec_dim_vector(0, 5, 2) == DimVector{3, 2});
    CHECK_THROWS_AS(indec_dim_vector(make_parahoric(2, 1, 1, {1, 2}), 0, 3), InputError);
}

TEST_CASE("chain end vertices use the floor of the preceding label") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    const Instance I(P);
    CHECK(I.chain(1).end_vertex() == 1);
    CHECK(floor_vertex(P, 2) == 1);
    // the unshifted floor of the label itself points elsewhere
    CHECK(floor_vertex(P, 1) == 0);
}

TEST_CASE("locate inverts the chain listing") {
    const Instance I(make_parahoric(5, 2, 2, {2, 5}));
    for (const auto& c : I.all_chains()) {
        for (int p = 0; p < static_cast<int>(c.entries.size()); ++p) {
            const auto where = I.locate(c.entries[p]);
            CHECK(where.label == c.label);
            CHECK(where.position == p);
        }
    }
}
