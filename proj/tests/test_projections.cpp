#include <doctest.h>

#include "projections.hpp"

using namespace laumon;

namespace {

JugglingPattern pat(std::vector<IndexSet> sets) { return JugglingPattern{std::move(sets)}; }

}  // namespace

TEST_CASE("restriction to a sub-instance") {
    const auto P = make_parahoric(2, 1, 1, {1, 2});
    CHECK(project_pattern(P, {1}, pat({{1}, {2}})) == pat({{1}}));
    CHECK(project_pattern(P, {1}, pat({{2}, {1}})) == pat({{2}}));
    CHECK(project_pattern(P, {1}, pat({{2}, {2}})) == pat({{2}}));
    CHECK(project_pattern(P, {1, 2}, pat({{2}, {1}})) == pat({{2}, {1}}));
    CHECK(project_pattern(make_parahoric(3, 0, 1, {1, 3}), {3}, pat({{}, {}})) == pat({{}}));
}

TEST_CASE("target must be a subset") {
    const auto P = make_parahoric(3, 1, 1, {1, 2});
    try {
        project_pattern(P, {3}, pat({{1}, {2}}));
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(e.kind() == InputErrorKind::NotASubset);
    }
    CHECK_THROWS_AS(sub_instance(P, {}), InputError);
}

TEST_CASE("lift to the two-vertex instance") {
    const auto small = make_parahoric(2, 1, 1, {1});
    CHECK(lift_pattern(small, {1, 2}, pat({{1}})) == pat({{1}, {2}}));
    const auto lifted = lift_pattern(small, {1, 2}, pat({{2}}));
    CHECK(lifted.sets[0] == IndexSet{2});
    CHECK(project_pattern(make_parahoric(2, 1, 1, {1, 2}), {1}, lifted) == pat({{2}}));
    CHECK(lift_pattern(small, {1}, pat({{2}})) == pat({{2}}));
    CHECK_THROWS_AS(lift_pattern(make_parahoric(2, 1, 1, {1, 2}), {1}, pat({{2}, {2}})), InputError);
}

TEST_CASE("lift is a section over the grid") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> full(n);
        for (int i = 0; i < n; ++i) full[i] = i + 1;
        for (int k = 0; k <= n; ++k) {
            for (int omega = 1; omega <= 2; ++omega) {
                const auto P = make_parahoric(n, k, omega, full);
                for (int mask = 1; mask < (1 << n); ++mask) {
                    std::vector<int> Sp;
                    for (int i = 0; i < n; ++i) {
                        if (mask >> i & 1) Sp.push_back(i + 1);
                    }
                    const Instance small(sub_instance(P, Sp));
                    for (const auto& Jp : all_patterns(small)) {
                        const auto J = lift_pattern(small.data(), full, Jp);
                        CHECK(validate_pattern(P, J));
                        CHECK(project_pattern(P, Sp, J) == Jp);
                    }
                    CHECK(image_check(P, Sp));
                }
            }
        }
    }
}

TEST_CASE("projected l-vectors recount tail entries") {
    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    const Instance X(make_parahoric(2, 1, 1, {1}));
    for (const auto& J : all_patterns(I)) {
        const auto image = project_pattern(I.data(), {1}, J);
        CHECK(project_lvector(I, {1}, to_lvector(I, J)) == to_lvector(X, image));
    }
}

TEST_CASE("image check") {
    CHECK(image_check(make_parahoric(2, 1, 1, {1, 2}), {1}));
    CHECK(image_check(make_parahoric(4, 2, 2, {1, 3, 4}), {1, 3, 4}));
}

TEST_CASE("projection order does not matter") {
    CHECK(commutation_check(make_parahoric(3, 1, 1, {1, 2, 3}), {1, 2}));
    CHECK(commutation_check(make_parahoric(3, 1, 1, {1, 2, 3}), {2}));
    CHECK(commutation_check(make_parahoric(4, 2, 1, {1, 2, 3, 4}), {2, 4}));
    CHECK(commutation_check(make_parahoric(5, 2, 1, {1, 2, 3, 4, 5}), {1, 3, 5}));
    CHECK(commutation_check(make_parahoric(6, 3, 1, {1, 2, 3, 4, 5, 6}), {1, 2, 4, 5}));
    CHECK_THROWS_AS(commutation_check(make_parahoric(2, 1, 1, {1, 2}), {1, 2}), InputError);
}

TEST_CASE("projection does not increase cell parameters") {
    const auto P = make_parahoric(4, 2, 2, {1, 2, 3, 4});
    const auto Pp = sub_instance(P, {2, 3});
    for (const auto& J : all_patterns(P)) {
        CHECK(cell_parameter_count(Pp, project_pattern(P, {2, 3}, J)) <= cell_parameter_count(P, J));
    }
}
