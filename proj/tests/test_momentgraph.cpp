#include <doctest.h>

#include "momentgraph.hpp"

using namespace laumon;

namespace {

Character chr(std::vector<int> eps, int delta) { return Character{std::move(eps), delta}; }

}  // namespace

TEST_CASE("admissible moves on the offset-two loop") {
    const Instance Q(make_parahoric(2, 1, 2, {1}));
    const auto moves = admissible_moves(Q, {2, 0});
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].move == Move{1, 2, 1});
    CHECK(moves[0].target == LVector{1, 1});
    CHECK(moves[0].offset == 3);
    CHECK(moves[1].move == Move{1, 2, 2});
    CHECK(moves[1].target == LVector{0, 2});
    CHECK(moves[1].offset == 1);

    const auto back = admissible_moves(Q, {1, 1});
    bool found = false;
    for (const auto& m : back) {
        if (m.move == Move{2, 1, 1}) {
            found = true;
            CHECK(m.offset == -3);
        }
    }
    CHECK(found);
}

TEST_CASE("alignment rejects a vertex mismatch") {
    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    const auto moves = admissible_moves(I, {2, 0});
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].move == Move{1, 2, 1});
    CHECK(moves[0].target == LVector{1, 1});
    CHECK(moves[0].offset == 1);
    CHECK_FALSE(congruence_aligned(I, {2, 0}, Move{1, 2, 2}));
    CHECK(congruence_aligned(I, {2, 0}, Move{1, 2, 1}));
}

TEST_CASE("moment graph of the two-line instance") {
    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    const auto G = build_graph(I);
    CHECK(G.vertices.size() == 3);
    REQUIRE(G.edges.size() == 2);
    const int top1 = G.vertex_of({2, 0}), top2 = G.vertex_of({0, 2}), bottom = G.vertex_of({1, 1});
    std::map<int, Character> labels;
    for (const auto& e : G.edges) {
        CHECK(e.target == bottom);
        labels[e.source] = e.label;
    }
    CHECK(labels.at(top1) == chr({-1, 1}, 1));  // e2 - e1 + d
    CHECK(labels.at(top2) == chr({1, -1}, 1));  // e1 - e2 + d
}

TEST_CASE("moment graph of the projective line") {
    const Instance X(make_parahoric(2, 1, 1, {1}));
    const auto G = build_graph(X);
    CHECK(G.vertices.size() == 2);
    REQUIRE(G.edges.size() == 1);
    CHECK(G.vertices[G.edges[0].source] == LVector{1, 0});
    CHECK(G.vertices[G.edges[0].target] == LVector{0, 1});
    CHECK(G.edges[0].label == chr({-1, 1}, 1));
}

TEST_CASE("out-degrees equal energies") {
    const Instance Q(make_parahoric(2, 1, 2, {1}));
    const auto G = build_graph(Q);
    const auto deg = G.out_degrees();
    CHECK(deg[G.vertex_of({2, 0})] == 2);
    CHECK(deg[G.vertex_of({0, 2})] == 1);
    CHECK(deg[G.vertex_of({1, 1})] == 0);
    for (std::size_t v = 0; v < G.vertices.size(); ++v) CHECK(deg[v] == energy(Q.data(), G.patterns[v]));
}

TEST_CASE("coordinate delta differs from the S=[n] formula for general S") {
    const Instance Q(make_parahoric(2, 1, 2, {1}));
    const auto moves = admissible_moves(Q, {2, 0});
    CHECK(moves[0].offset == 3);
    CHECK(printed_delta({2, 0}, moves[0].move) == 1);

    const Instance I(make_parahoric(3, 1, 2, {1, 2, 3}));
    for (const auto& l : all_lvectors(I)) {
        for (const auto& m : admissible_moves(I, l)) CHECK(printed_delta(l, m.move) == m.offset);
    }
}

TEST_CASE("reachability and dominance") {
    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    const auto G = build_graph(I);
    const auto R = reachability_order(G);
    const int a = G.vertex_of({2, 0}), b = G.vertex_of({0, 2}), c = G.vertex_of({1, 1});
    CHECK(R[a][c]);
    CHECK(R[b][c]);
    CHECK_FALSE(R[a][b]);
    CHECK_FALSE(R[b][a]);
    CHECK(R[a][a]);
    CHECK(R == dominance_order(G.patterns));

    const Instance Q(make_parahoric(2, 1, 2, {1}));
    const auto H = build_graph(Q);
    const auto RQ = reachability_order(H);
    const int x = H.vertex_of({2, 0}), y = H.vertex_of({0, 2}), z = H.vertex_of({1, 1});
    CHECK(RQ[x][y]);
    CHECK(RQ[y][z]);
    CHECK(RQ[x][z]);
    CHECK_FALSE(RQ[z][x]);
    CHECK(RQ == dominance_order(H.patterns));
}

TEST_CASE("single vertex graph") {
    const Instance Z(make_parahoric(3, 0, 1, {1, 2, 3}));
    const auto G = build_graph(Z);
    CHECK(G.vertices.size() == 1);
    CHECK(G.edges.empty());
    CHECK(reachability_order(G) == std::vector<std::vector<bool>>{{true}});
}

TEST_CASE("reachability rejects a cycle") {
    CHECK_THROWS_AS(reachability(2, {{0, 1}, {1, 0}}), InternalError);
    const auto R = reachability(3, {{0, 1}, {1, 2}});
    CHECK(R[0][2]);
    CHECK_FALSE(R[2][0]);
}

TEST_CASE("cell closures") {
    const Instance I(make_parahoric(2, 1, 1, {1, 2}));
    CHECK(cell_closure(I, JugglingPattern{{{1}, {2}}}) ==
          std::vector<JugglingPattern>{JugglingPattern{{{1}, {2}}}, JugglingPattern{{{2}, {2}}}});
    CHECK(cell_closure(I, JugglingPattern{{{2}, {2}}}) == std::vector<JugglingPattern>{JugglingPattern{{{2}, {2}}}});
    const Instance Q(make_parahoric(2, 1, 2, {1}));
    CHECK(cell_closure(Q, JugglingPattern{{{1, 3}}}).size() == 3);
}

TEST_CASE("out-degree and order isomorphism across a grid") {
    for (int n = 1; n <= 4; ++n) {
        for (int omega = 1; omega <= 2; ++omega) {
            for (int k = 0; k <= n; ++k) {
                for (int mask = 1; mask < (1 << n); ++mask) {
                    std::vector<int> S;
                    for (int i = 0; i < n; ++i) {
                        if (mask >> i & 1) S.push_back(i + 1);
                    }
                    const Instance I(make_parahoric(n, k, omega, S));
                    const auto G = build_graph(I);
                    const auto deg = G.out_degrees();
                    for (std::size_t v = 0; v < G.vertices.size(); ++v) CHECK(deg[v] == energy(I.data(), G.patterns[v]));
                    CHECK(reachability_order(G) == dominance_order(G.patterns));
                }
            }
        }
    }
}
