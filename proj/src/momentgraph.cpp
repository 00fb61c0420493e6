#include "momentgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <tuple>

namespace laumon {

int MomentGraph::vertex_of(const LVector& l) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
    if (it == vertices.end() || *it != l) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> MomentGraph::out_degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& e : edges) ++deg[e.source];
    return deg;
}

std::vector<AdmissibleMove> admissible_moves(const Instance& I, const LVector& l) {
    const auto& P = I.data();
    std::vector<AdmissibleMove> moves;
    for (int donor = 1; donor <= P.n; ++donor) {
        const auto& from = I.chain(donor).entries;
        const int li = l[donor - 1];
        for (int recipient = 1; recipient <= P.n; ++recipient) {
            if (recipient == donor) continue;
            const auto& to = I.chain(recipient).entries;
            const int lj = l[recipient - 1];
            const int max_amount = std::min(li, P.L - lj);
            for (int q = 1; q <= max_amount; ++q) {
                // m-th removed entry sits at position L - li + m, the m-th
                // added one at L - lj - q + m (0-based m)
                bool aligned = true;
                int offset = 0;
                for (int step = 0; step < q && aligned; ++step) {
                    const auto& removed = from[P.L - li + step];
                    const auto& added = to[P.L - lj - q + step];
                    if (removed.vertex != added.vertex) {
                        aligned = false;
                        break;
                    }
                    const int d = added.index - removed.index;
                    if (step == 0) {
                        offset = d;
                    } else if (d != offset) {
                        throw InternalError("index offset not constant along an aligned move");
                    }
                }
                if (!aligned) continue;
                LVector target = l;
                target[donor - 1] -= q;
                target[recipient - 1] += q;
                moves.push_back(AdmissibleMove{Move{donor, recipient, q}, std::move(target), offset});
            }
        }
    }
    return moves;
}

Character move_character(const Instance& I, const Move& move, int offset) {
    // weight of v_t at a vector of chain j is (t - 1) delta + e_j; added minus removed
    Character c;
    c.eps.assign(I.data().n, 0);
    c.eps[move.recipient - 1] += 1;
    c.eps[move.donor - 1] -= 1;
    c.delta = offset;
    return c;
}

MomentGraph build_graph(const Instance& I) {
    MomentGraph G;
    G.vertices = all_lvectors(I);
    std::sort(G.vertices.begin(), G.vertices.end());
    for (const auto& l : G.vertices) G.patterns.push_back(from_lvector(I, l));
    for (int v = 0; v < static_cast<int>(G.vertices.size()); ++v) {
        for (auto& am : admissible_moves(I, G.vertices[v])) {
            if (am.offset == 0)
                throw InternalError("zero index offset on an admissible move in " + I.data().describe());
            if (am.offset < 0) continue;  // recorded from the other endpoint
            const int w = G.vertex_of(am.target);
            if (w < 0) throw InternalError("move target is not a fixed point");
            G.edges.push_back(MomentEdge{v, w, am.move, move_character(I, am.move, am.offset), am.offset});
        }
    }
    std::sort(G.edges.begin(), G.edges.end(), [](const MomentEdge& a, const MomentEdge& b) {
        return std::tie(a.source, a.target, a.move) < std::tie(b.source, b.target, b.move);
    });
    return G;
}

std::vector<std::vector<bool>> reachability(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    const int V = vertex_count;
    std::vector<std::vector<int>> out(V);
    std::vector<int> indegree(V, 0);
    for (auto [a, b] : edges) {
        out[a].push_back(b);
        ++indegree[b];
    }
    std::deque<int> ready;
    for (int v = 0; v < V; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::vector<int> order;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (int w : out[v]) {
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != V) throw InternalError("moment graph contains a directed cycle");

    const int words = (V + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(V, std::vector<std::uint64_t>(words, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        reach[v][v / 64] |= std::uint64_t{1} << (v % 64);
        for (int w : out[v]) {
            for (int x = 0; x < words; ++x) reach[v][x] |= reach[w][x];
        }
    }
    std::vector<std::vector<bool>> result(V, std::vector<bool>(V, false));
    for (int a = 0; a < V; ++a) {
        for (int b = 0; b < V; ++b) result[a][b] = (reach[a][b / 64] >> (b % 64)) & 1;
    }
    return result;
}

std::vector<std::vector<bool>> reachability_order(const MomentGraph& G) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(G.edges.size());
    for (const auto& e : G.edges) edges.emplace_back(e.source, e.target);
    return reachability(static_cast<int>(G.vertices.size()), edges);
}

std::vector<std::vector<bool>> dominance_order(const std::vector<JugglingPattern>& patterns) {
    const auto V = patterns.size();
    std::vector<std::vector<bool>> result(V, std::vector<bool>(V, false));
    for (std::size_t a = 0; a < V; ++a) {
        for (std::size_t b = 0; b < V; ++b) result[a][b] = dominates(patterns[a], patterns[b]);
    }
    return result;
}

std::vector<JugglingPattern> cell_closure(const Instance& I, const JugglingPattern& J) {
    if (!validate_pattern(I.data(), J)) throw InputError(InputErrorKind::MalformedPattern, "not a fixed point");
    std::vector<JugglingPattern> closure;
    for (auto& Jp : all_patterns(I)) {
        if (dominates(J, Jp)) closure.push_back(std::move(Jp));
    }
    return closure;
}

int printed_delta(const LVector& l, const Move& move) {
    return l[move.donor - 1] - l[move.recipient - 1] - move.amount;
}

bool congruence_aligned(const Instance& I, const LVector& l, const Move& move) {
    const int r = I.data().r;
    const int lhs = I.chain(move.donor).end_vertex() - l[move.donor - 1];
    const int rhs = I.chain(move.recipient).end_vertex() - l[move.recipient - 1] - move.amount;
    return ((lhs - rhs) % r + r) % r == 0;
}

}  // namespace laumon
