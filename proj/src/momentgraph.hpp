#pragma once

#include <map>
#include <vector>

#include "fixedpoints.hpp"

namespace laumon {

/// Cut-and-paste move: shift `amount` entries from the tail of chain `donor`
/// onto the tail of chain `recipient`.
struct Move {
    int donor = 0;
    int recipient = 0;
    int amount = 0;

    auto operator<=>(const Move&) const = default;
};

/// Torus character sum_j eps[j-1] * e_j + delta * d.
struct Character {
    std::vector<int> eps;
    int delta = 0;

    bool operator==(const Character&) const = default;
};

struct AdmissibleMove {
    Move move;
    LVector target;
    int offset = 0;  // basis index of an added vector minus that of its removed partner
};

struct MomentEdge {
    int source = 0;  // vertex indices into MomentGraph::vertices
    int target = 0;
    Move move;  // the move taking source to target
    Character label;
    int offset = 0;  // > 0
};

struct MomentGraph {
    std::vector<LVector> vertices;         // sorted
    std::vector<JugglingPattern> patterns;  // patterns[v] corresponds to vertices[v]
    std::vector<MomentEdge> edges;          // sorted by (source, target, move)

    int vertex_of(const LVector& l) const;
    std::vector<int> out_degrees() const;
};

/// All aligned moves out of l, in (donor, recipient, amount) order; includes
/// both orientations.
std::vector<AdmissibleMove> admissible_moves(const Instance& I, const LVector& l);

/// The torus label of the orbit joining l and the target of `move`.
Character move_character(const Instance& I, const Move& move, int offset);

/// One oriented edge per one-dimensional orbit, pointing from the endpoint
/// whose cell contains the orbit (positive index offset).
MomentGraph build_graph(const Instance& I);

/// Reflexive-transitive closure of a directed graph given as an edge list;
/// result[a][b] is true iff b is reachable from a. Throws InternalError on a
/// directed cycle.
std::vector<std::vector<bool>> reachability(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Reachability order on the moment graph vertices.
std::vector<std::vector<bool>> reachability_order(const MomentGraph& G);

/// Dominance order on the given patterns: result[a][b] iff patterns[a] >= patterns[b].
std::vector<std::vector<bool>> dominance_order(const std::vector<JugglingPattern>& patterns);

/// All patterns J' with J' <= J in dominance order, sorted.
std::vector<JugglingPattern> cell_closure(const Instance& I, const JugglingPattern& J);

/// The formula delta coefficient l_i - l_j - q printed for S = [n].
int printed_delta(const LVector& l, const Move& move);

/// Alignment stated as a congruence on end vertices: e_i - l_i == e_j - l_j - q (mod r).
bool congruence_aligned(const Instance& I, const LVector& l, const Move& move);

}  // namespace laumon
