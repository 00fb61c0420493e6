#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "desing.hpp"
#include "geometry.hpp"
#include "momentgraph.hpp"

namespace laumon {

using Json = nlohmann::json;  // std::map-backed, so keys are emitted sorted

Json to_json(const ParahoricData& P);
ParahoricData parahoric_from_json(const Json& j);

Json to_json(const JugglingPattern& J);
JugglingPattern pattern_from_json(const Json& j);

/// Keyed by chain label as a decimal string.
Json lvector_to_json(const LVector& l);
LVector lvector_from_json(const Json& j, int n);

/// {"eps": {"label": coeff, ...nonzero only}, "delta": d}
Json to_json(const Character& c);
Character character_from_json(const Json& j, int n);

Json to_json(const Move& m);
Move move_from_json(const Json& j);

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// Signed text form of a character, positive terms first: "+e2 -e1 +3d".
std::string character_text(const Character& c);

struct PatternRecord {
    JugglingPattern pattern;
    int energy = 0;
    LVector lvector;
    std::vector<std::pair<int, int>> stratum;  // (end element of S, length)

    bool operator==(const PatternRecord&) const = default;
};

std::vector<PatternRecord> pattern_records(const Instance& I);

/// {"instance": ..., "patterns": [...]}
Json enumerate_document(const Instance& I);
std::vector<PatternRecord> patterns_from_document(const Json& doc);

/// {"instance": ..., "graph": {"vertices": [...], "edges": [...]}}
Json graph_document(const Instance& I, const MomentGraph& G);
MomentGraph graph_from_document(const Json& doc);

std::string graph_dot(const Instance& I, const MomentGraph& G);

Json components_document(const Instance& I);
Json poincare_document(const Instance& I);
Json autdim_document(const ParahoricData& P);
Json desing_document(const Instance& I, EnumerationBudget budget = {});

/// Projection of one pattern, or, with no pattern, the image check.
Json project_document(const Instance& I, const std::vector<int>& Sp, const JugglingPattern* J);
/// Lift of a pattern over P.S to the larger set S.
Json lift_document(const ParahoricData& P, const std::vector<int>& S, const JugglingPattern& J);

/// Pattern text "1,3;2,4": sets separated by ';', entries by ','. An empty
/// set is written as an empty field.
JugglingPattern parse_pattern_text(const std::string& text, int r);
std::string pattern_text(const JugglingPattern& J);

/// "{1,3} {2,4}"
std::string pattern_display(const JugglingPattern& J);

}  // namespace laumon
