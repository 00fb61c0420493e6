#include "serialize.hpp"

#include <algorithm>
#include <sstream>

#include "oracle.hpp"
#include "projections.hpp"

namespace laumon {

namespace {

template <class F>
auto json_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(InputErrorKind::Other, std::string("malformed document: ") + e.what());
    }
}

}  // namespace

Json to_json(const ParahoricData& P) {
    return Json{{"n", P.n}, {"k", P.k}, {"omega", P.omega}, {"S", P.S}};
}

ParahoricData parahoric_from_json(const Json& j) {
    return json_guard([&] {
        return make_parahoric(j.at("n").get<int>(), j.at("k").get<int>(), j.at("omega").get<int>(),
                              j.at("S").get<std::vector<int>>());
    });
}

Json to_json(const JugglingPattern& J) { return Json(J.sets); }

JugglingPattern pattern_from_json(const Json& j) {
    return json_guard([&] { return JugglingPattern{j.get<std::vector<IndexSet>>()}; });
}

Json lvector_to_json(const LVector& l) {
    Json out = Json::object();
    for (std::size_t j = 0; j < l.size(); ++j) out[std::to_string(j + 1)] = l[j];
    return out;
}

LVector lvector_from_json(const Json& j, int n) {
    return json_guard([&] {
        LVector l(n, 0);
        for (const auto& [key, value] : j.items()) {
            const int label = std::stoi(key);
            if (label < 1 || label > n) throw InputError(InputErrorKind::MalformedLVector, "chain label out of range");
            l[label - 1] = value.get<int>();
        }
        return l;
    });
}

Json to_json(const Character& c) {
    Json eps = Json::object();
    for (std::size_t j = 0; j < c.eps.size(); ++j) {
        if (c.eps[j] != 0) eps[std::to_string(j + 1)] = c.eps[j];
    }
    return Json{{"eps", eps}, {"delta", c.delta}};
}

Character character_from_json(const Json& j, int n) {
    return json_guard([&] {
        Character c{std::vector<int>(n, 0), j.at("delta").get<int>()};
        for (const auto& [key, value] : j.at("eps").items()) {
            const int label = std::stoi(key);
            if (label < 1 || label > n) throw InputError(InputErrorKind::Other, "character label out of range");
            c.eps[label - 1] = value.get<int>();
        }
        return c;
    });
}

Json to_json(const Move& m) { return Json{{"donor", m.donor}, {"recipient", m.recipient}, {"amount", m.amount}}; }

Move move_from_json(const Json& j) {
    return json_guard([&] {
        return Move{j.at("donor").get<int>(), j.at("recipient").get<int>(), j.at("amount").get<int>()};
    });
}

Json to_json(const IntPolynomial& p) { return Json{{"coefficients", p.coeffs}, {"text", p.to_string()}}; }

IntPolynomial polynomial_from_json(const Json& j) {
    return json_guard([&] { return IntPolynomial{j.at("coefficients").get<std::vector<long long>>()}; });
}

std::string character_text(const Character& c) {
    std::ostringstream out;
    bool first = true;
    auto term = [&](int coeff, const std::string& symbol) {
        if (!first) out << ' ';
        first = false;
        out << (coeff > 0 ? '+' : '-');
        if (std::abs(coeff) != 1) out << std::abs(coeff);
        out << symbol;
    };
    for (int sign : {1, -1}) {
        for (std::size_t j = 0; j < c.eps.size(); ++j) {
            if (c.eps[j] * sign > 0) term(c.eps[j], "e" + std::to_string(j + 1));
        }
    }
    if (c.delta != 0) term(c.delta, "d");
    return first ? "0" : out.str();
}

std::vector<PatternRecord> pattern_records(const Instance& I) {
    const auto& P = I.data();
    std::vector<PatternRecord> records;
    for (const auto& J : all_patterns(I)) {
        PatternRecord rec{J, energy(P, J), to_lvector(I, J), {}};
        for (const auto& [end, len] : stratum_key(I, J).parts) rec.stratum.emplace_back(P.S[end], len);
        records.push_back(std::move(rec));
    }
    return records;
}

Json enumerate_document(const Instance& I) {
    Json patterns = Json::array();
    for (const auto& rec : pattern_records(I)) {
        Json stratum = Json::array();
        for (const auto& [end, len] : rec.stratum) stratum.push_back(Json{{"end", end}, {"length", len}});
        patterns.push_back(Json{{"J", to_json(rec.pattern)},
                                {"energy", rec.energy},
                                {"lvector", lvector_to_json(rec.lvector)},
                                {"stratum", stratum}});
    }
    return Json{{"instance", to_json(I.data())}, {"patterns", patterns}};
}

std::vector<PatternRecord> patterns_from_document(const Json& doc) {
    return json_guard([&] {
        const auto P = parahoric_from_json(doc.at("instance"));
        std::vector<PatternRecord> records;
        for (const auto& p : doc.at("patterns")) {
            PatternRecord rec{pattern_from_json(p.at("J")), p.at("energy").get<int>(),
                              lvector_from_json(p.at("lvector"), P.n), {}};
            for (const auto& s : p.at("stratum")) rec.stratum.emplace_back(s.at("end").get<int>(), s.at("length").get<int>());
            records.push_back(std::move(rec));
        }
        return records;
    });
}

Json graph_document(const Instance& I, const MomentGraph& G) {
    const auto& P = I.data();
    Json vertices = Json::array();
    for (std::size_t v = 0; v < G.vertices.size(); ++v) {
        vertices.push_back(Json{{"id", v},
                                {"lvector", lvector_to_json(G.vertices[v])},
                                {"J", to_json(G.patterns[v])},
                                {"energy", energy(P, G.patterns[v])}});
    }
    Json edges = Json::array();
    for (const auto& e : G.edges) {
        edges.push_back(Json{{"source", e.source},
                             {"target", e.target},
                             {"move", to_json(e.move)},
                             {"character", to_json(e.label)},
                             {"offset", e.offset}});
    }
    return Json{{"instance", to_json(P)}, {"graph", Json{{"vertices", vertices}, {"edges", edges}}}};
}

MomentGraph graph_from_document(const Json& doc) {
    return json_guard([&] {
        const auto P = parahoric_from_json(doc.at("instance"));
        const auto& g = doc.at("graph");
        MomentGraph G;
        for (const auto& v : g.at("vertices")) {
            if (v.at("id").get<std::size_t>() != G.vertices.size())
                throw InputError(InputErrorKind::Other, "vertex ids must be consecutive");
            G.vertices.push_back(lvector_from_json(v.at("lvector"), P.n));
            G.patterns.push_back(pattern_from_json(v.at("J")));
        }
        for (const auto& e : g.at("edges")) {
            G.edges.push_back(MomentEdge{e.at("source").get<int>(), e.at("target").get<int>(), move_from_json(e.at("move")),
                                         character_from_json(e.at("character"), P.n), e.at("offset").get<int>()});
        }
        return G;
    });
}

std::string graph_dot(const Instance& I, const MomentGraph& G) {
    const auto& P = I.data();
    std::ostringstream out;
    out << "digraph \"moment_graph\" {\n";
    out << "  label=\"" << P.describe() << "\";\n";
    for (std::size_t v = 0; v < G.vertices.size(); ++v) {
        out << "  \"v" << v << "\" [label=\"l=(";
        for (std::size_t j = 0; j < G.vertices[v].size(); ++j) out << (j ? "," : "") << G.vertices[v][j];
        out << ") J=" << pattern_display(G.patterns[v]) << " e=" << energy(P, G.patterns[v]) << "\"];\n";
    }
    for (const auto& e : G.edges) {
        out << "  \"v" << e.source << "\" -> \"v" << e.target << "\" [label=\"" << character_text(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

Json components_document(const Instance& I) {
    Json comps = Json::array();
    for (const auto& c : irr_components(I.data())) {
        comps.push_back(Json{{"I", c.subset}, {"top", to_json(c.top)}, {"energy", energy(I.data(), c.top)}});
    }
    return Json{{"instance", to_json(I.data())}, {"components", comps}};
}

Json poincare_document(const Instance& I) {
    return Json{{"instance", to_json(I.data())}, {"poincare", to_json(poincare(I))}};
}

Json autdim_document(const ParahoricData& P) {
    const auto formula = aut_dim_formula(P);
    const auto oracle = aut_dim_oracle(P);
    return Json{{"instance", to_json(P)}, {"formula", formula}, {"oracle", oracle}, {"agree", formula == oracle}};
}

Json desing_document(const Instance& I, EnumerationBudget budget) {
    const auto& P = I.data();
    const auto Q = extended_quiver(P);
    const auto hat = build_hat_ambient(I);
    Json comps = Json::array();
    for (const auto& c : irr_components(P)) {
        const auto dims = hat_dim_vector(P, c.subset);
        Json hat_dims = Json::array();
        for (int i = 0; i < P.r; ++i) {
            Json row = Json::array();
            for (int j = 1; j <= P.L; ++j) row.push_back(dims[Q.vertex(i, j)]);
            hat_dims.push_back(row);
        }
        Json points = Json::array();
        for (const auto& W : enumerate_subreps(hat, dims, budget)) {
            points.push_back(Json{{"restriction", to_json(restrict_hat(P, W))}, {"tangent_dim", tangent_dim(hat, W)}});
        }
        comps.push_back(Json{{"I", c.subset}, {"hat_dim", hat_dims}, {"points", points}});
    }
    const auto report = desing_check(I, budget);
    return Json{{"instance", to_json(P)},
                {"components", comps},
                {"expected_tangent_dim", P.omega * P.k * (P.n - P.k)},
                {"hat_aut_dim", report.hat_aut_dim},
                {"aut_dim", report.base_aut_dim},
                {"checks", Json{{"tangent", report.tangent_ok},
                                {"fibers", report.fibers_ok},
                                {"dominance", report.dominance_ok},
                                {"aut", report.aut_ok}}}};
}

Json project_document(const Instance& I, const std::vector<int>& Sp, const JugglingPattern* J) {
    const auto& P = I.data();
    const auto Pp = sub_instance(P, Sp);
    Json doc{{"instance", to_json(P)}, {"target", Pp.S}};
    if (J) {
        if (!validate_pattern(P, *J)) throw InputError(InputErrorKind::MalformedPattern, "pattern is not a fixed point");
        doc["pattern"] = to_json(*J);
        doc["image"] = to_json(project_pattern(P, Pp.S, *J));
    } else {
        doc["surjective"] = image_check(I, Pp.S);
    }
    return doc;
}

Json lift_document(const ParahoricData& P, const std::vector<int>& S, const JugglingPattern& J) {
    const auto lifted = lift_pattern(P, S, J);
    const auto big = make_parahoric(P.n, P.k, P.omega, S);
    return Json{{"instance", to_json(P)},
                {"target", big.S},
                {"pattern", to_json(J)},
                {"lift", to_json(lifted)},
                {"roundtrip", project_pattern(big, P.S, lifted) == J}};
}

JugglingPattern parse_pattern_text(const std::string& text, int r) {
    JugglingPattern J;
    std::size_t start = 0;
    while (true) {
        const auto stop = text.find(';', start);
        const std::string field = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        IndexSet s;
        std::stringstream entries(field);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            if (entry.find_first_not_of(' ') == std::string::npos) continue;
            try {
                std::size_t used = 0;
                s.push_back(std::stoi(entry, &used));
                if (entry.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(entry);
            } catch (const std::exception&) {
                throw InputError(InputErrorKind::MalformedPattern, "cannot parse pattern entry '" + entry + "'");
            }
        }
        std::sort(s.begin(), s.end());
        J.sets.push_back(std::move(s));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    if (static_cast<int>(J.sets.size()) != r)
        throw InputError(InputErrorKind::MalformedPattern,
                         "pattern has " + std::to_string(J.sets.size()) + " sets, expected " + std::to_string(r));
    return J;
}

std::string pattern_text(const JugglingPattern& J) {
    std::ostringstream out;
    for (std::size_t i = 0; i < J.sets.size(); ++i) {
        if (i) out << ';';
        for (std::size_t x = 0; x < J.sets[i].size(); ++x) out << (x ? "," : "") << J.sets[i][x];
    }
    return out.str();
}

std::string pattern_display(const JugglingPattern& J) {
    std::ostringstream out;
    for (std::size_t i = 0; i < J.sets.size(); ++i) {
        out << (i ? " {" : "{");
        for (std::size_t x = 0; x < J.sets[i].size(); ++x) out << (x ? "," : "") << J.sets[i][x];
        out << '}';
    }
    return out.str();
}

}  // namespace laumon
