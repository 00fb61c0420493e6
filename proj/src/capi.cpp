#include "laumon/laumon.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "desing.hpp"
#include "geometry.hpp"
#include "momentgraph.hpp"
#include "serialize.hpp"
#include "verify.hpp"

struct lmn_instance {
    laumon::Instance instance;
    laumon::EnumerationBudget budget;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lmn_status fail(lmn_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
lmn_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const laumon::InputError& e) {
        return fail(LMN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const laumon::BudgetExceeded& e) {
        return fail(LMN_ERR_BUDGET, e.what());
    } catch (const laumon::VerificationFailure& e) {
        return fail(LMN_ERR_VERIFICATION, e.what());
    } catch (const std::exception& e) {
        return fail(LMN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LMN_ERR_INTERNAL, "unknown exception");
    }
}

lmn_status emit(char** out, const std::string& text) {
    if (!out) return fail(LMN_ERR_INVALID_ARGUMENT, "output pointer is null");
    *out = duplicate(text);
    if (!*out) return fail(LMN_ERR_INTERNAL, "out of memory");
    return LMN_OK;
}

std::string dump(const laumon::Json& doc) { return doc.dump(2) + "\n"; }

std::vector<int> as_vector(const int* data, size_t len) {
    if (!data && len) throw laumon::InputError(laumon::InputErrorKind::Other, "vertex list pointer is null");
    return std::vector<int>(data, data + len);
}

#define LMN_REQUIRE(ptr)                                                           \
    do {                                                                           \
        if (!(ptr)) return fail(LMN_ERR_NULL_HANDLE, #ptr " is null");             \
    } while (0)

}  // namespace

extern "C" {

const char* lmn_version(void) { return "1.0.0"; }

const char* lmn_last_error(void) { return last_error.c_str(); }

const char* lmn_status_name(lmn_status status) {
    switch (status) {
        case LMN_OK: return "ok";
        case LMN_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LMN_ERR_BUDGET: return "budget exceeded";
        case LMN_ERR_VERIFICATION: return "verification failed";
        case LMN_ERR_INTERNAL: return "internal error";
        case LMN_ERR_NULL_HANDLE: return "null handle";
    }
    return "unknown status";
}

void lmn_string_free(char* s) { std::free(s); }

lmn_status lmn_instance_create(int n, int k, int omega, const int* S, size_t s_len, lmn_instance** out) {
    LMN_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new lmn_instance{laumon::Instance(laumon::make_parahoric(n, k, omega, as_vector(S, s_len))), {}};
        return LMN_OK;
    });
}

void lmn_instance_destroy(lmn_instance* inst) { delete inst; }

lmn_status lmn_instance_set_budget(lmn_instance* inst, int64_t max_nodes) {
    LMN_REQUIRE(inst);
    inst->budget = max_nodes > 0 ? laumon::EnumerationBudget{max_nodes} : laumon::EnumerationBudget{};
    return LMN_OK;
}

lmn_status lmn_instance_describe(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, inst->instance.data().describe()); });
}

lmn_status lmn_fixed_point_count(const lmn_instance* inst, size_t* out) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(out);
    return guarded([&] {
        *out = laumon::all_patterns(inst->instance).size();
        return LMN_OK;
    });
}

lmn_status lmn_fixed_point_energy(const lmn_instance* inst, size_t idx, int* out) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(out);
    return guarded([&] {
        const auto patterns = laumon::all_patterns(inst->instance);
        if (idx >= patterns.size()) return fail(LMN_ERR_INVALID_ARGUMENT, "fixed point index out of range");
        *out = laumon::energy(inst->instance.data(), patterns[idx]);
        return LMN_OK;
    });
}

lmn_status lmn_poincare_coefficients(const lmn_instance* inst, int64_t* coeffs, size_t cap, size_t* len) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(len);
    return guarded([&] {
        const auto poly = laumon::poincare(inst->instance);
        *len = poly.coeffs.size();
        if (cap && !coeffs) return fail(LMN_ERR_INVALID_ARGUMENT, "coefficient buffer is null");
        for (size_t d = 0; d < cap && d < poly.coeffs.size(); ++d) coeffs[d] = poly.coeffs[d];
        return LMN_OK;
    });
}

lmn_status lmn_dimension(const lmn_instance* inst, int* dimension, int* top_cells) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto report = laumon::dimension_check(inst->instance);
        if (dimension) *dimension = report.dimension;
        if (top_cells) *top_cells = report.top_cells;
        return LMN_OK;
    });
}

lmn_status lmn_component_count(const lmn_instance* inst, size_t* out) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(out);
    return guarded([&] {
        *out = laumon::irr_components(inst->instance.data()).size();
        return LMN_OK;
    });
}

lmn_status lmn_moment_graph_size(const lmn_instance* inst, size_t* vertices, size_t* edges) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto G = laumon::build_graph(inst->instance);
        if (vertices) *vertices = G.vertices.size();
        if (edges) *edges = G.edges.size();
        return LMN_OK;
    });
}

lmn_status lmn_aut_dims(const lmn_instance* inst, int64_t* formula, int64_t* oracle) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        if (formula) *formula = laumon::aut_dim_formula(inst->instance.data());
        if (oracle) *oracle = laumon::aut_dim_oracle(inst->instance.data());
        return LMN_OK;
    });
}

lmn_status lmn_tangent_dim(const lmn_instance* inst, const char* pattern, int* out) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(pattern);
    LMN_REQUIRE(out);
    return guarded([&] {
        const auto& P = inst->instance.data();
        const auto J = laumon::parse_pattern_text(pattern, P.r);
        if (!laumon::validate_pattern(P, J)) return fail(LMN_ERR_INVALID_ARGUMENT, "pattern is not a fixed point");
        *out = laumon::tangent_dim(laumon::ambient_rep(P), J.sets);
        return LMN_OK;
    });
}

lmn_status lmn_enumerate_json(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, dump(laumon::enumerate_document(inst->instance))); });
}

lmn_status lmn_enumerate_text(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto& P = inst->instance.data();
        std::ostringstream text;
        text << "# " << P.describe() << "\n# J | energy | l | stratum (end:length)\n";
        for (const auto& rec : laumon::pattern_records(inst->instance)) {
            text << laumon::pattern_display(rec.pattern) << " | " << rec.energy << " | (";
            for (size_t j = 0; j < rec.lvector.size(); ++j) text << (j ? "," : "") << rec.lvector[j];
            text << ") |";
            for (const auto& [end, len] : rec.stratum) text << ' ' << end << ':' << len;
            text << '\n';
        }
        return emit(out, text.str());
    });
}

lmn_status lmn_poincare_text(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, laumon::poincare(inst->instance).to_string() + "\n"); });
}

lmn_status lmn_poincare_json(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, dump(laumon::poincare_document(inst->instance))); });
}

lmn_status lmn_moment_graph_json(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        return emit(out, dump(laumon::graph_document(inst->instance, laumon::build_graph(inst->instance))));
    });
}

lmn_status lmn_moment_graph_dot(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, laumon::graph_dot(inst->instance, laumon::build_graph(inst->instance))); });
}

lmn_status lmn_components_json(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] { return emit(out, dump(laumon::components_document(inst->instance))); });
}

lmn_status lmn_components_text(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        std::ostringstream text;
        text << '[';
        bool first = true;
        for (const auto& c : laumon::irr_components(inst->instance.data())) {
            text << (first ? "{" : ", {");
            first = false;
            for (size_t x = 0; x < c.subset.size(); ++x) text << (x ? "," : "") << c.subset[x];
            text << '}';
        }
        text << "]\n";
        return emit(out, text.str());
    });
}

lmn_status lmn_project_json(const lmn_instance* inst, const int* Sp, size_t sp_len, const char* pattern, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto& P = inst->instance.data();
        std::optional<laumon::JugglingPattern> J;
        if (pattern) J = laumon::parse_pattern_text(pattern, P.r);
        return emit(out, dump(laumon::project_document(inst->instance, as_vector(Sp, sp_len), J ? &*J : nullptr)));
    });
}

lmn_status lmn_lift_json(const lmn_instance* inst, const int* S, size_t s_len, const char* pattern, char** out) {
    LMN_REQUIRE(inst);
    LMN_REQUIRE(pattern);
    return guarded([&] {
        const auto& P = inst->instance.data();
        return emit(out, dump(laumon::lift_document(P, as_vector(S, s_len), laumon::parse_pattern_text(pattern, P.r))));
    });
}

lmn_status lmn_autdim_json(const lmn_instance* inst, int verify, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto doc = laumon::autdim_document(inst->instance.data());
        const auto status = emit(out, dump(doc));
        if (status != LMN_OK) return status;
        if (verify && !doc.at("agree").get<bool>())
            return fail(LMN_ERR_VERIFICATION, "automorphism dimension formula disagrees with the oracle");
        return LMN_OK;
    });
}

lmn_status lmn_desing_json(const lmn_instance* inst, char** out) {
    LMN_REQUIRE(inst);
    return guarded([&] {
        const auto doc = laumon::desing_document(inst->instance, inst->budget);
        const auto status = emit(out, dump(doc));
        if (status != LMN_OK) return status;
        for (const auto& [name, ok] : doc.at("checks").items()) {
            if (!ok.get<bool>()) return fail(LMN_ERR_VERIFICATION, "desingularization check failed: " + name);
        }
        return LMN_OK;
    });
}

lmn_status lmn_verify(const lmn_verify_options* options, char** report) {
    LMN_REQUIRE(options);
    return guarded([&] {
        laumon::VerifyOptions opt;
        opt.max_n = options->max_n;
        opt.max_omega = options->max_omega;
        if (options->oracle_max_n > 0) opt.oracle_max_n = options->oracle_max_n;
        if (options->desing_max_n > 0) opt.desing_max_n = options->desing_max_n;
        opt.threads = options->threads;
        if (options->only) {
            std::stringstream names(options->only);
            std::string name;
            while (std::getline(names, name, ',')) {
                if (!name.empty()) opt.only.push_back(name);
            }
        }
        const auto result = laumon::run_verify(opt);
        const auto status = emit(report, result.report);
        if (status != LMN_OK) return status;
        for (const auto& inv : result.invariants) {
            if (inv.failures) return fail(LMN_ERR_VERIFICATION, inv.name + " failed at " + inv.first_failure);
        }
        return LMN_OK;
    });
}

}  // extern "C"
