// Command-line front end. Talks to the library only through laumon/laumon.h.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "laumon/laumon.h"

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kBudget = 3, kVerification = 4, kInternal = 5 };

int exit_code(lmn_status s) {
    switch (s) {
        case LMN_OK: return kOk;
        case LMN_ERR_INVALID_ARGUMENT:
        case LMN_ERR_NULL_HANDLE: return kValidation;
        case LMN_ERR_BUDGET: return kBudget;
        case LMN_ERR_VERIFICATION: return kVerification;
        case LMN_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

int report(lmn_status s) {
    if (s != LMN_OK) std::cerr << "error (" << lmn_status_name(s) << "): " << lmn_last_error() << '\n';
    return exit_code(s);
}

struct InstanceFlags {
    int n = 0;
    int k = 0;
    int omega = 1;
    std::vector<int> S;  // empty: all of [1, n]
    std::string format = "text";
    long long budget = 0;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, const std::vector<std::string>& formats) {
    cmd->add_option("--n", f.n, "cycle length n")->required();
    cmd->add_option("--k", f.k, "subspace rank k")->required();
    cmd->add_option("--omega", f.omega, "multiplicity omega");
    cmd->add_option("--s", f.S, "parahoric vertex set S, comma separated (default: all of [1, n])")->delimiter(',');
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--budget", f.budget, "search-node cap for brute-force enumeration");
}

using Handle = std::unique_ptr<lmn_instance, decltype(&lmn_instance_destroy)>;

lmn_status open_instance(const InstanceFlags& f, Handle& out) {
    std::vector<int> S = f.S;
    if (S.empty() && f.n > 0) {
        S.resize(f.n);
        std::iota(S.begin(), S.end(), 1);
    }
    lmn_instance* raw = nullptr;
    const auto s = lmn_instance_create(f.n, f.k, f.omega, S.data(), S.size(), &raw);
    out.reset(raw);
    if (s == LMN_OK && f.budget > 0) return lmn_instance_set_budget(raw, f.budget);
    return s;
}

// Writes the document (even on a verification failure) and maps the status.
int print_document(lmn_status s, char* doc) {
    if (doc) {
        std::fputs(doc, stdout);
        lmn_string_free(doc);
    }
    return report(s);
}

template <class F>
int with_instance(const InstanceFlags& f, F&& body) {
    Handle inst(nullptr, lmn_instance_destroy);
    if (auto s = open_instance(f, inst); s != LMN_OK) return report(s);
    return body(inst.get());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed points, cells and moment graphs of the quiver Grassmannians X_S(k,n,omega)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lmn_version()));

    int result = kOk;

    InstanceFlags enum_flags;
    auto* enumerate = app.add_subcommand("enumerate", "list fixed points with energy, l-vector and stratum");
    add_instance_flags(enumerate, enum_flags, {"text", "json"});
    enumerate->callback([&] {
        result = with_instance(enum_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = enum_flags.format == "json" ? lmn_enumerate_json(inst, &doc) : lmn_enumerate_text(inst, &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags poly_flags;
    auto* poincare = app.add_subcommand("poincare", "Poincare polynomial");
    add_instance_flags(poincare, poly_flags, {"text", "json"});
    poincare->callback([&] {
        result = with_instance(poly_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = poly_flags.format == "json" ? lmn_poincare_json(inst, &doc) : lmn_poincare_text(inst, &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags graph_flags;
    graph_flags.format = "dot";
    auto* graph = app.add_subcommand("moment-graph", "moment graph as DOT or JSON");
    add_instance_flags(graph, graph_flags, {"dot", "json"});
    graph->callback([&] {
        result = with_instance(graph_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = graph_flags.format == "json" ? lmn_moment_graph_json(inst, &doc) : lmn_moment_graph_dot(inst, &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags comp_flags;
    auto* components = app.add_subcommand("components", "irreducible component index sets");
    add_instance_flags(components, comp_flags, {"text", "json"});
    components->callback([&] {
        result = with_instance(comp_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = comp_flags.format == "json" ? lmn_components_json(inst, &doc) : lmn_components_text(inst, &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags proj_flags;
    std::vector<int> proj_target;
    std::string proj_pattern;
    auto* project = app.add_subcommand("project", "forget the vertices outside S'");
    add_instance_flags(project, proj_flags, {"json"});
    project->add_option("--to", proj_target, "target set S' (subset of S)")->required()->delimiter(',');
    project->add_option("--pattern", proj_pattern, "fixed point over S, e.g. '1;2' (omit for the image check)");
    project->callback([&] {
        result = with_instance(proj_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = lmn_project_json(inst, proj_target.data(), proj_target.size(),
                                      project->count("--pattern") ? proj_pattern.c_str() : nullptr, &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags lift_flags;
    std::vector<int> lift_target;
    std::string lift_pattern;
    auto* lift = app.add_subcommand("lift", "lift a fixed point over S to a superset");
    add_instance_flags(lift, lift_flags, {"json"});
    lift->add_option("--to", lift_target, "superset of S")->required()->delimiter(',');
    lift->add_option("--pattern", lift_pattern, "fixed point over S, e.g. '1;2'")->required();
    lift->callback([&] {
        result = with_instance(lift_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            auto s = lmn_lift_json(inst, lift_target.data(), lift_target.size(), lift_pattern.c_str(), &doc);
            return print_document(s, doc);
        });
    });

    InstanceFlags aut_flags;
    bool aut_verify = false;
    auto* autdim = app.add_subcommand("autdim", "dimension of the automorphism group of the ambient");
    add_instance_flags(autdim, aut_flags, {"text", "json"});
    autdim->add_flag("--verify", aut_verify, "compare the closed formula with exact linear algebra");
    autdim->callback([&] {
        result = with_instance(aut_flags, [&](lmn_instance* inst) {
            if (aut_flags.format == "json") {
                char* doc = nullptr;
                const auto s = lmn_autdim_json(inst, aut_verify, &doc);
                return print_document(s, doc);
            }
            int64_t formula = 0, oracle = 0;
            if (!aut_verify) {
                auto s = lmn_aut_dims(inst, &formula, nullptr);
                if (s == LMN_OK) std::cout << "formula " << formula << '\n';
                return report(s);
            }
            auto s = lmn_aut_dims(inst, &formula, &oracle);
            if (s != LMN_OK) return report(s);
            const bool ok = formula == oracle;
            std::cout << "formula " << formula << ", oracle " << oracle << ", " << (ok ? "OK" : "MISMATCH") << '\n';
            return static_cast<int>(ok ? kOk : kVerification);
        });
    });

    InstanceFlags des_flags;
    des_flags.format = "json";
    auto* desing = app.add_subcommand("desing", "fixed points and tangent spaces of the desingularizations");
    add_instance_flags(desing, des_flags, {"json"});
    desing->callback([&] {
        result = with_instance(des_flags, [&](lmn_instance* inst) {
            char* doc = nullptr;
            const auto s = lmn_desing_json(inst, &doc);
            return print_document(s, doc);
        });
    });

    lmn_verify_options vopt{4, 2, 0, 0, 0, nullptr};
    std::string only;
    auto* verify = app.add_subcommand("verify", "check every invariant on a grid of instances");
    verify->add_option("--max-n", vopt.max_n, "largest n");
    verify->add_option("--max-omega", vopt.max_omega, "largest omega");
    verify->add_option("--oracle-max-n", vopt.oracle_max_n, "largest n for the brute-force oracle (default 4)");
    verify->add_option("--desing-max-n", vopt.desing_max_n, "largest n for desingularization checks (default 3)");
    verify->add_option("--threads", vopt.threads, "worker threads (default: LAUMON_THREADS or all cores)");
    verify->add_option("--only", only, "comma-separated invariant names");
    verify->callback([&] {
        if (!only.empty()) vopt.only = only.c_str();
        char* text = nullptr;
        const auto s = lmn_verify(&vopt, &text);
        result = print_document(s, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }
    return result;
}
