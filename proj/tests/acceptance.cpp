// One PASS/FAIL line per acceptance criterion, with wall-clock limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "momentgraph.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace laumon;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.ok = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %2d %-28s %8.2fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

// Runs the named invariants and reports the first failing one.
Outcome grid(VerifyOptions opt, std::vector<std::string> names) {
    opt.only = std::move(names);
    const auto r = run_verify(opt);
    long long checked = 0;
    for (const auto& inv : r.invariants) {
        checked += inv.instances;
        if (inv.failures > 0) return {false, inv.name + ": " + inv.first_failure};
        if (inv.instances == 0) return {false, inv.name + " checked nothing"};
    }
    return {r.ok, std::to_string(checked) + " checks"};
}

// q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k], independent of the library's own table.
std::vector<long long> q_binomial(int n, int k) {
    std::vector<std::vector<std::vector<long long>>> t(n + 1);
    for (int a = 0; a <= n; ++a) {
        t[a].resize(a + 1);
        for (int b = 0; b <= a; ++b) {
            if (b == 0 || b == a) {
                t[a][b] = {1};
                continue;
            }
            auto& cur = t[a][b];
            cur.assign(b * (a - b) + 1, 0);
            const auto& x = t[a - 1][b - 1];
            const auto& y = t[a - 1][b];
            for (std::size_t i = 0; i < x.size(); ++i) cur[i] += x[i];
            for (std::size_t i = 0; i < y.size(); ++i) cur[i + b] += y[i];
        }
    }
    return t[n][k];
}

VerifyOptions options(int max_n, int max_omega) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.max_omega = max_omega;
    opt.oracle_max_n = std::min(max_n, 4);
    opt.desing_max_n = std::min(max_n, 3);
    return opt;
}

}  // namespace

int main() {
    criterion(1, "gaussian_binomial", 5, [] {
        for (int n = 2; n <= 7; ++n)
            for (int k = 1; k < n; ++k) {
                const auto p = poincare(Instance(make_parahoric(n, k, 1, {1})));
                if (p.coeffs != q_binomial(n, k))
                    return Outcome{false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + p.to_string()};
            }
        return Outcome{true, "21 instances"};
    });

    criterion(2, "grid_invariants", 180, [] {
        return grid(options(5, 2), {"geometry.degree", "geometry.leading_coefficient", "momentgraph.out_degree",
                                    "momentgraph.reachability_dominance", "geometry.fixed_point_count"});
    });

    criterion(3, "oracle_equivalence", 120, [] { return grid(options(4, 2), {"oracle.enumeration"}); });

    criterion(4, "automorphism_dimensions", 60, [] { return grid(options(6, 2), {"geometry.aut_dim"}); });

    criterion(5, "projections", 120, [] {
        return grid(options(5, 2), {"projections.image", "projections.lift_roundtrip", "projections.commutation"});
    });

    criterion(6, "cell_coordinates", 0, [] { return grid(options(5, 2), {"fixedpoints.cell_parameters"}); });

    criterion(7, "worked_instance", 0, [] {
        const Instance I(make_parahoric(2, 1, 1, {1, 2}));
        const auto patterns = all_patterns(I);
        if (patterns.size() != 3) return Outcome{false, "fixed points " + std::to_string(patterns.size())};
        if (poincare(I).to_string() != "2q + 1") return Outcome{false, "poincare " + poincare(I).to_string()};
        if (irr_components(I.data()).size() != 2) return Outcome{false, "component count"};
        const auto G = build_graph(I);
        std::multiset<std::string> labels;
        for (const auto& e : G.edges) labels.insert(character_text(e.label));
        if (labels != std::multiset<std::string>{"+e2 -e1 +d", "+e1 -e2 +d"})
            return Outcome{false, "edge labels"};
        const JugglingPattern singular{{{2}, {2}}};
        const auto A = ambient_rep(I.data());
        if (tangent_dim(A, singular.sets) != 2) return Outcome{false, "tangent at ({2},{2})"};
        for (const auto& J : patterns)
            if (J != singular && tangent_dim(A, J.sets) != 1) return Outcome{false, "smooth point tangent"};
        return Outcome{true, ""};
    });

    criterion(8, "two_point_instance", 0, [] {
        const Instance I(make_parahoric(2, 1, 1, {1}));
        const auto patterns = all_patterns(I);
        const auto strata = strata_partition(I);
        const auto p = poincare(I);
        if (patterns.size() != 2) return Outcome{false, "fixed points " + std::to_string(patterns.size())};
        if (strata.size() != 1) return Outcome{false, "strata " + std::to_string(strata.size())};
        if (p.at_one() != 2) return Outcome{false, "cells " + std::to_string(p.at_one())};
        return Outcome{true, ""};
    });

    criterion(9, "desingularization", 180, [] {
        // The n <= 3 grid contains every (k,n) in {(1,2),(1,3),(2,3)}, plus the trivial k = 0 and k = n cases.
        return grid(options(3, 2), {"desing.tangent", "desing.fibers", "desing.aut", "desing.projection_square",
                                    "desing.projection_surjective"});
    });

    criterion(10, "determinism", 0, [] {
        VerifyOptions opt;  // the default grid, same as the CLI's verify
        const auto a = run_verify(opt);
        const auto b = run_verify(opt);
        return Outcome{a.report == b.report && a.ok, std::to_string(a.report.size()) + " bytes"};
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
