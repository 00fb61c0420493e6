#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "desing.hpp"
#include "geometry.hpp"
#include "momentgraph.hpp"
#include "projections.hpp"
#include "serialize.hpp"

namespace laumon {

namespace {

enum Inv : int {
    CoreChains,
    CoreEndVertex,
    LvectorRoundtrip,
    CellParameters,
    StratumDims,
    Degree,
    LeadingCoefficient,
    FixedPointCount,
    Gaussian,
    TopCells,
    RemovalPredicate,
    AutDim,
    OutDegree,
    ReachabilityDominance,
    EdgeLabels,
    PrintedDelta,
    CongruenceAlignment,
    OracleEnumeration,
    BasisInvariance,
    ProjectionImage,
    LiftRoundtrip,
    Commutation,
    CellMonotone,
    DesingTangent,
    DesingFibers,
    DesingDominance,
    DesingAut,
    DesingSquare,
    DesingSurjective,
    InvCount
};

const std::vector<std::string> kNames = {
    "core.chains",
    "core.end_vertex_convention",
    "fixedpoints.lvector_roundtrip",
    "fixedpoints.cell_parameters",
    "fixedpoints.stratum_dims",
    "geometry.degree",
    "geometry.leading_coefficient",
    "geometry.fixed_point_count",
    "geometry.gaussian_binomial",
    "geometry.top_cells",
    "geometry.removal_predicate",
    "geometry.aut_dim",
    "momentgraph.out_degree",
    "momentgraph.reachability_dominance",
    "momentgraph.edge_labels",
    "momentgraph.printed_delta",
    "momentgraph.congruence_alignment",
    "oracle.enumeration",
    "oracle.basis_invariance",
    "projections.image",
    "projections.lift_roundtrip",
    "projections.commutation",
    "projections.cell_monotone",
    "desing.tangent",
    "desing.fibers",
    "desing.dominance",
    "desing.aut",
    "desing.projection_square",
    "desing.projection_surjective",
};

struct Job {
    int n, k, omega;
    std::vector<int> S;
};

struct Outcome {
    long long instances = 0;
    long long failures = 0;
    std::string first_failure;
};

class Recorder {
public:
    Recorder(const std::vector<bool>& enabled, std::string where)
        : enabled_(enabled), where_(std::move(where)), outcomes_(InvCount) {}

    bool wants(Inv i) const { return enabled_[i]; }

    void check(Inv i, bool ok, const std::string& detail = {}) {
        auto& o = outcomes_[i];
        ++o.instances;
        if (ok) return;
        if (o.failures++ == 0) o.first_failure = where_ + (detail.empty() ? "" : ": " + detail);
    }

    template <class F>
    void guarded(std::initializer_list<Inv> invs, F&& body) {
        bool any = false;
        for (auto i : invs) any = any || wants(i);
        if (!any) return;
        try {
            body();
        } catch (const std::exception& e) {
            for (auto i : invs) {
                if (wants(i)) check(i, false, std::string("exception: ") + e.what());
            }
        }
    }

    std::vector<Outcome> take() { return std::move(outcomes_); }

private:
    const std::vector<bool>& enabled_;
    std::string where_;
    std::vector<Outcome> outcomes_;
};

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& base) {
    std::vector<std::vector<int>> out;
    const int size = static_cast<int>(base.size());
    for (int mask = 1; mask < (1 << size); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < size; ++i) {
            if (mask >> i & 1) s.push_back(base[i]);
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_text(const std::vector<int>& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    return out.str();
}

void check_fixed_points(Recorder& rec, const Instance& I, const std::vector<JugglingPattern>& patterns) {
    const auto& P = I.data();
    rec.guarded({LvectorRoundtrip}, [&] {
        bool ok = all_lvectors(I).size() == patterns.size();
        std::string detail = ok ? "" : "l-vector count differs from pattern count";
        for (const auto& J : patterns) {
            if (ok && from_lvector(I, to_lvector(I, J)) != J) {
                ok = false;
                detail = "round trip fails at " + pattern_display(J);
            }
        }
        rec.check(LvectorRoundtrip, ok, detail);
    });
    rec.guarded({CellParameters}, [&] {
        for (const auto& J : patterns) {
            const int e = energy(P, J), c = cell_parameter_count(P, J);
            rec.check(CellParameters, e == c,
                      pattern_display(J) + " energy " + std::to_string(e) + " cell parameters " + std::to_string(c));
        }
    });
    rec.guarded({StratumDims}, [&] {
        for (const auto& J : patterns) {
            DimVector total(P.r, 0);
            for (const auto& [end, len] : stratum_key(I, J).parts) {
                const auto d = indec_dim_vector(P, end, len);
                for (int v = 0; v < P.r; ++v) total[v] += d[v];
            }
            rec.check(StratumDims, total == DimVector(P.r, P.target()), pattern_display(J));
        }
    });
}

void check_geometry(Recorder& rec, const Instance& I, const std::vector<JugglingPattern>& patterns) {
    const auto& P = I.data();
    rec.guarded({Degree, LeadingCoefficient, FixedPointCount, Gaussian, TopCells}, [&] {
        const auto poly = poincare(I);
        const int dim = P.omega * P.k * (P.n - P.k);
        const auto comps = irr_components(P);
        rec.check(Degree, poly.degree() == dim, "poincare " + poly.to_string());
        rec.check(LeadingCoefficient, poly.leading() == static_cast<long long>(comps.size()),
                  "poincare " + poly.to_string() + ", " + std::to_string(comps.size()) + " components");
        rec.check(FixedPointCount, poly.at_one() == static_cast<long long>(patterns.size()));
        if (P.omega == 1 && P.S == std::vector<int>{1}) {
            const auto expected = gaussian_binomial(P.n, P.k);
            rec.check(Gaussian, poly == expected, poly.to_string() + " vs " + expected.to_string());
        }
        std::set<JugglingPattern> top, tops_of_components;
        for (const auto& J : patterns) {
            if (energy(P, J) == dim) top.insert(J);
        }
        for (const auto& c : comps) tops_of_components.insert(c.top);
        rec.check(TopCells, top == tops_of_components, "top cells differ from component top patterns");
        if (rec.wants(RemovalPredicate)) {
            std::vector<int> full(P.n);
            std::iota(full.begin(), full.end(), 1);
            std::set<IndexSet> expected, actual;
            for (const auto& c : comps) actual.insert(c.subset);
            for (const auto& c : irr_components(make_parahoric(P.n, P.k, P.omega, full))) {
                const auto top_full = full_model_top_pattern(P.n, P.k, P.omega, c.subset);
                bool survives = true;
                for (int v = 1; v <= P.n; ++v) {
                    if (!std::binary_search(P.S.begin(), P.S.end(), v))
                        survives = survives && removal_preserves_top_cell(top_full, v, P.m);
                }
                if (survives) expected.insert(c.subset);
            }
            rec.check(RemovalPredicate, expected == actual, "surviving top cells differ from the component index sets");
        }
    });
    if (P.k == 0) {
        rec.guarded({AutDim}, [&] {
            const auto formula = aut_dim_formula(P);
            const auto oracle = aut_dim_oracle(P);
            const long long expected = static_cast<long long>(P.omega) * P.n * P.n;
            rec.check(AutDim, formula == oracle && oracle == expected,
                      "formula " + std::to_string(formula) + " oracle " + std::to_string(oracle));
        });
    }
}

void check_moment_graph(Recorder& rec, const Instance& I) {
    const auto& P = I.data();
    rec.guarded({OutDegree, ReachabilityDominance}, [&] {
        const auto G = build_graph(I);
        const auto degrees = G.out_degrees();
        for (std::size_t v = 0; v < G.vertices.size(); ++v) {
            const int e = energy(P, G.patterns[v]);
            rec.check(OutDegree, degrees[v] == e,
                      pattern_display(G.patterns[v]) + " out-degree " + std::to_string(degrees[v]) + " energy " +
                          std::to_string(e));
        }
        rec.check(ReachabilityDominance, reachability_order(G) == dominance_order(G.patterns));
        for (const auto& e : G.edges) {
            const auto& eps = e.label.eps;
            const bool shape = std::count(eps.begin(), eps.end(), 1) == 1 && std::count(eps.begin(), eps.end(), -1) == 1 &&
                               std::count(eps.begin(), eps.end(), 0) == P.n - 2 && eps[e.move.recipient - 1] == 1 &&
                               eps[e.move.donor - 1] == -1 && e.label.delta == e.offset && e.offset > 0;
            rec.check(EdgeLabels, shape, "edge " + std::to_string(e.source) + "->" + std::to_string(e.target));
        }
    });
    rec.guarded({PrintedDelta, CongruenceAlignment}, [&] {
        const bool full = static_cast<int>(P.S.size()) == P.n;
        for (const auto& l : all_lvectors(I)) {
            std::set<Move> admissible;
            for (const auto& m : admissible_moves(I, l)) {
                admissible.insert(m.move);
                if (full) rec.check(PrintedDelta, printed_delta(l, m.move) == m.offset, "move offset differs from the formula");
            }
            bool agree = true;
            for (int i = 1; i <= P.n; ++i) {
                for (int j = 1; j <= P.n; ++j) {
                    if (i == j) continue;
                    for (int q = 1; q <= std::min(l[i - 1], P.L - l[j - 1]); ++q) {
                        const Move mv{i, j, q};
                        agree = agree && congruence_aligned(I, l, mv) == (admissible.count(mv) > 0);
                    }
                }
            }
            rec.check(CongruenceAlignment, agree, "alignment differs from the congruence");
        }
    });
}

void check_oracle(Recorder& rec, const Instance& I, const std::vector<JugglingPattern>& patterns,
                  const VerifyOptions& opt) {
    const auto& P = I.data();
    if (P.n > opt.oracle_max_n) return;
    rec.guarded({OracleEnumeration}, [&] {
        const auto subs = enumerate_subreps(ambient_rep(P), std::vector<int>(P.r, P.target()), opt.budget);
        std::vector<JugglingPattern> brute;
        for (const auto& s : subs) brute.push_back(JugglingPattern{s});
        std::sort(brute.begin(), brute.end());
        rec.check(OracleEnumeration, brute == patterns,
                  std::to_string(brute.size()) + " brute-force points vs " + std::to_string(patterns.size()));
    });
    if (P.k != 0) return;
    rec.guarded({BasisInvariance}, [&] {
        const auto amb = ambient_rep(P);
        std::mt19937 rng(static_cast<unsigned>(P.n * 1000 + P.omega * 100 + P.r));
        std::vector<std::vector<int>> perm(amb.vertex_count());
        for (int v = 0; v < amb.vertex_count(); ++v) {
            perm[v].resize(amb.dim(v));
            std::iota(perm[v].begin(), perm[v].end(), 0);
            std::shuffle(perm[v].begin(), perm[v].end(), rng);
        }
        rec.check(BasisInvariance, end_space_dim(permute_basis(amb, perm)) == end_space_dim(amb));
    });
}

void check_projections(Recorder& rec, const Instance& I) {
    const auto& P = I.data();
    for (const auto& Sp : nonempty_subsets(P.S)) {
        if (Sp == P.S) continue;
        rec.guarded({ProjectionImage}, [&] { rec.check(ProjectionImage, image_check(I, Sp), "onto S'={" + set_text(Sp) + "}"); });
        rec.guarded({CellMonotone}, [&] {
            const auto Pp = sub_instance(P, Sp);
            for (const auto& J : all_patterns(I)) {
                const auto image = project_pattern(P, Sp, J);
                rec.check(CellMonotone, cell_parameter_count(Pp, image) <= cell_parameter_count(P, J),
                          "onto S'={" + set_text(Sp) + "} at " + pattern_display(J));
            }
        });
        rec.guarded({LiftRoundtrip}, [&] {
            const Instance small(sub_instance(P, Sp));
            for (const auto& Jp : all_patterns(small)) {
                const auto lifted = lift_pattern(small.data(), P.S, Jp);
                rec.check(LiftRoundtrip, project_pattern(P, Sp, lifted) == Jp,
                          "from S'={" + set_text(Sp) + "} at " + pattern_display(Jp));
            }
        });
    }
    if (static_cast<int>(P.S.size()) != P.n) return;
    rec.guarded({Commutation}, [&] {
        for (const auto& T : nonempty_subsets(P.S)) {
            if (T.size() < 2 || T.size() > 3 || T.size() >= P.S.size()) continue;
            rec.check(Commutation, commutation_check(I, T), "T={" + set_text(T) + "}");
        }
    });
}

void check_desing(Recorder& rec, const Instance& I, const VerifyOptions& opt) {
    const auto& P = I.data();
    if (P.n > opt.desing_max_n) return;
    rec.guarded({DesingTangent, DesingFibers, DesingDominance, DesingAut}, [&] {
        const auto report = desing_check(I, opt.budget);
        rec.check(DesingTangent, report.tangent_ok);
        rec.check(DesingFibers, report.fibers_ok);
        rec.check(DesingDominance, report.dominance_ok);
        rec.check(DesingAut, report.aut_ok,
                  "hat " + std::to_string(report.hat_aut_dim) + " base " + std::to_string(report.base_aut_dim));
    });
    for (const auto& Sp : nonempty_subsets(P.S)) {
        if (Sp == P.S) continue;
        rec.guarded({DesingSquare, DesingSurjective}, [&] {
            const auto report = hat_projection_check(I, Sp, opt.budget);
            rec.check(DesingSquare, report.square_commutes, "onto S'={" + set_text(Sp) + "}");
            rec.check(DesingSurjective, report.surjective, "onto S'={" + set_text(Sp) + "}");
        });
    }
}

std::vector<Outcome> run_job(const Job& job, const VerifyOptions& opt, const std::vector<bool>& enabled) {
    const std::string where = "n=" + std::to_string(job.n) + " k=" + std::to_string(job.k) +
                              " omega=" + std::to_string(job.omega) + " S=" + set_text(job.S);
    Recorder rec(enabled, where);
    std::optional<Instance> I;
    try {
        I.emplace(make_parahoric(job.n, job.k, job.omega, job.S));
        rec.check(CoreChains, true);
        const auto& P = I->data();
        for (int j = 1; j <= P.n; ++j) {
            // the chain labelled j ends at the floor vertex of j - 1
            rec.check(CoreEndVertex, I->chain(j).end_vertex() == floor_vertex(P, j == 1 ? P.n : j - 1),
                      "chain " + std::to_string(j));
        }
    } catch (const std::exception& e) {
        rec.check(CoreChains, false, e.what());
        return rec.take();
    }
    std::vector<JugglingPattern> patterns;
    try {
        patterns = all_patterns(*I);
    } catch (const std::exception& e) {
        for (int i = LvectorRoundtrip; i < InvCount; ++i) {
            if (enabled[i]) rec.check(static_cast<Inv>(i), false, std::string("enumeration failed: ") + e.what());
        }
        return rec.take();
    }
    check_fixed_points(rec, *I, patterns);
    check_geometry(rec, *I, patterns);
    check_moment_graph(rec, *I);
    check_oracle(rec, *I, patterns, opt);
    check_projections(rec, *I);
    check_desing(rec, *I, opt);
    return rec.take();
}

}  // namespace

const std::vector<std::string>& invariant_names() { return kNames; }

int default_thread_count() {
    if (const char* env = std::getenv("LAUMON_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

VerifyResult run_verify(const VerifyOptions& options) {
    if (options.max_n < 1) throw InputError(InputErrorKind::NonPositiveN, "max-n must be at least 1");
    if (options.max_n > 8) throw InputError(InputErrorKind::Other, "max-n above 8 is outside the supported grid");
    if (options.max_omega < 1) throw InputError(InputErrorKind::OmegaBelowOne, "max-omega must be at least 1");
    if (options.max_omega > 4) throw InputError(InputErrorKind::Other, "max-omega above 4 is outside the supported grid");
    if (options.threads < 0) throw InputError(InputErrorKind::Other, "thread count must be nonnegative");

    std::vector<bool> enabled(InvCount, options.only.empty());
    for (const auto& name : options.only) {
        auto it = std::find(kNames.begin(), kNames.end(), name);
        if (it == kNames.end()) throw InputError(InputErrorKind::Other, "unknown invariant '" + name + "'");
        enabled[it - kNames.begin()] = true;
    }

    std::vector<Job> jobs;
    for (int n = 1; n <= options.max_n; ++n) {
        std::vector<int> full(n);
        std::iota(full.begin(), full.end(), 1);
        const auto subsets = nonempty_subsets(full);
        for (int omega = 1; omega <= options.max_omega; ++omega) {
            for (int k = 0; k <= n; ++k) {
                for (const auto& S : subsets) jobs.push_back(Job{n, k, omega, S});
            }
        }
    }

    std::vector<std::vector<Outcome>> results(jobs.size());
    const int threads = std::max(1, std::min<int>(options.threads > 0 ? options.threads : default_thread_count(),
                                                  static_cast<int>(jobs.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) results[j] = run_job(jobs[j], options, enabled);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerifyResult result;
    for (int i = 0; i < InvCount; ++i) {
        if (!enabled[i]) continue;
        InvariantSummary s{kNames[i], 0, 0, {}};
        for (const auto& r : results) {
            const auto& o = r[i];
            s.instances += o.instances;
            if (o.failures && s.failures == 0) s.first_failure = o.first_failure;
            s.failures += o.failures;
        }
        if (s.failures) result.ok = false;
        result.invariants.push_back(std::move(s));
    }

    std::ostringstream out;
    out << "verify grid: n<=" << options.max_n << " omega<=" << options.max_omega << " (oracle n<="
        << std::min(options.max_n, options.oracle_max_n) << ", desing n<=" << std::min(options.max_n, options.desing_max_n)
        << "), " << jobs.size() << " instances\n";
    for (const auto& s : result.invariants) {
        out << std::left << std::setw(38) << s.name << std::right << std::setw(9) << s.instances << " checked"
            << std::setw(7) << s.failures << " failed  " << (s.failures ? "FAIL" : "OK") << '\n';
    }
    for (const auto& s : result.invariants) {
        if (s.failures) out << "first failure [" << s.name << "] " << s.first_failure << '\n';
    }
    out << "result: " << (result.ok ? "PASS" : "FAIL") << '\n';
    result.report = out.str();
    return result;
}

}  // namespace laumon
