#include "geometry.hpp"

#include <algorithm>
#include <sstream>

#include "coord_rep.hpp"
#include "momentgraph.hpp"
#include "oracle.hpp"
#include "projections.hpp"

namespace laumon {

long long IntPolynomial::at_one() const {
    long long total = 0;
    for (auto c : coeffs) total += c;
    return total;
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        long long c = coeffs[d];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        const long long a = c < 0 ? -c : c;
        if (d == 0 || a != 1) out << a;
        if (d >= 1) out << "q";
        if (d >= 2) out << "^" << d;
    }
    return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial sum;
    sum.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t d = 0; d < a.coeffs.size(); ++d) sum.coeffs[d] += a.coeffs[d];
    for (std::size_t d = 0; d < b.coeffs.size(); ++d) sum.coeffs[d] += b.coeffs[d];
    sum.trim();
    return sum;
}

IntPolynomial shift_up(const IntPolynomial& a, int degrees) {
    if (a.coeffs.empty()) return a;
    IntPolynomial out;
    out.coeffs.assign(degrees, 0);
    out.coeffs.insert(out.coeffs.end(), a.coeffs.begin(), a.coeffs.end());
    return out;
}

namespace {

IntPolynomial from_energies(const ParahoricData& P, const std::vector<JugglingPattern>& patterns) {
    IntPolynomial poly;
    for (const auto& J : patterns) {
        const int e = energy(P, J);
        if (static_cast<int>(poly.coeffs.size()) <= e) poly.coeffs.resize(e + 1, 0);
        ++poly.coeffs[e];
    }
    poly.trim();
    return poly;
}

}  // namespace

IntPolynomial poincare(const Instance& I) { return from_energies(I.data(), all_patterns(I)); }

IntPolynomial poincare_closure(const Instance& I, const JugglingPattern& J) {
    return from_energies(I.data(), cell_closure(I, J));
}

IntPolynomial gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<std::vector<IntPolynomial>> table(n + 1, std::vector<IntPolynomial>(n + 1));
    for (int a = 0; a <= n; ++a) {
        table[a][0].coeffs = {1};
        table[a][a].coeffs = {1};
        for (int b = 1; b < a; ++b) table[a][b] = table[a - 1][b - 1] + shift_up(table[a - 1][b], b);
    }
    return table[n][k];
}

bool is_component_index(const ParahoricData& P, const IndexSet& I) {
    if (static_cast<int>(I.size()) != P.k) return false;
    auto in = [](const std::vector<int>& set, int x) { return std::binary_search(set.begin(), set.end(), x); };
    for (int i : I) {
        if (i < 1 || i > P.n) return false;
        if (!in(P.S, i) && !in(I, i % P.n + 1)) return false;
    }
    return std::is_sorted(I.begin(), I.end()) && std::adjacent_find(I.begin(), I.end()) == I.end();
}

JugglingPattern full_model_top_pattern(int n, int k, int omega, const IndexSet& I) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    const Instance full(make_parahoric(n, k, omega, all));
    if (static_cast<int>(I.size()) != k)
        throw InputError(InputErrorKind::MalformedComponent, "component index must have k elements");
    LVector l(n, 0);
    for (int i : I) {
        if (i < 1 || i > n) throw InputError(InputErrorKind::MalformedComponent, "component index outside [1, n]");
        l[i - 1] = full.data().L;
    }
    return from_lvector(full, l);
}

JugglingPattern component_top_pattern(const ParahoricData& P, const IndexSet& I) {
    std::vector<int> all(P.n);
    for (int i = 0; i < P.n; ++i) all[i] = i + 1;
    const auto full = make_parahoric(P.n, P.k, P.omega, all);
    return project_pattern(full, P.S, full_model_top_pattern(P.n, P.k, P.omega, I));
}

std::vector<ComponentIndex> irr_components(const ParahoricData& P) {
    std::vector<ComponentIndex> result;
    // k-subsets of [n] in lexicographic order
    std::vector<int> subset(P.k);
    for (int i = 0; i < P.k; ++i) subset[i] = i + 1;
    while (true) {
        if (is_component_index(P, subset)) result.push_back(ComponentIndex{subset, component_top_pattern(P, subset)});
        int i = P.k - 1;
        while (i >= 0 && subset[i] == P.n - P.k + i + 1) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < P.k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return result;
}

bool removal_preserves_top_cell(const JugglingPattern& full_top, int vertex, int m) {
    const auto& J = full_top.sets.at(vertex - 1);
    auto in = [&](int x) { return std::binary_search(J.begin(), J.end(), x); };
    return !in(1) || (in(1) && in(m));
}

DimensionReport dimension_check(const Instance& I) {
    const auto& P = I.data();
    DimensionReport report;
    for (const auto& J : all_patterns(I)) {
        const int e = energy(P, J);
        if (e > report.dimension) {
            report.dimension = e;
            report.top_cells = 0;
        }
        if (e == report.dimension) ++report.top_cells;
    }
    const int expected = P.omega * P.k * (P.n - P.k);
    const auto components = static_cast<int>(irr_components(P).size());
    if (report.dimension != expected || report.top_cells != components) {
        std::ostringstream msg;
        msg << P.describe() << ": dimension " << report.dimension << " (expected " << expected << "), "
            << report.top_cells << " top cells (expected " << components << ")";
        throw VerificationFailure(msg.str());
    }
    return report;
}

long long aut_dim_formula(const ParahoricData& P) {
    long long total = 0;
    for (int i = 0; i < P.r; ++i) {
        for (int j = 1; j <= P.L; ++j) total += static_cast<long long>(P.gap(i)) * P.gap(i - j + 1);
    }
    return total;
}

int aut_dim_oracle(const ParahoricData& P) { return end_space_dim(ambient_rep(P)); }

}  // namespace laumon
