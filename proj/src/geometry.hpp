#pragma once

#include <string>
#include <vector>

#include "fixedpoints.hpp"

namespace laumon {

/// Polynomial in q with integer coefficients; coeffs[d] is the coefficient of q^d.
struct IntPolynomial {
    std::vector<long long> coeffs;

    int degree() const { return coeffs.empty() ? -1 : static_cast<int>(coeffs.size()) - 1; }
    long long leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
    long long at_one() const;
    void trim();
    std::string to_string() const;  // e.g. "q^2 + 2q + 1"

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial shift_up(const IntPolynomial& a, int degrees);  // multiply by q^degrees

/// Sum over fixed points of q^energy.
IntPolynomial poincare(const Instance& I);
IntPolynomial poincare_closure(const Instance& I, const JugglingPattern& J);

/// [n choose k]_q from the q-Pascal recurrence.
IntPolynomial gaussian_binomial(int n, int k);

struct ComponentIndex {
    IndexSet subset;      // k-subset of [n]
    JugglingPattern top;  // fixed point of the dense cell of the component
};

/// i in I and i not in S implies i+1 (mod n) in I.
bool is_component_index(const ParahoricData& P, const IndexSet& I);

/// Top pattern of a k-subset in the S = [n] model: the chains labelled by I taken whole.
JugglingPattern full_model_top_pattern(int n, int k, int omega, const IndexSet& I);

/// Image of the full-model top pattern of I over P.S.
JugglingPattern component_top_pattern(const ParahoricData& P, const IndexSet& I);

/// Irreducible components in lexicographic order of their index sets.
std::vector<ComponentIndex> irr_components(const ParahoricData& P);

/// For a top pattern in the S = [n] model: forgetting vertex i (1-based) keeps
/// the cell dimension iff 1 is not in J_i, or both 1 and m are.
bool removal_preserves_top_cell(const JugglingPattern& full_top, int vertex, int m);

struct DimensionReport {
    int dimension = 0;  // max energy
    int top_cells = 0;  // number of patterns attaining it
};

/// Throws VerificationFailure unless dimension == omega k (n-k) and the
/// number of top cells equals the number of components.
DimensionReport dimension_check(const Instance& I);

/// sum_i sum_{j=1}^{omega r} q_i q_{i-j+1}
long long aut_dim_formula(const ParahoricData& P);

/// dim End of the ambient, by exact linear algebra.
int aut_dim_oracle(const ParahoricData& P);

}  // namespace laumon
