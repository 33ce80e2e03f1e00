#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerian2/combinatorics.hpp"

namespace eulerian2 {

enum class IdentityId {
    ExplicitA,       // first explicit formula vs recurrence
    ExplicitB,       // second explicit formula vs recurrence
    Stirling,        // S(n+m,m) = sum_i <<n,i>> C(m+2n-i, m-i)
    Tree,            // x = 0 slice of the composed generating function
    AlternatingR,    // x = -1 slice: sum_n (-1)^n r(n,m) = [m == 0]
    RSupport,        // r(n,m) = 0 for n > m
    RSeries,         // r(n,m) against the composed series
    GFCoeffs,        // EGF coefficients of the Lambert-W closed form
    GFDerivative,    // d/dx of the antiderivative, and its shifted coefficients
    CompInverse,     // u(y(x,t),t) = x and y(u(x,t),t) = x
    ZSubstitution,   // y(x - t - W(-t e^{x-t}), t) = x
    LagrangeD,       // T and D coefficient formulas against series powers
    LambertW,        // w e^w = x
    TreeSeries,      // 1/(1 + W(-x)) = sum n^n x^n / n!
    PrintedQuadSum,  // final quadruple sum, evaluated as printed
};

/// Every identity, in report order.
const std::vector<IdentityId>& all_identities();

/// Stable kebab-case name used on the command line and in json.
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Informational identities never fail a run; their outcome is reported only.
bool is_informational(IdentityId id);

using Params = std::vector<std::pair<std::string, Index>>;

struct Counterexample {
    Params params;
    ExactRat lhs;
    ExactRat rhs;
};

struct IdentityReport {
    IdentityId id;
    Params range;
    std::size_t cases = 0;
    std::optional<Counterexample> counterexample;

    [[nodiscard]] bool passed() const noexcept { return !counterexample.has_value(); }
};

struct Sides {
    ExactRat lhs;
    ExactRat rhs;
};

/// r(n,m) = sum_{i=0}^{m} sum_{k=0}^{n+m-i} <<k,i>>/k! C(k,n) C(m-i+k-1, m-i-k):
/// coefficient of x^n t^m in the generating function composed with
/// x -> t(x+1)/(1-t)^2.
ExactRat r_coeff(Index n, Index m, const EulerianSource& source = eulerian2_rec);

/// Same value with k shifted to start at n (terms with k < n carry C(k,n) = 0).
ExactRat r_coeff_shifted(Index n, Index m, const EulerianSource& source = eulerian2_rec);

/// Left and right sides of a pointwise identity at one parameter tuple.
/// Empty for identities that compare whole series rather than single values.
std::optional<Sides> evaluate_case(IdentityId id, const Params& params,
                                   const EulerianSource& source = eulerian2_rec);

IdentityReport check_explicit_a(Index n_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_explicit_b(Index n_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_stirling_identity(Index n_max, Index m_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_tree_identity(Index n_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_alternating_identity(Index m_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_r_support(Index m_max, const EulerianSource& source = eulerian2_rec);
IdentityReport check_r_against_series(Index box_n, Index box_t, const EulerianSource& source = eulerian2_rec);
IdentityReport check_gf_coeffs(Index box_n, Index box_t, const EulerianSource& source = eulerian2_rec);
IdentityReport check_gf_derivative(Index box_n, Index box_t, const EulerianSource& source = eulerian2_rec);
IdentityReport check_compositional_inverse(Index box_n, Index box_t);
IdentityReport check_z_substitution(Index box_n, Index box_t);
IdentityReport check_lagrange(Index box_n, Index box_t, Index k_max);
IdentityReport check_lambert_functional(Index order);
IdentityReport check_tree_series(Index order);
IdentityReport check_printed_quad_sum(Index n_max, const EulerianSource& source = eulerian2_rec);

/// Per-identity sweep bounds. The defaults are the full verification run.
struct SuiteBounds {
    Index explicit_n = 30;
    Index stirling_n = 40;
    Index stirling_m = 40;
    Index tree_n = 25;
    Index alternating_m = 20;
    Index r_box = 10;
    Index gf_box_n = 12;
    Index gf_box_t = 12;
    Index inverse_box = 10;
    Index z_box = 8;
    Index lagrange_box = 8;
    Index lagrange_k = 4;
    Index lambert_order = 15;
    Index tree_series_n = 20;
    Index quad_n = 10;

    /// Every bound set to zero: each sweep is empty or trivial.
    static SuiteBounds zero();
};

IdentityReport run_identity(IdentityId id, const SuiteBounds& bounds, const EulerianSource& source = eulerian2_rec);

/// Runs the selected identities (all when empty), one task per identity.
/// Reports come back in the order requested.
std::vector<IdentityReport> run_all(const SuiteBounds& bounds = {}, const EulerianSource& source = eulerian2_rec,
                                    const std::vector<IdentityId>& ids = {});

}  // namespace eulerian2
