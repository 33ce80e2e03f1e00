#pragma once

#include <vector>

#include "eulerian2/series.hpp"

namespace eulerian2 {

/// Taylor stream of the principal Lambert W: c[0] = 0, c[j] = (-j)^{j-1}/j!.
/// Solves w e^w = z as a formal series.
std::vector<ExactRat> lambert_w_coeffs(Index order);

/// Coefficients of (e^x - 1)/x up to x^order: 1/(j+1)!.
std::vector<ExactRat> expm1_over_x_coeffs(Index order);

/// g(x,t) = -t exp((1-t)^2 x - t), the argument handed to W in the
/// second-order Eulerian generating function.
BivariateSeries lambert_argument(Index trunc_x, Index trunc_t);

/// (1 - t) / (W(-t e^{(1-t)^2 x - t}) + 1), whose EGF coefficients
/// n! [x^n t^m] are <<n,m>>.
BivariateSeries gf_rhs(Index trunc_x, Index trunc_t);

/// (x(1-t)^2 - t - W(-t e^{(1-t)^2 x - t})) / (1 - t). Its x-derivative is
/// gf_rhs, and its EGF coefficient at (n,m) is <<n-1,m>> for n >= 1.
BivariateSeries gf_antiderivative(Index trunc_x, Index trunc_t);

/// u(x,t) = sum_{n>=1, m>=0} S(n+m-1, m) x^n t^m / n!, filled directly
/// from the Stirling table.
BivariateSeries u_series(Index trunc_x, Index trunc_t);

/// y(x,t) = x - t (e^x - 1). Compositional inverse (in x) of u.
BivariateSeries y_series(Index trunc_x, Index trunc_t);

/// y - t - W(-t e^{y - t}), written in the series variable x. The closed form
/// of the inverse of y_series obtained through the Lambert substitution.
BivariateSeries lambert_inverse_series(Index trunc_x, Index trunc_t);

/// F(x,t) = 1 / (1 - t (e^x - 1)/x), the Lagrange kernel for u = x F(u,t).
BivariateSeries lagrange_kernel(Index trunc_x, Index trunc_t);

/// T(n,m,k) = delta(m,k) S(n+k,k) k!/(n+k)!: coefficient of x^n t^m in
/// (t (e^x - 1)/x)^k.
ExactRat lagrange_T(Index n, Index m, Index k);

/// D(n,m,k) = S(n+m,m) m!/(n+m)! C(m+k-1, m): coefficient of x^n t^m in
/// lagrange_kernel^k. Requires k >= 1.
ExactRat lagrange_D(Index n, Index m, Index k);

/// Coefficients 0..order of 1/(1 + W(-x)), built through the series engine.
std::vector<ExactRat> tree_reciprocal_series(Index order);

}  // namespace eulerian2
