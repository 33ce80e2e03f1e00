#include "eulerian2/generating_functions.hpp"

#include <algorithm>

#include "eulerian2/combinatorics.hpp"

namespace eulerian2 {

std::vector<ExactRat> lambert_w_coeffs(Index order)
{
    std::vector<ExactRat> c(static_cast<std::size_t>(std::max<Index>(order, 0) + 1));
    for (Index j = 1; j <= order; ++j) {
        c[j] = make_rat(power(-j, j - 1), factorial(j));
    }
    return c;
}

std::vector<ExactRat> expm1_over_x_coeffs(Index order)
{
    std::vector<ExactRat> c;
    for (Index j = 0; j <= order; ++j) {
        c.push_back(make_rat(1, factorial(j + 1)));
    }
    return c;
}

namespace {

BivariateSeries one_minus_t(Index nx, Index mt)
{
    return BivariateSeries::one(nx, mt) - BivariateSeries::t(nx, mt);
}

// W(g) for g = lambert_argument.
BivariateSeries lambert_of_argument(Index nx, Index mt)
{
    const auto w = lambert_w_coeffs(nx + mt);
    return compose_univariate(w, lambert_argument(nx, mt));
}

}  // namespace

BivariateSeries lambert_argument(Index trunc_x, Index trunc_t)
{
    const auto x = BivariateSeries::x(trunc_x, trunc_t);
    const auto t = BivariateSeries::t(trunc_x, trunc_t);
    const auto omt = one_minus_t(trunc_x, trunc_t);
    const auto exponent = omt * omt * x - t;
    return -(t * exp(exponent));
}

BivariateSeries gf_rhs(Index trunc_x, Index trunc_t)
{
    auto denom = lambert_of_argument(trunc_x, trunc_t);
    denom(0, 0) += 1;
    return one_minus_t(trunc_x, trunc_t) * reciprocal(denom);
}

BivariateSeries gf_antiderivative(Index trunc_x, Index trunc_t)
{
    const auto x = BivariateSeries::x(trunc_x, trunc_t);
    const auto t = BivariateSeries::t(trunc_x, trunc_t);
    const auto omt = one_minus_t(trunc_x, trunc_t);
    const auto numer = x * omt * omt - t - lambert_of_argument(trunc_x, trunc_t);
    return numer * reciprocal(omt);
}

BivariateSeries u_series(Index trunc_x, Index trunc_t)
{
    BivariateSeries u(trunc_x, trunc_t);
    for (Index n = 1; n <= trunc_x; ++n) {
        const ExactInt nf = factorial(n);
        for (Index m = 0; m <= trunc_t; ++m) {
            u(n, m) = make_rat(stirling2(n + m - 1, m), nf);
        }
    }
    return u;
}

BivariateSeries y_series(Index trunc_x, Index trunc_t)
{
    const auto x = BivariateSeries::x(trunc_x, trunc_t);
    const auto t = BivariateSeries::t(trunc_x, trunc_t);
    auto expm1 = exp(x);
    expm1(0, 0) -= 1;
    return x - t * expm1;
}

BivariateSeries lambert_inverse_series(Index trunc_x, Index trunc_t)
{
    const auto x = BivariateSeries::x(trunc_x, trunc_t);
    const auto t = BivariateSeries::t(trunc_x, trunc_t);
    const auto arg = -(t * exp(x - t));
    const auto w = compose_univariate(lambert_w_coeffs(trunc_x + trunc_t), arg);
    return x - t - w;
}

BivariateSeries lagrange_kernel(Index trunc_x, Index trunc_t)
{
    const auto q = BivariateSeries::from_x_coeffs(trunc_x, trunc_t, expm1_over_x_coeffs(trunc_x));
    return reciprocal(BivariateSeries::one(trunc_x, trunc_t) - BivariateSeries::t(trunc_x, trunc_t) * q);
}

ExactRat lagrange_T(Index n, Index m, Index k)
{
    if (n < 0 || m < 0 || k < 0) {
        throw DomainError("lagrange_T: negative index");
    }
    if (m != k) {
        return 0;
    }
    return make_rat(stirling2(n + k, k) * factorial(k), factorial(n + k));
}

ExactRat lagrange_D(Index n, Index m, Index k)
{
    if (n < 0 || m < 0) {
        throw DomainError("lagrange_D: negative index");
    }
    if (k < 1) {
        throw DomainError("lagrange_D: power k must be >= 1");
    }
    return make_rat(stirling2(n + m, m) * factorial(m) * binomial(m + k - 1, m), factorial(n + m));
}

std::vector<ExactRat> tree_reciprocal_series(Index order)
{
    const auto minus_x = -BivariateSeries::x(order, 0);
    auto denom = compose_univariate(lambert_w_coeffs(order), minus_x);
    denom(0, 0) += 1;
    const auto r = reciprocal(denom);
    std::vector<ExactRat> out;
    for (Index n = 0; n <= order; ++n) {
        out.push_back(r(n, 0));
    }
    return out;
}

}  // namespace eulerian2
