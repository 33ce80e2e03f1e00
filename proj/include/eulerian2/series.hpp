#pragma once

#include <span>
#include <vector>

#include "eulerian2/exact.hpp"

namespace eulerian2 {

/**
 * Double power series sum a(n,m) x^n t^m truncated to the box
 * 0 <= n <= N, 0 <= m <= M (degrees in x and t bounded independently).
 *
 * The box is the quotient by the ideal (x^{N+1}, t^{M+1}), so every ring
 * operation here is exact inside the box. Storage is dense and row-major in
 * (n, m); coefficients outside the box are zero by definition.
 */
class BivariateSeries {
public:
    BivariateSeries(Index trunc_x, Index trunc_t);

    static BivariateSeries zero(Index trunc_x, Index trunc_t) { return {trunc_x, trunc_t}; }
    static BivariateSeries constant(Index trunc_x, Index trunc_t, const ExactRat& c);
    static BivariateSeries one(Index trunc_x, Index trunc_t) { return constant(trunc_x, trunc_t, 1); }
    /// c x^n t^m, or zero when (n,m) is outside the box.
    static BivariateSeries monomial(Index trunc_x, Index trunc_t, Index n, Index m, const ExactRat& c = 1);
    static BivariateSeries x(Index trunc_x, Index trunc_t) { return monomial(trunc_x, trunc_t, 1, 0); }
    static BivariateSeries t(Index trunc_x, Index trunc_t) { return monomial(trunc_x, trunc_t, 0, 1); }
    /// sum_j c[j] x^j, truncated to the box.
    static BivariateSeries from_x_coeffs(Index trunc_x, Index trunc_t, std::span<const ExactRat> c);
    /// sum_j c[j] t^j, truncated to the box.
    static BivariateSeries from_t_coeffs(Index trunc_x, Index trunc_t, std::span<const ExactRat> c);

    [[nodiscard]] Index trunc_x() const noexcept { return trunc_x_; }
    [[nodiscard]] Index trunc_t() const noexcept { return trunc_t_; }
    [[nodiscard]] bool same_box(const BivariateSeries& o) const noexcept
    {
        return trunc_x_ == o.trunc_x_ && trunc_t_ == o.trunc_t_;
    }
    [[nodiscard]] bool in_box(Index n, Index m) const noexcept
    {
        return n >= 0 && m >= 0 && n <= trunc_x_ && m <= trunc_t_;
    }

    /// Coefficient of x^n t^m; zero outside the box.
    [[nodiscard]] ExactRat coeff(Index n, Index m) const;
    void set(Index n, Index m, const ExactRat& v);

    /// Unchecked access inside the box.
    [[nodiscard]] const ExactRat& operator()(Index n, Index m) const { return data_[offset(n, m)]; }
    ExactRat& operator()(Index n, Index m) { return data_[offset(n, m)]; }

    [[nodiscard]] bool is_zero() const;
    /// Minimal total degree of a nonzero term; -1 for the zero series.
    [[nodiscard]] Index valuation() const;
    /// Minimal x-degree of a nonzero term; -1 for the zero series.
    [[nodiscard]] Index x_valuation() const;

    /// Copy restricted to the smaller box (n <= nx, m <= mt).
    [[nodiscard]] BivariateSeries truncated(Index nx, Index mt) const;

    /// The t-only slice at x = 0, as a list of M+1 coefficients.
    [[nodiscard]] std::vector<ExactRat> x0_slice() const;

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

    BivariateSeries& operator+=(const BivariateSeries& b);
    BivariateSeries& operator-=(const BivariateSeries& b);
    BivariateSeries& operator*=(const ExactRat& c);

private:
    [[nodiscard]] std::size_t offset(Index n, Index m) const noexcept
    {
        return static_cast<std::size_t>(n * (trunc_t_ + 1) + m);
    }

    Index trunc_x_;
    Index trunc_t_;
    std::vector<ExactRat> data_;
};

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries neg(const BivariateSeries& a);
BivariateSeries scale(const BivariateSeries& a, const ExactRat& c);

/// Truncated Cauchy product.
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);

/// a^k for k >= 0.
BivariateSeries pow(const BivariateSeries& a, Index k);

/// exp(a) for a with zero constant term.
BivariateSeries exp(const BivariateSeries& a);

/// 1/a for a with nonzero constant term.
BivariateSeries reciprocal(const BivariateSeries& a);

/// d/dx; the result box has trunc_x one smaller (stays 0 when already 0).
BivariateSeries derivative_x(const BivariateSeries& a);

/// a(s, t): the x variable of `a` replaced by `s`, with `a` read as the
/// polynomial it stores. Requires s(0,0) = 0.
///
/// When s has x-valuation >= 1 this is the exact box truncation of the
/// composed series. When s only has t-valuation >= 1, terms of `a` beyond
/// x-degree N can still reach the box; callers needing the full composition
/// must supply `a` with trunc_x >= trunc_t.
BivariateSeries substitute_x(const BivariateSeries& a, const BivariateSeries& s);

/// sum_j outer[j] inner^j. The inner series must have no constant term, so
/// inner^j has total degree >= j and terms with j > N+M cannot reach the box;
/// the sum is cut there.
BivariateSeries compose_univariate(std::span<const ExactRat> outer, const BivariateSeries& inner);

/// n! * coeff(n,m): the EGF-in-x / OGF-in-t coefficient.
ExactRat egf_coeff(const BivariateSeries& a, Index n, Index m);

inline BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) { return add(a, b); }
inline BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) { return sub(a, b); }
inline BivariateSeries operator-(const BivariateSeries& a) { return neg(a); }
inline BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) { return mul(a, b); }
inline BivariateSeries operator*(const ExactRat& c, const BivariateSeries& a) { return scale(a, c); }

}  // namespace eulerian2
