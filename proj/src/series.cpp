#include "eulerian2/series.hpp"

#include <algorithm>
#include <string>

namespace eulerian2 {

namespace {

void require_same_box(const BivariateSeries& a, const BivariateSeries& b, const char* op)
{
    if (!a.same_box(b)) {
        throw UsageError(std::string(op) + ": truncation boxes differ (" + std::to_string(a.trunc_x()) + "x" +
                         std::to_string(a.trunc_t()) + " vs " + std::to_string(b.trunc_x()) + "x" +
                         std::to_string(b.trunc_t()) + ")");
    }
}

}  // namespace

BivariateSeries::BivariateSeries(Index trunc_x, Index trunc_t) : trunc_x_(trunc_x), trunc_t_(trunc_t)
{
    if (trunc_x < 0 || trunc_t < 0) {
        throw UsageError("negative truncation order");
    }
    data_.resize(static_cast<std::size_t>((trunc_x + 1) * (trunc_t + 1)));
}

BivariateSeries BivariateSeries::constant(Index trunc_x, Index trunc_t, const ExactRat& c)
{
    return monomial(trunc_x, trunc_t, 0, 0, c);
}

BivariateSeries BivariateSeries::monomial(Index trunc_x, Index trunc_t, Index n, Index m, const ExactRat& c)
{
    BivariateSeries s(trunc_x, trunc_t);
    if (s.in_box(n, m)) {
        s(n, m) = c;
    }
    return s;
}

BivariateSeries BivariateSeries::from_x_coeffs(Index trunc_x, Index trunc_t, std::span<const ExactRat> c)
{
    BivariateSeries s(trunc_x, trunc_t);
    const auto top = std::min<Index>(trunc_x, static_cast<Index>(c.size()) - 1);
    for (Index n = 0; n <= top; ++n) {
        s(n, 0) = c[n];
    }
    return s;
}

BivariateSeries BivariateSeries::from_t_coeffs(Index trunc_x, Index trunc_t, std::span<const ExactRat> c)
{
    BivariateSeries s(trunc_x, trunc_t);
    const auto top = std::min<Index>(trunc_t, static_cast<Index>(c.size()) - 1);
    for (Index m = 0; m <= top; ++m) {
        s(0, m) = c[m];
    }
    return s;
}

ExactRat BivariateSeries::coeff(Index n, Index m) const
{
    return in_box(n, m) ? (*this)(n, m) : ExactRat(0);
}

void BivariateSeries::set(Index n, Index m, const ExactRat& v)
{
    if (!in_box(n, m)) {
        throw UsageError("coefficient (" + std::to_string(n) + "," + std::to_string(m) + ") outside the box");
    }
    (*this)(n, m) = v;
}

bool BivariateSeries::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const ExactRat& c) { return c == 0; });
}

Index BivariateSeries::valuation() const
{
    Index best = -1;
    for (Index n = 0; n <= trunc_x_; ++n) {
        for (Index m = 0; m <= trunc_t_; ++m) {
            if ((*this)(n, m) != 0 && (best < 0 || n + m < best)) {
                best = n + m;
            }
        }
    }
    return best;
}

Index BivariateSeries::x_valuation() const
{
    for (Index n = 0; n <= trunc_x_; ++n) {
        for (Index m = 0; m <= trunc_t_; ++m) {
            if ((*this)(n, m) != 0) {
                return n;
            }
        }
    }
    return -1;
}

BivariateSeries BivariateSeries::truncated(Index nx, Index mt) const
{
    if (nx > trunc_x_ || mt > trunc_t_) {
        throw UsageError("truncated: target box exceeds source box");
    }
    BivariateSeries r(nx, mt);
    for (Index n = 0; n <= nx; ++n) {
        for (Index m = 0; m <= mt; ++m) {
            r(n, m) = (*this)(n, m);
        }
    }
    return r;
}

std::vector<ExactRat> BivariateSeries::x0_slice() const
{
    std::vector<ExactRat> out;
    out.reserve(static_cast<std::size_t>(trunc_t_ + 1));
    for (Index m = 0; m <= trunc_t_; ++m) {
        out.push_back((*this)(0, m));
    }
    return out;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b)
{
    return a.same_box(b) && a.data_ == b.data_;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& b)
{
    require_same_box(*this, b, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += b.data_[i];
    }
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& b)
{
    require_same_box(*this, b, "sub");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= b.data_[i];
    }
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(const ExactRat& c)
{
    for (auto& v : data_) {
        v *= c;
    }
    return *this;
}

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b)
{
    BivariateSeries r = a;
    r += b;
    return r;
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b)
{
    BivariateSeries r = a;
    r -= b;
    return r;
}

BivariateSeries neg(const BivariateSeries& a)
{
    return scale(a, -1);
}

BivariateSeries scale(const BivariateSeries& a, const ExactRat& c)
{
    BivariateSeries r = a;
    r *= c;
    return r;
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b)
{
    require_same_box(a, b, "mul");
    const Index nx = a.trunc_x();
    const Index mt = a.trunc_t();
    BivariateSeries r(nx, mt);
    ExactRat prod;
    for (Index i = 0; i <= nx; ++i) {
        for (Index j = 0; j <= mt; ++j) {
            const ExactRat& lhs = a(i, j);
            if (lhs == 0) {
                continue;
            }
            for (Index p = 0; p + i <= nx; ++p) {
                for (Index q = 0; q + j <= mt; ++q) {
                    const ExactRat& rhs = b(p, q);
                    if (rhs == 0) {
                        continue;
                    }
                    mpq_mul(prod.get_mpq_t(), lhs.get_mpq_t(), rhs.get_mpq_t());
                    r(i + p, j + q) += prod;
                }
            }
        }
    }
    return r;
}

BivariateSeries pow(const BivariateSeries& a, Index k)
{
    if (k < 0) {
        throw UsageError("pow: negative exponent");
    }
    BivariateSeries result = BivariateSeries::one(a.trunc_x(), a.trunc_t());
    BivariateSeries base = a;
    while (k > 0) {
        if (k & 1) {
            result = mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

BivariateSeries exp(const BivariateSeries& a)
{
    if (a(0, 0) != 0) {
        throw UsageError("exp: argument has a nonzero constant term");
    }
    const Index top = a.trunc_x() + a.trunc_t();
    std::vector<ExactRat> inv_fact(static_cast<std::size_t>(top + 1));
    ExactInt f = 1;
    for (Index j = 0; j <= top; ++j) {
        if (j > 0) {
            f *= j;
        }
        inv_fact[j] = make_rat(1, f);
    }
    return compose_univariate(inv_fact, a);
}

BivariateSeries reciprocal(const BivariateSeries& a)
{
    if (a(0, 0) == 0) {
        throw UsageError("reciprocal: zero constant term");
    }
    // b(n,m) = -(1/a00) sum_{(i,j) != (0,0)} a(i,j) b(n-i, m-j), solved in
    // lexicographic order so every b on the right is already known.
    const Index nx = a.trunc_x();
    const Index mt = a.trunc_t();
    const ExactRat inv0 = 1 / a(0, 0);
    BivariateSeries b(nx, mt);
    ExactRat acc;
    ExactRat prod;
    for (Index n = 0; n <= nx; ++n) {
        for (Index m = 0; m <= mt; ++m) {
            acc = (n == 0 && m == 0) ? ExactRat(1) : ExactRat(0);
            for (Index i = 0; i <= n; ++i) {
                for (Index j = 0; j <= m; ++j) {
                    if ((i == 0 && j == 0) || a(i, j) == 0) {
                        continue;
                    }
                    mpq_mul(prod.get_mpq_t(), a(i, j).get_mpq_t(), b(n - i, m - j).get_mpq_t());
                    acc -= prod;
                }
            }
            b(n, m) = acc * inv0;
        }
    }
    return b;
}

BivariateSeries derivative_x(const BivariateSeries& a)
{
    const Index nx = std::max<Index>(a.trunc_x() - 1, 0);
    BivariateSeries r(nx, a.trunc_t());
    for (Index n = 0; n + 1 <= a.trunc_x(); ++n) {
        for (Index m = 0; m <= a.trunc_t(); ++m) {
            r(n, m) = a(n + 1, m) * (n + 1);
        }
    }
    return r;
}

BivariateSeries substitute_x(const BivariateSeries& a, const BivariateSeries& s)
{
    require_same_box(a, s, "substitute_x");
    if (s(0, 0) != 0) {
        throw UsageError("substitute_x: substituted series has a nonzero constant term");
    }
    // Horner in x: (((a_N(t)) s + a_{N-1}(t)) s + ...) + a_0(t).
    const Index nx = a.trunc_x();
    const Index mt = a.trunc_t();
    auto row_as_series = [&](Index n) {
        BivariateSeries r(nx, mt);
        for (Index m = 0; m <= mt; ++m) {
            r(0, m) = a(n, m);
        }
        return r;
    };
    BivariateSeries result = row_as_series(nx);
    for (Index n = nx - 1; n >= 0; --n) {
        result = mul(result, s);
        result += row_as_series(n);
    }
    return result;
}

BivariateSeries compose_univariate(std::span<const ExactRat> outer, const BivariateSeries& inner)
{
    if (inner(0, 0) != 0) {
        throw UsageError("compose_univariate: inner series has a nonzero constant term");
    }
    const Index nx = inner.trunc_x();
    const Index mt = inner.trunc_t();
    const Index top = std::min<Index>(nx + mt, static_cast<Index>(outer.size()) - 1);
    if (top < 0) {
        return BivariateSeries::zero(nx, mt);
    }
    BivariateSeries result = BivariateSeries::constant(nx, mt, outer[top]);
    for (Index j = top - 1; j >= 0; --j) {
        result = mul(result, inner);
        result(0, 0) += outer[j];
    }
    return result;
}

ExactRat egf_coeff(const BivariateSeries& a, Index n, Index m)
{
    if (!a.in_box(n, m)) {
        throw UsageError("egf_coeff: (" + std::to_string(n) + "," + std::to_string(m) + ") outside the box");
    }
    return a(n, m) * ExactRat(factorial(n));
}

}  // namespace eulerian2
