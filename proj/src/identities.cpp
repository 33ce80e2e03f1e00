#include "eulerian2/identities.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>

#include "eulerian2/generating_functions.hpp"
#include "eulerian2/series.hpp"

namespace eulerian2 {

namespace {

constexpr std::array kIdentityNames{
    std::pair{IdentityId::ExplicitA, "explicit-a"},
    std::pair{IdentityId::ExplicitB, "explicit-b"},
    std::pair{IdentityId::Stirling, "stirling"},
    std::pair{IdentityId::Tree, "tree"},
    std::pair{IdentityId::AlternatingR, "alternating"},
    std::pair{IdentityId::RSupport, "r-support"},
    std::pair{IdentityId::RSeries, "r-series"},
    std::pair{IdentityId::GFCoeffs, "gf-coeffs"},
    std::pair{IdentityId::GFDerivative, "gf-derivative"},
    std::pair{IdentityId::CompInverse, "comp-inverse"},
    std::pair{IdentityId::ZSubstitution, "z-substitution"},
    std::pair{IdentityId::LagrangeD, "lagrange-d"},
    std::pair{IdentityId::LambertW, "lambert-w"},
    std::pair{IdentityId::TreeSeries, "tree-series"},
    std::pair{IdentityId::PrintedQuadSum, "printed-quad-sum"},
};

Index param(const Params& params, std::string_view name)
{
    for (const auto& [key, value] : params) {
        if (key == name) {
            return value;
        }
    }
    throw UsageError("missing parameter '" + std::string(name) + "'");
}

// Accumulates one report: counts cases and keeps the first mismatch.
class Sweep {
public:
    Sweep(IdentityId id, Params range) : report_{id, std::move(range), 0, std::nullopt} {}

    void record(Params params, const ExactRat& lhs, const ExactRat& rhs)
    {
        ++report_.cases;
        if (lhs != rhs && !report_.counterexample) {
            report_.counterexample = Counterexample{std::move(params), lhs, rhs};
        }
    }

    // Coefficientwise comparison of two series over the box of `lhs`.
    void record_series(const BivariateSeries& lhs, const BivariateSeries& rhs, Params extra = {})
    {
        for (Index n = 0; n <= lhs.trunc_x(); ++n) {
            for (Index m = 0; m <= lhs.trunc_t(); ++m) {
                Params p = extra;
                p.emplace_back("n", n);
                p.emplace_back("m", m);
                record(std::move(p), lhs(n, m), rhs.coeff(n, m));
            }
        }
    }

    IdentityReport take() { return std::move(report_); }

private:
    IdentityReport report_;
};

Sides explicit_a_sides(Index n, Index m, const EulerianSource& src)
{
    return {ExactRat(eulerian2_explicit_a(n, m)), ExactRat(src(n, m))};
}

Sides explicit_b_sides(Index n, Index m, const EulerianSource& src)
{
    return {ExactRat(eulerian2_explicit_b(n, m)), ExactRat(src(n, m))};
}

Sides stirling_sides(Index n, Index m, const EulerianSource& src)
{
    ExactInt sum = 0;
    for (Index i = 0; i <= m; ++i) {
        sum += src(n, i) * binomial(m + 2 * n - i, m - i);
    }
    return {ExactRat(stirling2(n + m, m)), ExactRat(sum)};
}

// r(0,n) (n-1)! against n^{n-1} - (n-1)^{n-1}, with 0^0 = 1.
Sides tree_sides(Index n, const EulerianSource& src)
{
    return {r_coeff(0, n, src) * ExactRat(factorial(n - 1)), ExactRat(power(n, n - 1) - power(n - 1, n - 1))};
}

Sides alternating_sides(Index m, const EulerianSource& src)
{
    ExactRat sum = 0;
    for (Index n = 0; n <= m; ++n) {
        const ExactRat r = r_coeff(n, m, src);
        sum += (n % 2 == 0) ? r : ExactRat(-r);
    }
    return {sum, ExactRat(m == 0 ? 1 : 0)};
}

Sides r_support_sides(Index n, Index m, const EulerianSource& src)
{
    return {r_coeff(n, m, src), ExactRat(0)};
}

// sum_{m=0}^{n} (-1)^m sum_{i=0}^{n} sum_{k=0}^{i} C(m+k,m) <<m+k, n-i>> C(m+k+i-1, 2m+2k-1)
Sides quad_sum_sides(Index n, const EulerianSource& src)
{
    ExactInt total = 0;
    for (Index m = 0; m <= n; ++m) {
        ExactInt inner = 0;
        for (Index i = 0; i <= n; ++i) {
            for (Index k = 0; k <= i; ++k) {
                inner += binomial(m + k, m) * src(m + k, n - i) * binomial(m + k + i - 1, 2 * m + 2 * k - 1);
            }
        }
        if (m % 2 == 0) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    return {ExactRat(total), ExactRat(0)};
}

// t(x+1)/(1-t)^2 in the given box.
BivariateSeries r_substitution(Index nx, Index mt)
{
    const auto one = BivariateSeries::one(nx, mt);
    const auto t = BivariateSeries::t(nx, mt);
    const auto x = BivariateSeries::x(nx, mt);
    const auto omt = one - t;
    return t * (x + one) * reciprocal(omt * omt);
}

}  // namespace

const std::vector<IdentityId>& all_identities()
{
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& [id, name] : kIdentityNames) {
            v.push_back(id);
        }
        return v;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id)
{
    for (const auto& [key, name] : kIdentityNames) {
        if (key == id) {
            return name;
        }
    }
    throw std::logic_error("unnamed identity");
}

std::optional<IdentityId> parse_identity(std::string_view name)
{
    for (const auto& [key, value] : kIdentityNames) {
        if (name == value) {
            return key;
        }
    }
    return std::nullopt;
}

bool is_informational(IdentityId id)
{
    return id == IdentityId::PrintedQuadSum;
}

ExactRat r_coeff(Index n, Index m, const EulerianSource& source)
{
    if (n < 0 || m < 0) {
        throw DomainError("r_coeff: negative index");
    }
    ExactRat sum = 0;
    for (Index i = 0; i <= m; ++i) {
        for (Index k = 0; k <= n + m - i; ++k) {
            const ExactInt c1 = binomial(k, n);
            if (c1 == 0) {
                continue;
            }
            const ExactInt c2 = binomial(m - i + k - 1, m - i - k);
            if (c2 == 0) {
                continue;
            }
            sum += make_rat(source(k, i) * c1 * c2, factorial(k));
        }
    }
    return sum;
}

ExactRat r_coeff_shifted(Index n, Index m, const EulerianSource& source)
{
    if (n < 0 || m < 0) {
        throw DomainError("r_coeff_shifted: negative index");
    }
    ExactRat sum = 0;
    for (Index i = 0; i <= m; ++i) {
        for (Index k = 0; k <= m - i; ++k) {
            const ExactInt c = binomial(k + n, n) * binomial(m - i + k + n - 1, m - i - k - n);
            if (c != 0) {
                sum += make_rat(source(k + n, i) * c, factorial(k + n));
            }
        }
    }
    return sum;
}

std::optional<Sides> evaluate_case(IdentityId id, const Params& p, const EulerianSource& source)
{
    switch (id) {
    case IdentityId::ExplicitA:
        return explicit_a_sides(param(p, "n"), param(p, "m"), source);
    case IdentityId::ExplicitB:
        return explicit_b_sides(param(p, "n"), param(p, "m"), source);
    case IdentityId::Stirling:
        return stirling_sides(param(p, "n"), param(p, "m"), source);
    case IdentityId::Tree:
        return tree_sides(param(p, "n"), source);
    case IdentityId::AlternatingR:
        return alternating_sides(param(p, "m"), source);
    case IdentityId::RSupport:
        return r_support_sides(param(p, "n"), param(p, "m"), source);
    case IdentityId::PrintedQuadSum:
        return quad_sum_sides(param(p, "n"), source);
    default:
        return std::nullopt;
    }
}

IdentityReport check_explicit_a(Index n_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::ExplicitA, {{"n_max", n_max}});
    for (Index n = 0; n <= n_max; ++n) {
        for (Index m = 0; m <= n; ++m) {
            const auto s = explicit_a_sides(n, m, source);
            sweep.record({{"n", n}, {"m", m}}, s.lhs, s.rhs);
        }
    }
    return sweep.take();
}

IdentityReport check_explicit_b(Index n_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::ExplicitB, {{"n_max", n_max}});
    for (Index n = 1; n <= n_max; ++n) {
        for (Index m = 0; m <= n; ++m) {
            const auto s = explicit_b_sides(n, m, source);
            sweep.record({{"n", n}, {"m", m}}, s.lhs, s.rhs);
        }
    }
    return sweep.take();
}

IdentityReport check_stirling_identity(Index n_max, Index m_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::Stirling, {{"n_max", n_max}, {"m_max", m_max}});
    for (Index n = 0; n <= n_max; ++n) {
        for (Index m = 0; m <= m_max; ++m) {
            const auto s = stirling_sides(n, m, source);
            sweep.record({{"n", n}, {"m", m}}, s.lhs, s.rhs);
        }
    }
    return sweep.take();
}

IdentityReport check_tree_identity(Index n_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::Tree, {{"n_max", n_max}});
    for (Index n = 1; n <= n_max; ++n) {
        const auto s = tree_sides(n, source);
        sweep.record({{"n", n}}, s.lhs, s.rhs);
    }
    return sweep.take();
}

IdentityReport check_alternating_identity(Index m_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::AlternatingR, {{"m_max", m_max}});
    for (Index m = 0; m <= m_max; ++m) {
        const auto s = alternating_sides(m, source);
        sweep.record({{"m", m}}, s.lhs, s.rhs);
    }
    return sweep.take();
}

IdentityReport check_r_support(Index m_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::RSupport, {{"m_max", m_max}});
    for (Index m = 0; m <= m_max; ++m) {
        for (Index n = m + 1; n <= m_max; ++n) {
            const auto s = r_support_sides(n, m, source);
            sweep.record({{"n", n}, {"m", m}}, s.lhs, s.rhs);
        }
    }
    return sweep.take();
}

IdentityReport check_r_against_series(Index box_n, Index box_t, const EulerianSource& source)
{
    Sweep sweep(IdentityId::RSeries, {{"box_n", box_n}, {"box_t", box_t}});
    // x-degree k of the generating function feeds t-degrees >= k, so the
    // outer series needs x-order at least box_t.
    const Index wide = std::max(box_n, box_t);
    const auto composed = substitute_x(gf_rhs(wide, box_t), r_substitution(wide, box_t));
    for (Index n = 0; n <= box_n; ++n) {
        for (Index m = 0; m <= box_t; ++m) {
            const ExactRat r = r_coeff(n, m, source);
            sweep.record({{"n", n}, {"m", m}}, composed(n, m), r);
            if (n > m) {
                sweep.record({{"n", n}, {"m", m}}, r, 0);
            }
        }
    }
    return sweep.take();
}

IdentityReport check_gf_coeffs(Index box_n, Index box_t, const EulerianSource& source)
{
    Sweep sweep(IdentityId::GFCoeffs, {{"box_n", box_n}, {"box_t", box_t}});
    const auto gf = gf_rhs(box_n, box_t);
    for (Index n = 0; n <= box_n; ++n) {
        for (Index m = 0; m <= box_t; ++m) {
            sweep.record({{"n", n}, {"m", m}}, egf_coeff(gf, n, m), ExactRat(source(n, m)));
        }
    }
    return sweep.take();
}

IdentityReport check_gf_derivative(Index box_n, Index box_t, const EulerianSource& source)
{
    Sweep sweep(IdentityId::GFDerivative, {{"box_n", box_n}, {"box_t", box_t}});
    const auto anti = gf_antiderivative(box_n, box_t);
    if (box_n >= 1) {
        sweep.record_series(derivative_x(anti), gf_rhs(box_n - 1, box_t), {{"derivative", 1}});
    }
    for (Index n = 0; n <= box_n; ++n) {
        for (Index m = 0; m <= box_t; ++m) {
            const ExactRat expected = (n == 0) ? ExactRat(0) : ExactRat(source(n - 1, m));
            sweep.record({{"derivative", 0}, {"n", n}, {"m", m}}, egf_coeff(anti, n, m), expected);
        }
    }
    return sweep.take();
}

IdentityReport check_compositional_inverse(Index box_n, Index box_t)
{
    Sweep sweep(IdentityId::CompInverse, {{"box_n", box_n}, {"box_t", box_t}});
    const auto u = u_series(box_n, box_t);
    const auto y = y_series(box_n, box_t);
    const auto x = BivariateSeries::x(box_n, box_t);
    sweep.record_series(substitute_x(u, y), x, {{"order", 0}});
    sweep.record_series(substitute_x(y, u), x, {{"order", 1}});
    return sweep.take();
}

IdentityReport check_z_substitution(Index box_n, Index box_t)
{
    Sweep sweep(IdentityId::ZSubstitution, {{"box_n", box_n}, {"box_t", box_t}});
    const auto inv = lambert_inverse_series(box_n, box_t);
    const auto y = y_series(box_n, box_t);
    sweep.record_series(substitute_x(y, inv), BivariateSeries::x(box_n, box_t), {{"part", 0}});
    sweep.record_series(inv, u_series(box_n, box_t), {{"part", 1}});
    return sweep.take();
}

IdentityReport check_lagrange(Index box_n, Index box_t, Index k_max)
{
    Sweep sweep(IdentityId::LagrangeD, {{"box_n", box_n}, {"box_t", box_t}, {"k_max", k_max}});
    const auto kernel = lagrange_kernel(box_n, box_t);
    const auto q = BivariateSeries::from_x_coeffs(box_n, box_t, expm1_over_x_coeffs(box_n));
    const auto tq = BivariateSeries::t(box_n, box_t) * q;
    auto kernel_power = BivariateSeries::one(box_n, box_t);
    auto tq_power = BivariateSeries::one(box_n, box_t);
    for (Index k = 1; k <= k_max; ++k) {
        kernel_power = kernel_power * kernel;
        tq_power = tq_power * tq;
        for (Index n = 0; n <= box_n; ++n) {
            for (Index m = 0; m <= box_t; ++m) {
                sweep.record({{"part", 0}, {"k", k}, {"n", n}, {"m", m}}, kernel_power(n, m), lagrange_D(n, m, k));
                sweep.record({{"part", 1}, {"k", k}, {"n", n}, {"m", m}}, tq_power(n, m), lagrange_T(n, m, k));
            }
        }
    }
    // [x^n] u = (1/n) [x^{n-1}] F^n, the k = 1 case of Lagrange inversion.
    const auto u = u_series(box_n, box_t);
    for (Index n = 1; n <= box_n; ++n) {
        for (Index m = 0; m <= box_t; ++m) {
            sweep.record({{"part", 2}, {"n", n}, {"m", m}}, u(n, m), lagrange_D(n - 1, m, n) / ExactRat(n));
        }
    }
    return sweep.take();
}

IdentityReport check_lambert_functional(Index order)
{
    Sweep sweep(IdentityId::LambertW, {{"order", order}});
    const auto w = BivariateSeries::from_x_coeffs(order, 0, lambert_w_coeffs(order));
    sweep.record_series(w * exp(w), BivariateSeries::x(order, 0));
    return sweep.take();
}

IdentityReport check_tree_series(Index order)
{
    Sweep sweep(IdentityId::TreeSeries, {{"order", order}});
    const auto series = tree_reciprocal_series(order);
    for (Index n = 0; n <= order; ++n) {
        sweep.record({{"n", n}}, series[n], make_rat(power(n, n), factorial(n)));
    }
    return sweep.take();
}

IdentityReport check_printed_quad_sum(Index n_max, const EulerianSource& source)
{
    Sweep sweep(IdentityId::PrintedQuadSum, {{"n_max", n_max}});
    for (Index n = 0; n <= n_max; ++n) {
        const auto s = quad_sum_sides(n, source);
        sweep.record({{"n", n}}, s.lhs, s.rhs);
    }
    return sweep.take();
}

SuiteBounds SuiteBounds::zero()
{
    SuiteBounds b;
    b.explicit_n = b.stirling_n = b.stirling_m = b.tree_n = b.alternating_m = 0;
    b.r_box = b.gf_box_n = b.gf_box_t = b.inverse_box = b.z_box = b.lagrange_box = 0;
    b.lagrange_k = b.lambert_order = b.tree_series_n = b.quad_n = 0;
    return b;
}

IdentityReport run_identity(IdentityId id, const SuiteBounds& b, const EulerianSource& source)
{
    switch (id) {
    case IdentityId::ExplicitA: return check_explicit_a(b.explicit_n, source);
    case IdentityId::ExplicitB: return check_explicit_b(b.explicit_n, source);
    case IdentityId::Stirling: return check_stirling_identity(b.stirling_n, b.stirling_m, source);
    case IdentityId::Tree: return check_tree_identity(b.tree_n, source);
    case IdentityId::AlternatingR: return check_alternating_identity(b.alternating_m, source);
    case IdentityId::RSupport: return check_r_support(b.alternating_m, source);
    case IdentityId::RSeries: return check_r_against_series(b.r_box, b.r_box, source);
    case IdentityId::GFCoeffs: return check_gf_coeffs(b.gf_box_n, b.gf_box_t, source);
    case IdentityId::GFDerivative: return check_gf_derivative(b.gf_box_n, b.gf_box_t, source);
    case IdentityId::CompInverse: return check_compositional_inverse(b.inverse_box, b.inverse_box);
    case IdentityId::ZSubstitution: return check_z_substitution(b.z_box, b.z_box);
    case IdentityId::LagrangeD: return check_lagrange(b.lagrange_box, b.lagrange_box, b.lagrange_k);
    case IdentityId::LambertW: return check_lambert_functional(b.lambert_order);
    case IdentityId::TreeSeries: return check_tree_series(b.tree_series_n);
    case IdentityId::PrintedQuadSum: return check_printed_quad_sum(b.quad_n, source);
    }
    throw std::logic_error("unhandled identity");
}

std::vector<IdentityReport> run_all(const SuiteBounds& bounds, const EulerianSource& source,
                                    const std::vector<IdentityId>& ids)
{
    const auto& selected = ids.empty() ? all_identities() : ids;
    std::vector<std::future<IdentityReport>> tasks;
    tasks.reserve(selected.size());
    for (const auto id : selected) {
        tasks.push_back(std::async(std::launch::async, [id, &bounds, &source] {
            return run_identity(id, bounds, source);
        }));
    }
    std::vector<IdentityReport> reports;
    reports.reserve(tasks.size());
    for (auto& task : tasks) {
        reports.push_back(task.get());
    }
    return reports;
}

}  // namespace eulerian2
