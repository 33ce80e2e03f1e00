#include "eulerian2/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace eulerian2 {

ExactInt factorial(Index n)
{
    if (n < 0) {
        throw DomainError("factorial of negative integer " + std::to_string(n));
    }
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInt power(Index base, Index exp)
{
    if (exp < 0) {
        throw DomainError("negative exponent " + std::to_string(exp));
    }
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exp));
    if (base < 0 && exp % 2 == 1) {
        r = -r;
    }
    return r;
}

ExactInt binomial(Index n, Index k)
{
    if (k < 0) {
        return 0;
    }
    ExactInt r;
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : ExactInt(-r);
}

TriangleTable::TriangleTable(TriangleKind kind) : kind_(kind), rows_{{ExactInt(1)}} {}

void TriangleTable::fill_to(Index n)
{
    if (n < 0) {
        throw DomainError("negative row index " + std::to_string(n));
    }
    while (max_n() < n) {
        const Index r = max_n() + 1;
        const auto& prev = rows_.back();
        std::vector<ExactInt> next(static_cast<std::size_t>(r + 1));
        // next[0] stays 0 for r >= 1.
        for (Index m = 1; m <= r; ++m) {
            const ExactInt& up = (m <= r - 1) ? prev[m] : ExactInt(0);
            const ExactInt& diag = prev[m - 1];
            if (kind_ == TriangleKind::Eulerian2) {
                next[m] = m * up + (2 * r - m) * diag;
            } else {
                next[m] = m * up + diag;
            }
        }
        rows_.push_back(std::move(next));
    }
}

ExactInt TriangleTable::at(Index n, Index m) const
{
    if (n < 0 || n > max_n()) {
        throw DomainError("row " + std::to_string(n) + " not filled");
    }
    if (m < 0 || m > n) {
        return 0;
    }
    return rows_[n][m];
}

void TriangleTable::set(Index n, Index m, ExactInt value)
{
    if (n < 0 || n > max_n() || m < 0 || m > n) {
        throw DomainError("entry (" + std::to_string(n) + "," + std::to_string(m) + ") not stored");
    }
    rows_[n][m] = std::move(value);
}

const std::vector<ExactInt>& TriangleTable::row(Index n) const
{
    if (n < 0 || n > max_n()) {
        throw DomainError("row " + std::to_string(n) + " not filled");
    }
    return rows_[n];
}

namespace {

// Process-wide memo. Readers take the shared lock; a miss upgrades to the
// exclusive lock and grows the table.
class SharedTriangle {
public:
    explicit SharedTriangle(TriangleKind kind) : table_(kind) {}

    ExactInt at(Index n, Index m)
    {
        {
            std::shared_lock lock(mutex_);
            if (n <= table_.max_n()) {
                return table_.at(n, m);
            }
        }
        std::unique_lock lock(mutex_);
        table_.fill_to(n);
        return table_.at(n, m);
    }

private:
    std::shared_mutex mutex_;
    TriangleTable table_;
};

SharedTriangle& stirling_memo()
{
    static SharedTriangle memo(TriangleKind::Stirling2);
    return memo;
}

SharedTriangle& eulerian_memo()
{
    static SharedTriangle memo(TriangleKind::Eulerian2);
    return memo;
}

}  // namespace

ExactInt stirling2(Index n, Index m)
{
    if (n < 0) {
        throw DomainError("stirling2: negative n " + std::to_string(n));
    }
    if (m < 0 || m > n) {
        return 0;
    }
    return stirling_memo().at(n, m);
}

ExactInt eulerian2_rec(Index n, Index m)
{
    if (n < 0) {
        throw DomainError("eulerian2_rec: negative n " + std::to_string(n));
    }
    if (m < 0 || m > n) {
        return 0;
    }
    return eulerian_memo().at(n, m);
}

ExactInt eulerian2_explicit_a(Index n, Index m)
{
    if (n < 0 || m < 0) {
        throw DomainError("eulerian2_explicit_a: negative argument");
    }
    ExactInt sum = 0;
    for (Index k = 0; k <= m; ++k) {
        ExactInt term = binomial(2 * n + 1, m - k) * stirling2(n + k, k);
        if ((m - k) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

ExactInt eulerian2_explicit_b(Index n, Index m)
{
    if (n < 0 || m < 0) {
        throw DomainError("eulerian2_explicit_b: negative argument");
    }
    if (n == 0) {
        return 0;
    }
    ExactInt sum = 0;
    for (Index k = 1; k <= m; ++k) {
        ExactInt term = k * binomial(2 * n, m - k) * stirling2(n + k - 1, k);
        if ((m - k) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

std::vector<ExactInt> triangle_row(Index n)
{
    if (n < 1) {
        throw DomainError("triangle_row: n must be >= 1, got " + std::to_string(n));
    }
    std::vector<ExactInt> row;
    row.reserve(static_cast<std::size_t>(n));
    for (Index m = 1; m <= n; ++m) {
        row.push_back(eulerian2_rec(n, m));
    }
    return row;
}

}  // namespace eulerian2
