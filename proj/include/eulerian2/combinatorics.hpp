#pragma once

#include <functional>
#include <vector>

#include "eulerian2/exact.hpp"

namespace eulerian2 {

/// Binomial coefficient C(n,k).
///
/// Zero when k < 0 or when 0 <= n < k. For n < 0 and k >= 0 the usual
/// falling-factorial extension C(n,k) = (-1)^k C(k-n-1, k) applies, so
/// C(-1,0) = 1; this is the value the t-power kernel C(m-i+k-1, m-i-k)
/// needs at its (k=0, i=m) corner.
ExactInt binomial(Index n, Index k);

enum class TriangleKind { Eulerian2, Stirling2 };

/**
 * Lower-triangular table of exact values indexed by (n, m), 0 <= m <= n,
 * filled row by row from the defining recurrence.
 *
 * Boundary convention (both kinds): entry(0,0) = 1, entry(n,0) = 0 for n >= 1,
 * entry(n,m) = 0 for m > n or m < 0.
 *
 *   Eulerian2:  e(n,m) = m e(n-1,m) + (2n-m) e(n-1,m-1)
 *   Stirling2:  s(n,m) = m s(n-1,m) + s(n-1,m-1)
 *
 * A table is a plain value; sharing between threads requires external
 * synchronization while it grows. The free functions below use a process-wide
 * memo guarded by a reader/writer lock, so they are safe to call concurrently.
 */
class TriangleTable {
public:
    explicit TriangleTable(TriangleKind kind);

    [[nodiscard]] TriangleKind kind() const noexcept { return kind_; }

    /// Largest row currently filled.
    [[nodiscard]] Index max_n() const noexcept { return static_cast<Index>(rows_.size()) - 1; }

    /// Extends the table so that rows 0..n are present.
    void fill_to(Index n);

    /// Entry (n,m); `n` must be a filled row. Zero outside 0 <= m <= n.
    [[nodiscard]] ExactInt at(Index n, Index m) const;

    /// Overwrites a filled entry. Later rows are not recomputed; used to
    /// inject faults in tests.
    void set(Index n, Index m, ExactInt value);

    /// Row n as stored, entries m = 0..n.
    [[nodiscard]] const std::vector<ExactInt>& row(Index n) const;

private:
    TriangleKind kind_;
    std::vector<std::vector<ExactInt>> rows_;
};

/// S(n,m), memoized. Throws DomainError for n < 0.
ExactInt stirling2(Index n, Index m);

/// <<n,m>> from the recurrence, memoized. Throws DomainError for n < 0.
ExactInt eulerian2_rec(Index n, Index m);

/// <<n,m>> = sum_{k=0}^{m} (-1)^{m-k} C(2n+1, m-k) S(n+k, k).
ExactInt eulerian2_explicit_a(Index n, Index m);

/// <<n,m>> = sum_{k=0}^{m} (-1)^{m-k} k C(2n, m-k) S(n+k-1, k).
/// Returns 0 at n = 0, where every term vanishes (the formula is stated for
/// n >= 1 and does not reproduce <<0,0>> = 1).
ExactInt eulerian2_explicit_b(Index n, Index m);

/// [<<n,1>>, ..., <<n,n>>], the A008517 row order. Throws DomainError for n < 1.
std::vector<ExactInt> triangle_row(Index n);

/// Signature shared by every route to <<n,m>>; identity checks take one so
/// tests can feed a corrupted source.
using EulerianSource = std::function<ExactInt(Index, Index)>;

}  // namespace eulerian2
