#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace eulerian2 {

/// Arbitrary-precision signed integer. Every triangle entry lives here.
using ExactInt = mpz_class;

/// Normalized fraction: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using ExactRat = mpq_class;

/// Integer index into a triangle or a series box.
using Index = std::int64_t;

/// Raised when an argument lies outside the mathematical domain of an operation
/// (e.g. a negative row index for a triangle).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when operands violate an operation's structural precondition
/// (mismatched truncation boxes, a unit where a non-unit is required, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Builds a canonical fraction from numerator and denominator.
inline ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    ExactRat q{num, den};
    q.canonicalize();
    return q;
}

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

/// "p" when the denominator is one, "p/q" otherwise.
inline std::string to_string(const ExactRat& v) { return v.get_str(); }

ExactInt factorial(Index n);

/// base^exp with 0^0 = 1.
ExactInt power(Index base, Index exp);

}  // namespace eulerian2
