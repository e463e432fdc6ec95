#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace qappell {

/// Exact rational scalar. gmpxx keeps every value in canonical form
/// (positive denominator, coprime parts).
using Rational = mpq_class;

/// Parses "p/q" or "p" with an optional leading sign. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// value^exponent for any integer exponent; a negative exponent needs value != 0.
Rational power(const Rational& value, long exponent);

/// The base q of all q-calculus operations. Rejects 0, 1 and -1 so that
/// [n]_q never vanishes for n >= 1.
class QParam {
public:
    explicit QParam(Rational q);

    const Rational& value() const noexcept { return q_; }

    /// q^n for any integer n.
    Rational pow(long n) const { return power(q_, n); }

private:
    Rational q_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
Rational qnum(std::size_t n, const QParam& q);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
Rational qfact(std::size_t n, const QParam& q);

/// (z; q)_k = (1 - z)(1 - zq)...(1 - zq^(k-1)), with (z; q)_0 = 1.
Rational qpochhammer(const Rational& z, const QParam& q, std::size_t k);

}  // namespace qappell
