#pragma once

#include "qappell/exactnum.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qappell {

/// Dense univariate polynomial in x with exact rational coefficients.
///
/// Coefficient i multiplies x^i. Trailing zeros are never stored, so the
/// zero polynomial is the empty coefficient vector and every other
/// polynomial has a nonzero leading coefficient.
class QPoly {
public:
    /// Degree reported for the zero polynomial. Callers that need a real
    /// degree must test is_zero() first.
    static constexpr long kZeroDegree = -1;

    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly constant(const Rational& value);
    static QPoly monomial(std::size_t degree, const Rational& coeff = 1);
    /// The polynomial x.
    static QPoly x() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const Rational& s);

    friend QPoly operator+(QPoly f, const QPoly& g) { return f += g; }
    friend QPoly operator-(QPoly f, const QPoly& g) { return f -= g; }
    friend QPoly operator*(QPoly f, const Rational& s) { return f *= s; }
    friend QPoly operator*(const Rational& s, QPoly f) { return f *= s; }
    friend QPoly operator*(const QPoly& f, const QPoly& g);
    friend QPoly operator-(QPoly f) { return f *= Rational(-1); }
    friend bool operator==(const QPoly& f, const QPoly& g) = default;

    /// Horner evaluation at x0.
    Rational eval(const Rational& x0) const;

    /// g(x) = f(c x): coefficient i is multiplied by c^i.
    QPoly scale_arg(const Rational& c) const;

    /// Hahn derivative via the basis map x^n -> [n]_q x^(n-1).
    QPoly hahn_derivative(const QParam& q) const;

    /// Human-readable form, e.g. "x^2 - 6*x + 7".
    std::string str() const;
    /// LaTeX form, e.g. "x^{2} - 6x + 7".
    std::string latex() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

inline QPoly add(const QPoly& f, const QPoly& g) { return f + g; }
inline QPoly sub(const QPoly& f, const QPoly& g) { return f - g; }
inline QPoly mul(const QPoly& f, const QPoly& g) { return f * g; }
inline QPoly scale(const QPoly& f, const Rational& s) { return f * s; }
inline Rational eval(const QPoly& f, const Rational& x0) { return f.eval(x0); }
inline QPoly scale_arg(const QPoly& f, const Rational& c) { return f.scale_arg(c); }
inline QPoly hahn_derivative(const QPoly& f, const QParam& q) { return f.hahn_derivative(q); }

/// prod_{j=0}^{k-1} (x - q^j), the polynomial form of (x^{-1}; q)_k x^k.
QPoly qproduct_basis(std::size_t k, const QParam& q);

}  // namespace qappell
