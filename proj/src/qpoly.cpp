#include "qappell/qpoly.hpp"

#include "qappell/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qappell {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& value) { return QPoly(std::vector<Rational>{value}); }

QPoly QPoly::monomial(std::size_t degree, const Rational& coeff) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return QPoly(std::move(c));
}

Rational QPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

QPoly operator*(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Rational> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

Rational QPoly::eval(const Rational& x0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

QPoly QPoly::scale_arg(const Rational& c) const {
    std::vector<Rational> out(coeffs_);
    Rational ci = 1;
    for (auto& coeff : out) {
        coeff *= ci;
        ci *= c;
    }
    return QPoly(std::move(out));
}

QPoly QPoly::hahn_derivative(const QParam& q) const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    Rational bracket = 0;  // [n]_q, built incrementally
    Rational qn = 1;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        bracket += qn;
        qn *= q.value();
        out[n - 1] = bracket * coeffs_[n];
    }
    return QPoly(std::move(out));
}

namespace {

std::string render(const QPoly& f, bool tex) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        Rational c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = c == 1 && i > 0;
        if (!unit) {
            if (tex && c.get_den() != 1) {
                os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str() << "}";
            } else {
                os << to_string(c);
            }
            if (i > 0 && !tex) os << "*";
        }
        if (i >= 1) os << "x";
        if (i >= 2) {
            if (tex) {
                os << "^{" << i << "}";
            } else {
                os << "^" << i;
            }
        }
    }
    return os.str();
}

}  // namespace

std::string QPoly::str() const { return render(*this, false); }
std::string QPoly::latex() const { return render(*this, true); }

QPoly qproduct_basis(std::size_t k, const QParam& q) {
    QPoly product = QPoly::constant(1);
    Rational qj = 1;
    for (std::size_t j = 0; j < k; ++j) {
        product = product * QPoly(std::vector<Rational>{-qj, 1});
        qj *= q.value();
    }
    return product;
}

}  // namespace qappell
