#include "qappell/exactnum.hpp"

#include "qappell/error.hpp"

#include <cctype>
#include <utility>

namespace qappell {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational power(const Rational& value, long exponent) {
    if (exponent < 0) {
        if (value == 0) throw DomainError("zero raised to a negative power");
        const Rational inv = 1 / value;
        return power(inv, -exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
    // Powers of coprime parts stay coprime, so no reduction is needed.
    return Rational(num, den);
}

QParam::QParam(Rational q) : q_(std::move(q)) {
    if (q_ == 0 || q_ == 1 || q_ == -1) {
        throw DomainError("q must not be 0, 1 or -1 (got " + to_string(q_) + ")");
    }
}

Rational qnum(std::size_t n, const QParam& q) {
    Rational sum = 0;
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) {
        sum += term;
        term *= q.value();
    }
    return sum;
}

Rational qfact(std::size_t n, const QParam& q) {
    Rational product = 1;
    Rational bracket = 0;
    Rational qk = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        bracket += qk;  // [k]_q = [k-1]_q + q^(k-1)
        qk *= q.value();
        product *= bracket;
    }
    return product;
}

Rational qpochhammer(const Rational& z, const QParam& q, std::size_t k) {
    Rational product = 1;
    Rational zq = z;
    for (std::size_t j = 0; j < k; ++j) {
        product *= 1 - zq;
        zq *= q.value();
    }
    return product;
}

}  // namespace qappell
