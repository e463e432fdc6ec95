#include "qappell/alsalamcarlitz.hpp"

#include "qappell/error.hpp"

#include <utility>

namespace qappell {

namespace {

void require_scaling(const Rational& alpha, const Rational& beta) {
    if (beta == 0) throw DomainError("beta must be nonzero");
    if (alpha == 0) throw DomainError("alpha must be nonzero");
}

}  // namespace

ASCParams::ASCParams(Rational a, QParam q) : a_(std::move(a)), q_(std::move(q)) {
    if (a_ == 0) throw DomainError("the Al-Salam--Carlitz parameter a must be nonzero");
}

PolyFamily asc_recurrence(const ASCParams& params, std::size_t max_degree) {
    const QParam& q = params.q();
    const Rational& a = params.a();
    const QPoly x = QPoly::x();

    std::vector<QPoly> u;
    u.reserve(max_degree + 1);
    u.push_back(QPoly::constant(1));
    if (max_degree >= 1) u.push_back(x - QPoly::constant(a + 1));
    for (std::size_t n = 1; n < max_degree; ++n) {
        const Rational qn = q.pow(static_cast<long>(n));
        const Rational shift = (a + 1) * qn;
        const Rational back = a * q.pow(static_cast<long>(n) - 1) * (1 - qn);
        u.push_back((x - QPoly::constant(shift)) * u[n] + u[n - 1] * back);
    }
    return PolyFamily(std::move(u),
                      Provenance{.kind = FamilyKind::AscRecurrence, .a = a, .q = q.value()});
}

QPoly asc_hypergeom(const ASCParams& params, std::size_t n) {
    const QParam& q = params.q();
    const Rational& a = params.a();
    const long nl = static_cast<long>(n);
    const Rational top = power(q.value(), -nl);  // the numerator parameter q^-n
    const Rational ratio = q.value() / a;

    QPoly sum;
    // Terms k > n vanish because (q^-n; q)_k has the factor 1 - q^-n q^n.
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational weight = qpochhammer(top, q, k) / qpochhammer(q.value(), q, k) *
                                power(ratio, static_cast<long>(k));
        sum += qproduct_basis(k, q) * weight;
    }
    const Rational prefactor = power(-a, nl) * power(q.value(), nl * (nl - 1) / 2);
    return sum * prefactor;
}

PolyFamily asc_hypergeom_family(const ASCParams& params, std::size_t max_degree) {
    std::vector<QPoly> u;
    u.reserve(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) u.push_back(asc_hypergeom(params, n));
    return PolyFamily(std::move(u), Provenance{.kind = FamilyKind::AscHypergeom,
                                               .a = params.a(),
                                               .q = params.q().value()});
}

PolyFamily scaled_family(const Rational& alpha, const Rational& beta, const QParam& q,
                         std::size_t max_degree) {
    require_scaling(alpha, beta);
    const PolyFamily u = asc_recurrence(ASCParams(alpha / beta, q), max_degree);
    const Rational inv_beta = 1 / beta;
    std::vector<QPoly> p;
    p.reserve(u.size());
    Rational beta_n = 1;
    for (std::size_t n = 0; n < u.size(); ++n) {
        p.push_back(u[n].scale_arg(inv_beta) * beta_n);
        beta_n *= beta;
    }
    return PolyFamily(std::move(p), Provenance{.kind = FamilyKind::Scaled,
                                               .alpha = alpha,
                                               .beta = beta,
                                               .q = q.value()});
}

TTRRCoeffs ttrr_coeffs(const Rational& alpha, const Rational& beta, const QParam& q,
                       std::size_t max_index) {
    require_scaling(alpha, beta);
    TTRRCoeffs out;
    out.B.reserve(max_index + 1);
    out.C.reserve(max_index + 1);
    const Rational sum = alpha + beta;
    const Rational prod = alpha * beta;
    Rational qn = 1;
    Rational qn_prev = 0;  // q^(n-1), unused at n = 0
    for (std::size_t n = 0; n <= max_index; ++n) {
        out.B.push_back(sum * qn);
        out.C.push_back(n == 0 ? Rational(0) : Rational(-prod * qn_prev * (1 - qn)));
        qn_prev = qn;
        qn *= q.value();
    }
    return out;
}

PolyFamily family_from_ttrr(const TTRRCoeffs& coeffs, std::size_t max_degree,
                            Provenance provenance) {
    if (max_degree > 0 && max_degree - 1 > coeffs.max_index()) {
        throw DomainError("recurrence coefficients do not reach degree " +
                          std::to_string(max_degree));
    }
    const QPoly x = QPoly::x();
    std::vector<QPoly> p;
    p.reserve(max_degree + 1);
    p.push_back(QPoly::constant(1));
    if (max_degree >= 1) p.push_back(x - QPoly::constant(coeffs.B[0]));
    for (std::size_t n = 1; n < max_degree; ++n) {
        p.push_back((x - QPoly::constant(coeffs.B[n])) * p[n] - p[n - 1] * coeffs.C[n]);
    }
    return PolyFamily(std::move(p), std::move(provenance));
}

}  // namespace qappell
