#pragma once

#include "qappell/exactnum.hpp"
#include "qappell/family.hpp"
#include "qappell/qpoly.hpp"

#include <cstddef>
#include <vector>

namespace qappell {

/// Parameters of the Al-Salam--Carlitz I family U_n^{(a)}(x; q); a != 0.
class ASCParams {
public:
    ASCParams(Rational a, QParam q);

    const Rational& a() const noexcept { return a_; }
    const QParam& q() const noexcept { return q_; }

private:
    Rational a_;
    QParam q_;
};

/// U_0..U_N from
///   U_{n+1} = (x - (a+1) q^n) U_n + a q^(n-1) (1 - q^n) U_{n-1},  U_0 = 1.
/// The n = 0 step has no U_{-1} term since its coefficient carries 1 - q^0.
PolyFamily asc_recurrence(const ASCParams& params, std::size_t max_degree);

/// U_n from the terminating series
///   (-a)^n q^C(n,2) sum_k (q^-n; q)_k / (q; q)_k (q/a)^k prod_{j<k} (x - q^j).
QPoly asc_hypergeom(const ASCParams& params, std::size_t n);

/// The whole family U_0..U_N built member by member from asc_hypergeom.
PolyFamily asc_hypergeom_family(const ASCParams& params, std::size_t max_degree);

/// P_n(x) = beta^n U_n^{(alpha/beta)}(x/beta; q). Monic.
PolyFamily scaled_family(const Rational& alpha, const Rational& beta, const QParam& q,
                         std::size_t max_degree);

/// Monic recurrence P_{n+1} = (x - B_n) P_n - C_n P_{n-1}. C[0] is unused and zero.
struct TTRRCoeffs {
    std::vector<Rational> B;
    std::vector<Rational> C;

    /// Largest n for which B_n and C_n are both available.
    std::size_t max_index() const noexcept { return B.size() - 1; }
};

/// B_n = (alpha + beta) q^n, C_n = -alpha beta q^(n-1) (1 - q^n) for n = 0..N.
TTRRCoeffs ttrr_coeffs(const Rational& alpha, const Rational& beta, const QParam& q,
                       std::size_t max_index);

/// Family generated by arbitrary monic recurrence coefficients, P_0..P_N.
PolyFamily family_from_ttrr(const TTRRCoeffs& coeffs, std::size_t max_degree,
                            Provenance provenance);

}  // namespace qappell
