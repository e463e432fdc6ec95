#include "qappell/quasi.hpp"

#include <utility>

namespace qappell {

namespace {

void require_nonzero(const Rational& value, const char* name) {
    if (value == 0) throw DomainError(std::string(name) + " must be nonzero");
}

/// sum_{k<=upto} T_k Q_k
QPoly weighted_tail(const PolyFamily& family, std::span<const Rational> t, std::size_t upto) {
    QPoly sum;
    for (std::size_t k = 0; k <= upto; ++k) sum += family[k] * t[k];
    return sum;
}

}  // namespace

QuasiParams::QuasiParams(Rational alpha, Rational beta, Rational lambda, QParam q)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), lambda_(std::move(lambda)),
      q_(std::move(q)) {
    require_nonzero(alpha_, "alpha");
    require_nonzero(beta_, "beta");
    require_nonzero(lambda_, "lambda");
}

std::vector<Rational> connection_coeffs(const Rational& lambda, const QParam& q,
                                        std::size_t max_index) {
    require_nonzero(lambda, "lambda");
    std::vector<Rational> t;
    t.reserve(max_index + 1);
    t.emplace_back(1);
    for (std::size_t n = 1; n <= max_index; ++n) {
        t.push_back(t.back() * lambda / qnum(n, q));
    }
    return t;
}

PolyFamily build_Q(const QuasiParams& params, std::size_t max_degree) {
    const PolyFamily p = scaled_family(params.alpha(), params.beta(), params.q(), max_degree);
    std::vector<QPoly> out;
    out.reserve(p.size());
    out.push_back(p[0]);
    for (std::size_t n = 1; n < p.size(); ++n) {
        const Rational shift = qnum(n, params.q()) / params.lambda();
        out.push_back(p[n] - p[n - 1] * shift);
    }
    return PolyFamily(std::move(out), Provenance{.kind = FamilyKind::Quasi,
                                                 .alpha = params.alpha(),
                                                 .beta = params.beta(),
                                                 .lambda = params.lambda(),
                                                 .q = params.q().value()});
}

RieszPair riesz_decompose(const QPoly& qn, const PolyFamily& p, std::size_t n) {
    if (n == 0) throw DomainError("the Riesz decomposition is defined for n >= 1");
    if (n >= p.size()) {
        throw DomainError("reference family stops before index " + std::to_string(n));
    }
    if (qn.degree() != static_cast<long>(n)) {
        throw MalformedFamily("Q_" + std::to_string(n) + " has degree " +
                              std::to_string(qn.degree()));
    }
    const QPoly& pn = p[n];
    const QPoly& pm = p[n - 1];
    RieszPair pair;
    pair.riesz_a = qn.leading() / pn.leading();
    pair.riesz_b = (qn.coeff(n - 1) - pair.riesz_a * pn.coeff(n - 1)) / pm.leading();
    QPoly remainder = qn - pn * pair.riesz_a - pm * pair.riesz_b;
    if (!remainder.is_zero()) {
        throw NotInSpan("Q_" + std::to_string(n) + " is not in the span of P_" +
                            std::to_string(n) + " and P_" + std::to_string(n - 1),
                        std::move(remainder));
    }
    return pair;
}

MomentFunctional::MomentFunctional(std::vector<Rational> moments) : moments_(std::move(moments)) {
    if (moments_.empty() || moments_[0] != 1) {
        throw DomainError("a moment functional needs mu_0 = 1");
    }
}

Rational MomentFunctional::apply(const QPoly& f) const {
    if (f.degree() > static_cast<long>(max_degree())) {
        throw DegreeOverflow("polynomial of degree " + std::to_string(f.degree()) +
                             " needs more moments than the " + std::to_string(moments_.size()) +
                             " available");
    }
    Rational sum = 0;
    const auto coeffs = f.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * moments_[i];
    return sum;
}

MomentFunctional moments_from_ttrr(const TTRRCoeffs& coeffs, std::size_t max_moment) {
    if (max_moment > 0 && max_moment - 1 > coeffs.max_index()) {
        throw DegreeOverflow("moment " + std::to_string(max_moment) +
                             " needs recurrence coefficients through index " +
                             std::to_string(max_moment - 1));
    }
    std::vector<Rational> mu;
    mu.reserve(max_moment + 1);
    std::vector<Rational> coords{Rational(1)};  // x^0 = P_0
    mu.push_back(1);
    for (std::size_t k = 1; k <= max_moment; ++k) {
        std::vector<Rational> next(coords.size() + 1);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] == 0) continue;
            next[j + 1] += coords[j];
            next[j] += coeffs.B[j] * coords[j];
            if (j > 0) next[j - 1] += coeffs.C[j] * coords[j];
        }
        coords = std::move(next);
        mu.push_back(coords[0]);
    }
    return MomentFunctional(std::move(mu));
}

std::string to_string(QuasiClause clause) {
    switch (clause) {
        case QuasiClause::VanishesBelow: return "vanishes_below";
        case QuasiClause::NonzeroAtNMinus1: return "nonzero_at_n_minus_1";
        case QuasiClause::NonzeroAtOrigin: return "nonzero_at_origin";
    }
    return "unknown";
}

bool QuasiOrthoReport::pass() const noexcept {
    for (const auto& e : entries) {
        if (!e.pass()) return false;
    }
    return true;
}

std::optional<QuasiOrthoFailure> QuasiOrthoReport::first_failure() const {
    for (const auto& e : entries) {
        if (!e.pass()) return e.failure;
    }
    return std::nullopt;
}

QuasiOrthoReport quasi_orthogonality_test(const PolyFamily& family,
                                          const MomentFunctional& functional,
                                          std::size_t max_index) {
    if (max_index >= family.size()) {
        throw DomainError("family stops before index " + std::to_string(max_index));
    }
    if (max_index > 0 && 2 * max_index - 1 > functional.max_degree()) {
        throw DegreeOverflow("quasi-orthogonality through n = " + std::to_string(max_index) +
                             " needs moments through degree " +
                             std::to_string(2 * max_index - 1));
    }
    QuasiOrthoReport report;
    report.entries.reserve(max_index + 1);

    Rational at_origin = functional.apply(family[0]);
    report.entries.push_back({0, std::nullopt});
    if (at_origin == 0) {
        report.entries.back().failure =
            QuasiOrthoFailure{0, 0, QuasiClause::NonzeroAtOrigin, std::move(at_origin)};
    }
    for (std::size_t n = 1; n <= max_index; ++n) {
        QuasiOrthoEntry entry{n, std::nullopt};
        QPoly xm_qn = family[n];  // x^m Q_n, advanced by one power per step
        for (std::size_t m = 0; m + 1 <= n; ++m) {
            Rational value = functional.apply(xm_qn);
            const bool diagonal = m + 1 == n;
            if (diagonal && value == 0) {
                entry.failure = QuasiOrthoFailure{n, m, QuasiClause::NonzeroAtNMinus1, value};
                break;
            }
            if (!diagonal && value != 0) {
                entry.failure =
                    QuasiOrthoFailure{n, m, QuasiClause::VanishesBelow, std::move(value)};
                break;
            }
            xm_qn = xm_qn * QPoly::x();
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

Rational RecurrenceParams::b_at(std::size_t n, const QParam& q) const {
    return b * q.pow(static_cast<long>(n));
}

Rational RecurrenceParams::c_at(std::size_t n, const QParam& q) const {
    if (n == 0) return 0;
    return c * q.pow(static_cast<long>(n) - 1) * qnum(n, q);
}

Rational RecurrenceParams::d_at(std::size_t n, const QParam& q) const {
    if (n < 2) return 0;
    Rational d = d2;
    for (std::size_t k = 3; k <= n; ++k) d *= q.value() * qnum(k, q) / lambda;
    return d;
}

RecurrenceParams extract_recurrence_params(const PolyFamily& family, const Rational& lambda,
                                           const QParam& q) {
    require_nonzero(lambda, "lambda");
    if (family.size() < 4) {
        throw DomainError("extracting the recurrence constants needs Q_0..Q_3");
    }
    const QPoly x = QPoly::x();
    const Rational& q0 = family[0].leading();
    RecurrenceParams params{0, 0, 0, lambda};

    // n = 0: Q_1 = (x + b) Q_0
    {
        const QPoly& q1 = family[1];
        params.b = q1.coeff(0) / q0;
        QPoly residual = q1 - (x + QPoly::constant(params.b)) * family[0];
        if (!residual.is_zero()) {
            throw RecurrenceMismatch("Q_1 is not (x + b) Q_0", std::move(residual));
        }
    }
    // n = 1: (x + bq) Q_1 - Q_2 = c Q_0
    {
        QPoly rest = (x + QPoly::constant(params.b * q.value())) * family[1] - family[2];
        if (rest.degree() > 0) {
            throw RecurrenceMismatch("the n = 1 instance leaves a nonconstant remainder",
                                     std::move(rest));
        }
        params.c = rest.coeff(0) / q0;
    }
    // n = 2: Q_3 - (x + bq^2) Q_2 + c q [2]_q Q_1 = d2 T_0 Q_0, with T_0 = 1
    {
        QPoly rest = family[3] - (x + QPoly::constant(params.b_at(2, q))) * family[2] +
                     family[1] * params.c_at(2, q);
        if (rest.degree() > 0) {
            throw RecurrenceMismatch("the n = 2 instance leaves a nonconstant remainder",
                                     std::move(rest));
        }
        params.d2 = rest.coeff(0) / q0;
    }
    return params;
}

RecurrenceReport verify_extended_recurrence(const PolyFamily& family,
                                            const RecurrenceParams& params, const QParam& q,
                                            std::size_t max_index) {
    if (max_index + 1 >= family.size()) {
        throw DomainError("checking the recurrence through n = " + std::to_string(max_index) +
                          " needs Q_" + std::to_string(max_index + 1));
    }
    const auto t = connection_coeffs(params.lambda, q, max_index);
    const QPoly x = QPoly::x();
    RecurrenceReport report;
    for (std::size_t n = 0; n <= max_index; ++n) {
        QPoly residual = family[n + 1] - (x + QPoly::constant(params.b_at(n, q))) * family[n];
        if (n >= 1) residual += family[n - 1] * params.c_at(n, q);
        if (n >= 2) residual -= weighted_tail(family, t, n - 2) * params.d_at(n, q);
        if (!residual.is_zero()) {
            report.failure = RecurrenceFailure{n, std::move(residual)};
            return report;
        }
        report.checked_up_to = n;
    }
    return report;
}

std::vector<RecurrenceStep> extract_recurrence_steps(const PolyFamily& family,
                                                     const Rational& lambda, const QParam& q) {
    const auto t = connection_coeffs(lambda, q, family.max_index());
    const QPoly x = QPoly::x();
    std::vector<RecurrenceStep> steps;
    for (std::size_t n = 0; n + 1 < family.size(); ++n) {
        const QPoly rest = family[n + 1] - x * family[n];
        if (rest.degree() > static_cast<long>(n)) {
            throw RecurrenceMismatch("Q_" + std::to_string(n + 1) + " - x Q_" +
                                         std::to_string(n) + " has degree above " +
                                         std::to_string(n),
                                     rest);
        }
        const auto coords = basis_coordinates(rest, family);
        RecurrenceStep step{n, coords[n], 0, 0};
        if (n >= 1) step.c_n = -coords[n - 1];
        if (n >= 2) {
            step.d_n = coords[0] / t[0];
            for (std::size_t k = 1; k + 2 <= n; ++k) {
                if (coords[k] != step.d_n * t[k]) {
                    throw RecurrenceMismatch("tail coordinate " + std::to_string(k) +
                                                 " at n = " + std::to_string(n) +
                                                 " is not proportional to T_k",
                                             rest);
                }
            }
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

std::optional<std::string> check_coefficient_laws(std::span<const RecurrenceStep> steps,
                                                  const Rational& lambda, const QParam& q) {
    if (steps.empty()) return std::nullopt;
    const Rational b0 = steps[0].b_n;
    const Rational c1 = steps.size() > 1 ? steps[1].c_n : Rational(0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        const long n = static_cast<long>(s.n);
        if (s.b_n != b0 * q.pow(n)) {
            return "b_" + std::to_string(n) + " = " + to_string(s.b_n) + " differs from q^n b";
        }
        if (n >= 1 && s.c_n != c1 * q.pow(n - 1) * qnum(s.n, q)) {
            return "c_" + std::to_string(n) + " = " + to_string(s.c_n) +
                   " differs from q^(n-1) [n]_q c";
        }
        if (n < 2 && s.d_n != 0) {
            return "d_" + std::to_string(n) + " must vanish";
        }
        if (n >= 3 && s.d_n != steps[i - 1].d_n * q.value() * qnum(s.n, q) / lambda) {
            return "d_" + std::to_string(n) + " = " + to_string(s.d_n) +
                   " breaks d_n = (q [n]_q / lambda) d_(n-1)";
        }
    }
    return std::nullopt;
}

PolyFamily reconstruct_P_from_Q(const PolyFamily& family, const Rational& lambda,
                                const QParam& q) {
    const auto t = connection_coeffs(lambda, q, family.max_index());
    std::vector<QPoly> out;
    out.reserve(family.size());
    QPoly partial;
    for (std::size_t n = 0; n < family.size(); ++n) {
        partial += family[n] * t[n];
        out.push_back(partial * (1 / t[n]));  // [n]_q!/lambda^n = 1/T_n
    }
    Provenance prov = family.provenance();
    prov.kind = FamilyKind::Reconstructed;
    prov.lambda = lambda;
    prov.q = q.value();
    return PolyFamily(std::move(out), std::move(prov));
}

}  // namespace qappell
