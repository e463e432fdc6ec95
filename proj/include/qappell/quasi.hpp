#pragma once

#include "qappell/alsalamcarlitz.hpp"
#include "qappell/error.hpp"
#include "qappell/exactnum.hpp"
#include "qappell/family.hpp"
#include "qappell/qpoly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qappell {

/// Parameters of a quasi-orthogonal q-Appell family: the scaling pair
/// (alpha, beta) of the related orthogonal family and the connection
/// parameter lambda. All three must be nonzero.
class QuasiParams {
public:
    QuasiParams(Rational alpha, Rational beta, Rational lambda, QParam q);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& lambda() const noexcept { return lambda_; }
    const QParam& q() const noexcept { return q_; }

private:
    Rational alpha_;
    Rational beta_;
    Rational lambda_;
    QParam q_;
};

/// A polynomial that should have vanished, carried with the error.
class ResidualError : public Error {
public:
    ResidualError(const std::string& what, QPoly residual)
        : Error(what), residual_(std::move(residual)) {}

    const QPoly& residual() const noexcept { return residual_; }

private:
    QPoly residual_;
};

/// Q_n is not a combination of P_n and P_{n-1}.
class NotInSpan : public ResidualError {
public:
    using ResidualError::ResidualError;
};

/// The family does not fit the extended recurrence.
class RecurrenceMismatch : public ResidualError {
public:
    using ResidualError::ResidualError;
};

/// T_0..T_N with T_n = lambda^n / [n]_q!.
std::vector<Rational> connection_coeffs(const Rational& lambda, const QParam& q,
                                        std::size_t max_index);

/// Q_0 = 1 and Q_n = P_n - ([n]_q / lambda) P_{n-1}, where P is the scaled
/// Al-Salam--Carlitz family of (alpha, beta, q). Every Q_n is monic.
PolyFamily build_Q(const QuasiParams& params, std::size_t max_degree);

/// Coefficients of Q_n = riesz_a P_n + riesz_b P_{n-1}.
struct RieszPair {
    Rational riesz_a;
    Rational riesz_b;
};

/// Solves for the pair from the top two coefficients of Q_n, then requires
/// the remainder to vanish. Throws NotInSpan otherwise.
RieszPair riesz_decompose(const QPoly& qn, const PolyFamily& p, std::size_t n);

/// Linear functional L with L[x^k] = moments[k], normalized so L[1] = 1.
class MomentFunctional {
public:
    explicit MomentFunctional(std::vector<Rational> moments);

    std::span<const Rational> moments() const noexcept { return moments_; }
    std::size_t max_degree() const noexcept { return moments_.size() - 1; }

    /// Throws DegreeOverflow if deg f exceeds max_degree().
    Rational apply(const QPoly& f) const;

private:
    std::vector<Rational> moments_;
};

/// mu_0..mu_M of the functional that makes the recurrence family orthogonal.
/// x^k is expanded in the P-basis with x P_n = P_{n+1} + B_n P_n + C_n P_{n-1};
/// mu_k is the P_0 coordinate. Needs coefficients through index M - 1.
MomentFunctional moments_from_ttrr(const TTRRCoeffs& coeffs, std::size_t max_moment);

inline Rational functional_apply(const MomentFunctional& functional, const QPoly& f) {
    return functional.apply(f);
}

enum class QuasiClause {
    VanishesBelow,    ///< L[x^m Q_n] = 0 for m <= n - 2
    NonzeroAtNMinus1, ///< L[x^(n-1) Q_n] != 0 for n >= 1
    NonzeroAtOrigin,  ///< L[Q_0] != 0
};

std::string to_string(QuasiClause clause);

struct QuasiOrthoFailure {
    std::size_t n;
    std::size_t m;
    QuasiClause clause;
    Rational value;  ///< L[x^m Q_n]
};

struct QuasiOrthoEntry {
    std::size_t n;
    std::optional<QuasiOrthoFailure> failure;

    bool pass() const noexcept { return !failure.has_value(); }
};

struct QuasiOrthoReport {
    std::vector<QuasiOrthoEntry> entries;  ///< one per n, ascending

    bool pass() const noexcept;
    std::optional<QuasiOrthoFailure> first_failure() const;
};

/// Checks the quasi-orthogonality conditions for Q_0..Q_N against L.
/// Needs moments through degree 2N - 1.
QuasiOrthoReport quasi_orthogonality_test(const PolyFamily& family,
                                          const MomentFunctional& functional,
                                          std::size_t max_index);

/// Constants of the extended recurrence
///   Q_{n+1} = (x + b q^n) Q_n - c q^(n-1) [n]_q Q_{n-1} + d_n sum_{k<=n-2} T_k Q_k
/// with T_k = lambda^k / [k]_q!, d_0 = d_1 = 0, d_2 = d2 and
/// d_n = (q [n]_q / lambda) d_{n-1} beyond.
struct RecurrenceParams {
    Rational b;
    Rational c;
    Rational d2;
    Rational lambda;

    Rational b_at(std::size_t n, const QParam& q) const;
    Rational c_at(std::size_t n, const QParam& q) const;
    Rational d_at(std::size_t n, const QParam& q) const;
};

/// Reads b from the n = 0 instance, c from n = 1 and d2 from n = 2.
/// Needs Q_0..Q_3. Throws RecurrenceMismatch when an instance is unsolvable.
RecurrenceParams extract_recurrence_params(const PolyFamily& family, const Rational& lambda,
                                           const QParam& q);

struct RecurrenceFailure {
    std::size_t n;
    QPoly residual;
};

struct RecurrenceReport {
    std::size_t checked_up_to = 0;
    std::optional<RecurrenceFailure> failure;

    bool pass() const noexcept { return !failure.has_value(); }
};

/// Residual of the extended recurrence at every n = 0..N; needs Q_0..Q_{N+1}.
RecurrenceReport verify_extended_recurrence(const PolyFamily& family,
                                            const RecurrenceParams& params, const QParam& q,
                                            std::size_t max_index);

/// Per-index recurrence constants read off independently at each n, so the
/// laws tying them together can be checked rather than assumed.
struct RecurrenceStep {
    std::size_t n;
    Rational b_n;
    Rational c_n;  ///< zero at n = 0
    Rational d_n;  ///< zero at n = 0, 1
};

/// Expands Q_{n+1} - x Q_n in the Q-basis for n = 0..size-2. The tail
/// coordinates must be proportional to T_k, otherwise RecurrenceMismatch.
std::vector<RecurrenceStep> extract_recurrence_steps(const PolyFamily& family,
                                                     const Rational& lambda, const QParam& q);

/// First violated law among b_n = q^n b_0, c_n = q^(n-1) [n]_q c_1 and
/// d_n = (q [n]_q / lambda) d_{n-1} (n >= 3), or nullopt.
std::optional<std::string> check_coefficient_laws(std::span<const RecurrenceStep> steps,
                                                  const Rational& lambda, const QParam& q);

/// P_n = ([n]_q! / lambda^n) sum_{k<=n} (lambda^k / [k]_q!) Q_k.
PolyFamily reconstruct_P_from_Q(const PolyFamily& family, const Rational& lambda,
                                const QParam& q);

}  // namespace qappell
