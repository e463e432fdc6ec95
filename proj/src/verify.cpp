#include "qappell/verify.hpp"

#include "qappell/appell.hpp"
#include "qappell/error.hpp"

#include <random>
#include <sstream>
#include <utility>

namespace qappell {

std::string theorem_tag(Check check) {
    switch (check) {
        case Check::Appell: return "appell";
        case Check::Quasi: return "quasi";
        case Check::Rec31: return "3.1";
        case Check::RieszChihara: return "3.2";
    }
    return "unknown";
}

unsigned check_mask_from_string(const std::string& name) {
    if (name == "appell") return static_cast<unsigned>(Check::Appell);
    if (name == "quasi") return static_cast<unsigned>(Check::Quasi);
    if (name == "rec31") return static_cast<unsigned>(Check::Rec31);
    if (name == "rieszchihara") return static_cast<unsigned>(Check::RieszChihara);
    if (name == "all") return kAllChecks;
    throw ParseError("unknown theorem '" + name + "'");
}

Json CheckReport::to_json() const {
    Json j;
    j["theorem"] = theorem;
    j["params"] = params;
    j["pass"] = pass;
    j["first_failure"] = first_failure;
    return j;
}

std::pair<Rational, Rational> related_scaling(const Provenance& provenance) {
    switch (provenance.kind) {
        case FamilyKind::AscRecurrence:
        case FamilyKind::AscHypergeom:
            if (provenance.a) return {*provenance.a, Rational(1)};
            break;
        default:
            if (provenance.alpha && provenance.beta) return {*provenance.alpha, *provenance.beta};
            break;
    }
    throw DomainError("the family record does not name its related orthogonal family");
}

QParam provenance_q(const Provenance& provenance) {
    if (!provenance.q) throw DomainError("the family record has no q");
    return QParam(*provenance.q);
}

PolyFamily related_orthogonal_family(const Provenance& provenance, std::size_t max_degree) {
    const auto [alpha, beta] = related_scaling(provenance);
    return scaled_family(alpha, beta, provenance_q(provenance), max_degree);
}

MomentFunctional related_moments(const Provenance& provenance, std::size_t max_moment) {
    const auto [alpha, beta] = related_scaling(provenance);
    const auto coeffs = ttrr_coeffs(alpha, beta, provenance_q(provenance),
                                    max_moment == 0 ? 0 : max_moment - 1);
    return moments_from_ttrr(coeffs, max_moment);
}

namespace {

/// Nonzero rationals with numerator in [-20, 20] and denominator in [1, 20].
/// Drawn straight from the engine so the sequence is the same everywhere.
Rational random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 20) + 1;
        if (num != 0) {
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
    }
}

constexpr int kSpotChecks = 5;

CheckReport appell_report(const PolyFamily& family, const QParam& q, Json params,
                          std::uint64_t seed) {
    CheckReport rep{theorem_tag(Check::Appell), std::move(params), true, nullptr};
    const AppellReport ar = check_appell(family, q);
    if (ar.defect) {
        rep.pass = false;
        rep.first_failure = Json{{"n", ar.defect->n}, {"residual", poly_to_json(ar.defect->residual)}};
        return rep;
    }
    // The basis map must agree with the defining quotient at sampled points.
    std::mt19937_64 rng(seed);
    for (std::size_t n = 1; n < family.size(); ++n) {
        for (int i = 0; i < kSpotChecks; ++i) {
            const Rational x0 = random_nonzero(rng);
            const Rational quotient =
                (family[n].eval(x0) - family[n].eval(q.value() * x0)) / ((1 - q.value()) * x0);
            const Rational expected = qnum(n, q) * family[n - 1].eval(x0);
            if (quotient != expected) {
                rep.pass = false;
                rep.first_failure = Json{{"n", n},
                                         {"x0", to_string(x0)},
                                         {"quotient", to_string(quotient)},
                                         {"expected", to_string(expected)}};
                return rep;
            }
        }
    }
    return rep;
}

CheckReport quasi_report(const PolyFamily& family, Json params) {
    CheckReport rep{theorem_tag(Check::Quasi), std::move(params), true, nullptr};
    const std::size_t n_max = family.max_index();
    const auto functional =
        related_moments(family.provenance(), n_max == 0 ? 0 : 2 * n_max - 1);
    const auto result = quasi_orthogonality_test(family, functional, n_max);
    if (const auto f = result.first_failure()) {
        rep.pass = false;
        rep.first_failure = Json{{"n", f->n},
                                 {"m", f->m},
                                 {"clause", to_string(f->clause)},
                                 {"value", to_string(f->value)}};
    }
    return rep;
}

CheckReport rec31_report(const PolyFamily& family, const QParam& q, Json params) {
    CheckReport rep{theorem_tag(Check::Rec31), std::move(params), true, nullptr};
    const Rational lambda = family.provenance().lambda.value_or(Rational(1));
    rep.params["lambda"] = to_string(lambda);
    RecurrenceParams rp;
    try {
        rp = extract_recurrence_params(family, lambda, q);
    } catch (const RecurrenceMismatch& e) {
        rep.pass = false;
        rep.first_failure = Json{{"stage", "extract"},
                                 {"message", e.what()},
                                 {"residual", poly_to_json(e.residual())}};
        return rep;
    }
    rep.params["b"] = to_string(rp.b);
    rep.params["c"] = to_string(rp.c);
    rep.params["d2"] = to_string(rp.d2);

    const auto result = verify_extended_recurrence(family, rp, q, family.max_index() - 1);
    if (result.failure) {
        rep.pass = false;
        rep.first_failure = Json{{"stage", "recurrence"},
                                 {"n", result.failure->n},
                                 {"residual", poly_to_json(result.failure->residual)}};
        return rep;
    }
    try {
        const auto steps = extract_recurrence_steps(family, lambda, q);
        if (const auto broken = check_coefficient_laws(steps, lambda, q)) {
            rep.pass = false;
            rep.first_failure = Json{{"stage", "laws"}, {"message", *broken}};
        }
    } catch (const RecurrenceMismatch& e) {
        rep.pass = false;
        rep.first_failure = Json{{"stage", "laws"},
                                 {"message", e.what()},
                                 {"residual", poly_to_json(e.residual())}};
    }
    return rep;
}

CheckReport riesz_report(const PolyFamily& family, const QParam& q, Json params) {
    CheckReport rep{theorem_tag(Check::RieszChihara), std::move(params), true, nullptr};
    const PolyFamily p = related_orthogonal_family(family.provenance(), family.max_index());
    const auto fail = [&rep](Json detail) {
        rep.pass = false;
        rep.first_failure = std::move(detail);
    };
    if (family[0].leading() == 0) {
        fail(Json{{"n", 0}, {"message", "Q_0 vanishes"}});
        return rep;
    }
    const auto& lambda = family.provenance().lambda;
    for (std::size_t n = 1; n < family.size(); ++n) {
        RieszPair pair;
        try {
            pair = riesz_decompose(family[n], p, n);
        } catch (const NotInSpan& e) {
            fail(Json{{"n", n}, {"message", e.what()}, {"residual", poly_to_json(e.residual())}});
            return rep;
        }
        if (pair.riesz_a == 0 || pair.riesz_b == 0) {
            fail(Json{{"n", n},
                      {"message", "Riesz coefficients must both be nonzero"},
                      {"riesz_a", to_string(pair.riesz_a)},
                      {"riesz_b", to_string(pair.riesz_b)}});
            return rep;
        }
        if (lambda && (pair.riesz_a != 1 || pair.riesz_b != -qnum(n, q) / *lambda)) {
            fail(Json{{"n", n},
                      {"message", "Riesz coefficients differ from (1, -[n]_q/lambda)"},
                      {"riesz_a", to_string(pair.riesz_a)},
                      {"riesz_b", to_string(pair.riesz_b)}});
            return rep;
        }
    }
    if (lambda) {
        const PolyFamily rebuilt = reconstruct_P_from_Q(family, *lambda, q);
        for (std::size_t n = 0; n < rebuilt.size(); ++n) {
            if (rebuilt[n] != p[n]) {
                fail(Json{{"n", n},
                          {"message", "connection sum does not reproduce P_n"},
                          {"residual", poly_to_json(rebuilt[n] - p[n])}});
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

std::vector<CheckReport> run_checks(const PolyFamily& family, unsigned mask, std::uint64_t seed) {
    const QParam q = provenance_q(family.provenance());
    Json params = provenance_to_json(family.provenance());
    params["max_degree"] = family.max_index();
    params["seed"] = seed;

    if ((mask & static_cast<unsigned>(Check::Rec31)) != 0 && family.size() < 4) {
        throw DomainError("the 3.1 check needs max degree >= 3");
    }
    std::vector<CheckReport> out;
    if (mask & static_cast<unsigned>(Check::Appell)) {
        out.push_back(appell_report(family, q, params, seed));
    }
    if (mask & static_cast<unsigned>(Check::Quasi)) out.push_back(quasi_report(family, params));
    if (mask & static_cast<unsigned>(Check::Rec31)) out.push_back(rec31_report(family, q, params));
    if (mask & static_cast<unsigned>(Check::RieszChihara)) {
        out.push_back(riesz_report(family, q, params));
    }
    return out;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string render_reports(const std::vector<CheckReport>& reports, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << "theorem,pass,first_failure\n";
            for (const auto& r : reports) {
                os << r.theorem << "," << (r.pass ? "true" : "false") << ","
                   << (r.first_failure.is_null() ? "" : csv_quote(r.first_failure.dump())) << "\n";
            }
            break;
        case Format::Latex:
            os << "\\begin{tabular}{ll}\nCheck & Result \\\\\n\\hline\n";
            for (const auto& r : reports) {
                os << r.theorem << " & " << (r.pass ? "pass" : "fail") << " \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
    }
    return os.str();
}

}  // namespace qappell
