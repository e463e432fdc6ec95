#include "qappell/qappell.h"

#include "qappell/alsalamcarlitz.hpp"
#include "qappell/error.hpp"
#include "qappell/quasi.hpp"
#include "qappell/serialize.hpp"
#include "qappell/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

struct qa_family {
    qappell::PolyFamily family;
};

struct qa_moments {
    qappell::MomentFunctional functional;
    qappell::Provenance provenance;
};

namespace {

thread_local std::string last_error;

qa_status fail(qa_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class Body>
qa_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const qappell::ParseError& e) {
        return fail(QA_ERR_PARSE, e.what());
    } catch (const qappell::MalformedFamily& e) {
        return fail(QA_ERR_MALFORMED_FAMILY, e.what());
    } catch (const qappell::DegreeOverflow& e) {
        return fail(QA_ERR_DEGREE_OVERFLOW, e.what());
    } catch (const qappell::NotInSpan& e) {
        return fail(QA_ERR_NOT_IN_SPAN, e.what());
    } catch (const qappell::RecurrenceMismatch& e) {
        return fail(QA_ERR_RECURRENCE_MISMATCH, e.what());
    } catch (const qappell::DomainError& e) {
        return fail(QA_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QA_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qappell::Rational arg(const char* text, const char* name) {
    if (text == nullptr) throw qappell::DomainError(std::string("missing parameter ") + name);
    try {
        return qappell::parse_rational(text);
    } catch (const qappell::ParseError& e) {
        throw qappell::ParseError(std::string(name) + ": " + e.what());
    }
}

std::optional<qa_status> check_degree(int max_degree) {
    if (max_degree < 0 || max_degree > QA_MAX_DEGREE) {
        return fail(QA_ERR_INVALID_ARGUMENT,
                    "max degree must lie in [0, " + std::to_string(QA_MAX_DEGREE) + "]");
    }
    return std::nullopt;
}

std::optional<qappell::Format> to_format(qa_format format) {
    switch (format) {
        case QA_FORMAT_JSON: return qappell::Format::Json;
        case QA_FORMAT_CSV: return qappell::Format::Csv;
        case QA_FORMAT_LATEX: return qappell::Format::Latex;
    }
    return std::nullopt;
}

qa_status null_argument() { return fail(QA_ERR_INVALID_ARGUMENT, "null pointer argument"); }

}  // namespace

extern "C" {

const char* qa_version(void) { return "1.0.0"; }

const char* qa_status_string(qa_status status) {
    switch (status) {
        case QA_OK: return "ok";
        case QA_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QA_ERR_PARSE: return "parse error";
        case QA_ERR_DOMAIN: return "domain error";
        case QA_ERR_MALFORMED_FAMILY: return "malformed family";
        case QA_ERR_DEGREE_OVERFLOW: return "degree overflow";
        case QA_ERR_NOT_IN_SPAN: return "not in span";
        case QA_ERR_RECURRENCE_MISMATCH: return "recurrence mismatch";
        case QA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qa_last_error(void) { return last_error.c_str(); }

void qa_string_free(char* s) { std::free(s); }

qa_status qa_family_new_asc(const char* a, const char* q, int max_degree, qa_family** out) {
    if (out == nullptr) return null_argument();
    if (auto bad = check_degree(max_degree)) return *bad;
    return guarded([&] {
        qappell::ASCParams params(arg(a, "a"), qappell::QParam(arg(q, "q")));
        *out = new qa_family{
            qappell::asc_recurrence(params, static_cast<std::size_t>(max_degree))};
        return QA_OK;
    });
}

qa_status qa_family_new_scaled(const char* alpha, const char* beta, const char* q,
                               int max_degree, qa_family** out) {
    if (out == nullptr) return null_argument();
    if (auto bad = check_degree(max_degree)) return *bad;
    return guarded([&] {
        *out = new qa_family{qappell::scaled_family(arg(alpha, "alpha"), arg(beta, "beta"),
                                                    qappell::QParam(arg(q, "q")),
                                                    static_cast<std::size_t>(max_degree))};
        return QA_OK;
    });
}

qa_status qa_family_new_quasi(const char* alpha, const char* beta, const char* lambda,
                              const char* q, int max_degree, qa_family** out) {
    if (out == nullptr) return null_argument();
    if (auto bad = check_degree(max_degree)) return *bad;
    return guarded([&] {
        qappell::QuasiParams params(arg(alpha, "alpha"), arg(beta, "beta"),
                                    arg(lambda, "lambda"), qappell::QParam(arg(q, "q")));
        *out = new qa_family{qappell::build_Q(params, static_cast<std::size_t>(max_degree))};
        return QA_OK;
    });
}

qa_status qa_family_from_json(const char* json, qa_family** out) {
    if (json == nullptr || out == nullptr) return null_argument();
    return guarded([&] {
        auto family = qappell::family_from_json_text(json);
        if (family.max_index() > QA_MAX_DEGREE) {
            return fail(QA_ERR_INVALID_ARGUMENT, "family exceeds the maximum degree");
        }
        *out = new qa_family{std::move(family)};
        return QA_OK;
    });
}

void qa_family_free(qa_family* family) { delete family; }

qa_status qa_family_size(const qa_family* family, size_t* out) {
    if (family == nullptr || out == nullptr) return null_argument();
    *out = family->family.size();
    return QA_OK;
}

qa_status qa_family_coefficient(const qa_family* family, size_t n, size_t i, char** out) {
    if (family == nullptr || out == nullptr) return null_argument();
    if (n >= family->family.size()) return fail(QA_ERR_INVALID_ARGUMENT, "member index out of range");
    return guarded([&] {
        *out = dup_string(qappell::to_string(family->family[n].coeff(i)));
        return QA_OK;
    });
}

qa_status qa_family_render(const qa_family* family, qa_format format, char** out) {
    if (family == nullptr || out == nullptr) return null_argument();
    const auto fmt = to_format(format);
    if (!fmt) return fail(QA_ERR_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        *out = dup_string(qappell::render_family(family->family, *fmt));
        return QA_OK;
    });
}

qa_status qa_moments_new(const qa_family* family, size_t count, qa_moments** out) {
    if (family == nullptr || out == nullptr) return null_argument();
    if (count == 0 || count > 2 * QA_MAX_DEGREE) {
        return fail(QA_ERR_INVALID_ARGUMENT, "moment count must lie in [1, 128]");
    }
    return guarded([&] {
        const auto& prov = family->family.provenance();
        *out = new qa_moments{qappell::related_moments(prov, count - 1), prov};
        return QA_OK;
    });
}

void qa_moments_free(qa_moments* moments) { delete moments; }

qa_status qa_moments_count(const qa_moments* moments, size_t* out) {
    if (moments == nullptr || out == nullptr) return null_argument();
    *out = moments->functional.moments().size();
    return QA_OK;
}

qa_status qa_moments_apply(const qa_moments* moments, const char* const* coeffs, size_t len,
                           char** out) {
    if (moments == nullptr || out == nullptr || (coeffs == nullptr && len > 0)) {
        return null_argument();
    }
    return guarded([&] {
        std::vector<qappell::Rational> c;
        c.reserve(len);
        for (size_t i = 0; i < len; ++i) c.push_back(arg(coeffs[i], "coefficient"));
        *out = dup_string(
            qappell::to_string(moments->functional.apply(qappell::QPoly(std::move(c)))));
        return QA_OK;
    });
}

qa_status qa_moments_render(const qa_moments* moments, qa_format format, char** out) {
    if (moments == nullptr || out == nullptr) return null_argument();
    const auto fmt = to_format(format);
    if (!fmt) return fail(QA_ERR_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        *out = dup_string(qappell::render_moments(moments->functional, moments->provenance, *fmt));
        return QA_OK;
    });
}

qa_status qa_verify(const qa_family* family, unsigned checks, uint64_t seed, qa_format format,
                    char** out, int* all_pass) {
    if (family == nullptr || out == nullptr || all_pass == nullptr) return null_argument();
    if (checks == 0 || (checks & ~static_cast<unsigned>(QA_CHECK_ALL)) != 0) {
        return fail(QA_ERR_INVALID_ARGUMENT, "unknown check mask");
    }
    const auto fmt = to_format(format);
    if (!fmt) return fail(QA_ERR_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        const auto reports = qappell::run_checks(family->family, checks, seed);
        bool pass = true;
        for (const auto& r : reports) pass = pass && r.pass;
        *out = dup_string(qappell::render_reports(reports, *fmt));
        *all_pass = pass ? 1 : 0;
        return QA_OK;
    });
}

}  // extern "C"
