/*
 * C interface to the qappell library.
 *
 * Families and moment functionals are opaque handles. Every fallible call
 * returns a qa_status; on failure qa_last_error() holds a one-line message
 * for the calling thread. Strings handed out through char** parameters are
 * owned by the caller and released with qa_string_free().
 *
 * Rational arguments are text: "p/q" or "p" with an optional sign.
 */
#ifndef QAPPELL_QAPPELL_H
#define QAPPELL_QAPPELL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QA_API __declspec(dllexport)
#else
#define QA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qa_status {
    QA_OK = 0,
    QA_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, size out of range */
    QA_ERR_PARSE = 2,            /* unparsable rational or JSON */
    QA_ERR_DOMAIN = 3,           /* parameter outside its admissible set */
    QA_ERR_MALFORMED_FAMILY = 4, /* member n without degree n */
    QA_ERR_DEGREE_OVERFLOW = 5,  /* not enough moments */
    QA_ERR_NOT_IN_SPAN = 6,
    QA_ERR_RECURRENCE_MISMATCH = 7,
    QA_ERR_INTERNAL = 8
} qa_status;

typedef enum qa_format { QA_FORMAT_JSON = 0, QA_FORMAT_CSV = 1, QA_FORMAT_LATEX = 2 } qa_format;

/* Bit mask of verification checks. */
enum {
    QA_CHECK_APPELL = 1,
    QA_CHECK_QUASI = 2,
    QA_CHECK_REC31 = 4,
    QA_CHECK_RIESZ_CHIHARA = 8,
    QA_CHECK_ALL = 15
};

/* Largest max_degree accepted by the constructors. */
#define QA_MAX_DEGREE 64

typedef struct qa_family qa_family;
typedef struct qa_moments qa_moments;

QA_API const char* qa_version(void);
QA_API const char* qa_status_string(qa_status status);
QA_API const char* qa_last_error(void);
QA_API void qa_string_free(char* s);

/* U_0..U_N of the Al-Salam--Carlitz I family with parameter a. */
QA_API qa_status qa_family_new_asc(const char* a, const char* q, int max_degree,
                                   qa_family** out);
/* beta^n U_n^{(alpha/beta)}(x/beta; q). */
QA_API qa_status qa_family_new_scaled(const char* alpha, const char* beta, const char* q,
                                      int max_degree, qa_family** out);
/* Quasi-orthogonal q-Appell family P_n - ([n]_q/lambda) P_{n-1}. */
QA_API qa_status qa_family_new_quasi(const char* alpha, const char* beta, const char* lambda,
                                     const char* q, int max_degree, qa_family** out);
/* Reads the JSON document produced by qa_family_render(..., QA_FORMAT_JSON, ...). */
QA_API qa_status qa_family_from_json(const char* json, qa_family** out);
QA_API void qa_family_free(qa_family* family);

QA_API qa_status qa_family_size(const qa_family* family, size_t* out);
/* Coefficient of x^i in member n, as text. */
QA_API qa_status qa_family_coefficient(const qa_family* family, size_t n, size_t i, char** out);
QA_API qa_status qa_family_render(const qa_family* family, qa_format format, char** out);

/* mu_0..mu_{count-1} of the orthogonal family related to `family`. */
QA_API qa_status qa_moments_new(const qa_family* family, size_t count, qa_moments** out);
QA_API void qa_moments_free(qa_moments* moments);
QA_API qa_status qa_moments_count(const qa_moments* moments, size_t* out);
/* L[f] for f given as coefficient strings, lowest degree first. */
QA_API qa_status qa_moments_apply(const qa_moments* moments, const char* const* coeffs,
                                  size_t len, char** out);
QA_API qa_status qa_moments_render(const qa_moments* moments, qa_format format, char** out);

/* Runs the checks in `checks`; *all_pass is 1 when every report passes. */
QA_API qa_status qa_verify(const qa_family* family, unsigned checks, uint64_t seed,
                           qa_format format, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QAPPELL_QAPPELL_H */
