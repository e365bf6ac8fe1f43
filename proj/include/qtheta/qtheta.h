#ifndef QTHETA_H
#define QTHETA_H

/*
 * C interface to the qtheta engine: expression expansion, identity-suite
 * verification, and rank tables. All handles are opaque; every function that
 * can fail returns a qtheta_status and leaves a message readable through
 * qtheta_last_error() on the calling thread. Strings returned through char**
 * out-parameters are heap copies owned by the caller; release them with
 * qtheta_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtheta_status {
    QTHETA_OK = 0,
    QTHETA_PARSE_ERROR = 1,   /* expression text did not parse */
    QTHETA_NONGENERIC = 2,    /* a zero denominator / vanishing theta was hit */
    QTHETA_BAD_ARGUMENT = 3,  /* out-of-contract argument (order, suite, range) */
    QTHETA_INTERNAL_ERROR = 4
} qtheta_status;

typedef struct qtheta_series qtheta_series;
typedef struct qtheta_reports qtheta_reports;

/* Most recent error message on this thread; "" after a success. */
const char* qtheta_last_error(void);

/* ---- series expansion ---- */

/* Parses `expr` (see the expression grammar in the README) and expands it to
 * exact coefficients through q^order. */
qtheta_status qtheta_expand(const char* expr, long order, qtheta_series** out);
long qtheta_series_valuation(const qtheta_series* s);
long qtheta_series_order(const qtheta_series* s);
qtheta_status qtheta_series_text(const qtheta_series* s, char** out);
qtheta_status qtheta_series_json(const qtheta_series* s, char** out);
void qtheta_series_free(qtheta_series* s);

/* ---- verification suites ---- */

/* suite: all | prelim | props | entries | entry1 | entry2 | entry3 | entry4
 *        | relations.
 * order: 0 keeps every check's default order; otherwise overrides all.
 * jobs:  worker threads (values < 1 mean 1).
 * entry1_samples / entry2_samples: comma-separated monomial expressions
 * (e.g. "zeta,zeta^2,-q*alpha") replacing the default sample points of the
 * first/second entry families; NULL or "" keeps the defaults. */
qtheta_status qtheta_verify(const char* suite, long order, int jobs,
                            const char* entry1_samples, const char* entry2_samples,
                            qtheta_reports** out);

long qtheta_reports_count(const qtheta_reports* r);
const char* qtheta_report_id(const qtheta_reports* r, long k);
/* "pass", "fail", or "error" */
const char* qtheta_report_status(const qtheta_reports* r, long k);
long qtheta_report_order(const qtheta_reports* r, long k);
double qtheta_report_elapsed_ms(const qtheta_reports* r, long k);
int qtheta_report_has_mismatch(const qtheta_reports* r, long k);
/* Exponent of the first disagreeing coefficient; 0 when there is none. */
long qtheta_report_mismatch_exponent(const qtheta_reports* r, long k);
/* Error message for "error" rows, "" otherwise. */
const char* qtheta_report_detail(const qtheta_reports* r, long k);
int qtheta_reports_all_passed(const qtheta_reports* r);
qtheta_status qtheta_reports_json(const qtheta_reports* r, char** out);
void qtheta_reports_free(qtheta_reports* r);

/* ---- rank tables ---- */

/* TSV rows "n<TAB>m<TAB>N(m,n)" for 0 <= n <= n_max (n_max <= 40). */
qtheta_status qtheta_rank_table(long n_max, char** out);

void qtheta_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QTHETA_H */
