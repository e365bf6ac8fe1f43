#include "qtheta/qtheta.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "qtheta/expr.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/series.hpp"
#include "qtheta/verify.hpp"

struct qtheta_series {
    qtheta::QSeries series;
};

struct qtheta_reports {
    std::vector<qtheta::CheckReport> rows;
};

namespace {

thread_local std::string g_last_error;

qtheta_status map_error(const qtheta::Error& err) {
    using EC = qtheta::ErrorCode;
    switch (err.code()) {
        case EC::ParseError: return QTHETA_PARSE_ERROR;
        case EC::ZeroInverse:
        case EC::NonInvertible:
        case EC::PoleAtFactor: return QTHETA_NONGENERIC;
        case EC::UnknownConstant:
        case EC::NegativeExponent:
        case EC::OutOfRange:
        case EC::BadArgument: return QTHETA_BAD_ARGUMENT;
    }
    return QTHETA_INTERNAL_ERROR;
}

template <typename Fn>
qtheta_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QTHETA_OK;
    } catch (const qtheta::Error& err) {
        g_last_error = err.what();
        return map_error(err);
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return QTHETA_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown failure";
        return QTHETA_INTERNAL_ERROR;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

/* Splits on commas at parenthesis depth zero, so "j(1,0,1)" stays whole. */
std::vector<std::string> split_samples(const char* csv) {
    std::vector<std::string> parts;
    if (csv == nullptr) return parts;
    std::string text(csv);
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

bool row_ok(const qtheta_reports* r, long k) {
    return r != nullptr && k >= 0 && k < static_cast<long>(r->rows.size());
}

}  // namespace

extern "C" {

const char* qtheta_last_error(void) { return g_last_error.c_str(); }

qtheta_status qtheta_expand(const char* expr, long order, qtheta_series** out) {
    if (expr == nullptr || out == nullptr) {
        g_last_error = "expand: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        *out = new qtheta_series{qtheta::expand_expr(expr, order)};
    });
}

long qtheta_series_valuation(const qtheta_series* s) {
    return s == nullptr ? 0 : s->series.valuation();
}

long qtheta_series_order(const qtheta_series* s) {
    return s == nullptr ? 0 : s->series.order();
}

qtheta_status qtheta_series_text(const qtheta_series* s, char** out) {
    if (s == nullptr || out == nullptr) {
        g_last_error = "series_text: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    return guarded([&] { *out = copy_string(s->series.str()); });
}

qtheta_status qtheta_series_json(const qtheta_series* s, char** out) {
    if (s == nullptr || out == nullptr) {
        g_last_error = "series_json: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    return guarded([&] { *out = copy_string(s->series.json_str()); });
}

void qtheta_series_free(qtheta_series* s) { delete s; }

qtheta_status qtheta_verify(const char* suite, long order, int jobs,
                            const char* entry1_samples, const char* entry2_samples,
                            qtheta_reports** out) {
    if (suite == nullptr || out == nullptr) {
        g_last_error = "verify: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        qtheta::SuiteOptions options;
        options.order = order;
        options.jobs = jobs < 1 ? 1 : jobs;
        for (const std::string& text : split_samples(entry1_samples))
            options.entry1_samples.push_back(qtheta::monomial_from_expr(text));
        for (const std::string& text : split_samples(entry2_samples))
            options.entry2_samples.push_back(qtheta::monomial_from_expr(text));
        *out = new qtheta_reports{qtheta::run_suite(suite, options)};
    });
}

long qtheta_reports_count(const qtheta_reports* r) {
    return r == nullptr ? 0 : static_cast<long>(r->rows.size());
}

const char* qtheta_report_id(const qtheta_reports* r, long k) {
    return row_ok(r, k) ? r->rows[k].id.c_str() : "";
}

const char* qtheta_report_status(const qtheta_reports* r, long k) {
    static const char* names[] = {"pass", "fail", "error"};
    if (!row_ok(r, k)) return "";
    return names[static_cast<int>(r->rows[k].status)];
}

long qtheta_report_order(const qtheta_reports* r, long k) {
    return row_ok(r, k) ? r->rows[k].order : 0;
}

double qtheta_report_elapsed_ms(const qtheta_reports* r, long k) {
    return row_ok(r, k) ? r->rows[k].elapsed_ms : 0.0;
}

int qtheta_report_has_mismatch(const qtheta_reports* r, long k) {
    return row_ok(r, k) && r->rows[k].mismatch.has_value() ? 1 : 0;
}

long qtheta_report_mismatch_exponent(const qtheta_reports* r, long k) {
    if (!row_ok(r, k) || !r->rows[k].mismatch.has_value()) return 0;
    return r->rows[k].mismatch->exponent;
}

const char* qtheta_report_detail(const qtheta_reports* r, long k) {
    return row_ok(r, k) ? r->rows[k].error.c_str() : "";
}

int qtheta_reports_all_passed(const qtheta_reports* r) {
    return r != nullptr && qtheta::all_passed(r->rows) ? 1 : 0;
}

qtheta_status qtheta_reports_json(const qtheta_reports* r, char** out) {
    if (r == nullptr || out == nullptr) {
        g_last_error = "reports_json: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    return guarded([&] { *out = copy_string(qtheta::reports_json(r->rows)); });
}

void qtheta_reports_free(qtheta_reports* r) { delete r; }

qtheta_status qtheta_rank_table(long n_max, char** out) {
    if (out == nullptr) {
        g_last_error = "rank_table: null argument";
        return QTHETA_BAD_ARGUMENT;
    }
    return guarded([&] { *out = copy_string(qtheta::rank_table_tsv(n_max)); });
}

void qtheta_string_free(char* s) { std::free(s); }

}  // extern "C"
