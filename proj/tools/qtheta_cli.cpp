// Command-line front end. Talks to the engine exclusively through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtheta/qtheta.h"

namespace {

constexpr long kDefaultExpandOrder = 20;

int fail_with(qtheta_status status) {
    std::fprintf(stderr, "error: %s\n", qtheta_last_error());
    return status == QTHETA_NONGENERIC ? 1 : 2;
}

std::string join_csv(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ",";
        out += parts[k];
    }
    return out;
}

int run_expand(const std::string& expr, long order, const std::string& format) {
    qtheta_series* series = nullptr;
    qtheta_status status = qtheta_expand(expr.c_str(), order, &series);
    if (status != QTHETA_OK) return fail_with(status);
    char* text = nullptr;
    status = format == "json" ? qtheta_series_json(series, &text)
                              : qtheta_series_text(series, &text);
    if (status != QTHETA_OK) {
        qtheta_series_free(series);
        return fail_with(status);
    }
    std::printf("%s\n", text);
    qtheta_string_free(text);
    qtheta_series_free(series);
    return 0;
}

int run_verify(const std::string& suite, long order, int jobs, const std::string& entry1_csv,
               const std::string& entry2_csv, const std::string& format) {
    qtheta_reports* reports = nullptr;
    qtheta_status status = qtheta_verify(suite.c_str(), order, jobs, entry1_csv.c_str(),
                                         entry2_csv.c_str(), &reports);
    if (status != QTHETA_OK) return fail_with(status);

    long count = qtheta_reports_count(reports);
    if (format == "json") {
        char* json = nullptr;
        status = qtheta_reports_json(reports, &json);
        if (status != QTHETA_OK) {
            qtheta_reports_free(reports);
            return fail_with(status);
        }
        std::printf("%s\n", json);
        qtheta_string_free(json);
    } else {
        long passed = 0, failed = 0, errored = 0;
        for (long k = 0; k < count; ++k) {
            std::string row_status = qtheta_report_status(reports, k);
            std::string note;
            if (row_status == "pass") {
                ++passed;
            } else if (row_status == "fail") {
                ++failed;
                note = "first mismatch at q^" +
                       std::to_string(qtheta_report_mismatch_exponent(reports, k));
            } else {
                ++errored;
                note = qtheta_report_detail(reports, k);
            }
            std::printf("%-6s %-34s order %4ld %9.1f ms%s%s\n", row_status.c_str(),
                        qtheta_report_id(reports, k), qtheta_report_order(reports, k),
                        qtheta_report_elapsed_ms(reports, k), note.empty() ? "" : "   ",
                        note.c_str());
        }
        std::printf("checked %ld: %ld passed, %ld failed, %ld errors\n", count, passed, failed,
                    errored);
    }
    int all_passed = qtheta_reports_all_passed(reports);
    qtheta_reports_free(reports);
    return all_passed ? 0 : 1;
}

int run_rank_table(long n_max) {
    char* tsv = nullptr;
    qtheta_status status = qtheta_rank_table(n_max, &tsv);
    if (status != QTHETA_OK) return fail_with(status);
    std::printf("%s", tsv);
    qtheta_string_free(tsv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine: theta/mock-theta expansion and identity verification"};
    app.require_subcommand(1);

    long order = -1;
    std::string format = "text";
    int jobs = 1;
    app.add_option("--order", order, "truncation order (verify: 0 keeps per-check defaults)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);
    app.set_config("--config", "", "key=value config file (also via QTHETA_CONFIG)")
        ->envname("QTHETA_CONFIG");

    auto* expand = app.add_subcommand("expand", "expand an expression into a truncated series");
    expand->fallthrough();
    std::string expr_text;
    expand->add_option("expr", expr_text, "expression, e.g. \"J(1,2)\" or \"g(zeta,0)\"")
        ->required();

    auto* verify = app.add_subcommand("verify", "run an identity suite and report each check");
    verify->fallthrough();
    std::string suite = "all";
    std::vector<std::string> t_samples;
    std::string entry1_csv, entry2_csv;
    verify->add_option("--suite", suite,
                       "all|prelim|props|entries|entry1|entry2|entry3|entry4|relations");
    verify->add_option("--t", t_samples,
                       "sample monomial(s) for the entry families (repeatable)");
    verify->add_option("--entry1-samples", entry1_csv, "comma-separated entry-1 samples");
    verify->add_option("--entry2-samples", entry2_csv, "comma-separated entry-2 samples");

    auto* rank = app.add_subcommand("rank-table", "print TSV rank counts n, m, N(m,n)");
    rank->fallthrough();
    long n_max = 12;
    rank->add_option("n_max", n_max, "largest partition size (<= 40)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (expand->parsed())
        return run_expand(expr_text, order < 0 ? kDefaultExpandOrder : order, format);
    if (verify->parsed()) {
        if (!t_samples.empty()) {
            std::string joined = join_csv(t_samples);
            if (entry1_csv.empty()) entry1_csv = joined;
            if (entry2_csv.empty()) entry2_csv = joined;
        }
        return run_verify(suite, order < 0 ? 0 : order, jobs, entry1_csv, entry2_csv, format);
    }
    return run_rank_table(n_max);
}
