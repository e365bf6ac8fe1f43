#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qtheta/qtheta.h"
#include "qtheta/verify.hpp"

namespace {

std::string take_string(char* raw) {
    REQUIRE(raw != nullptr);
    std::string out(raw);
    qtheta_string_free(raw);
    return out;
}

}  // namespace

TEST_CASE("C API expands expressions") {
    qtheta_series* series = nullptr;
    REQUIRE(qtheta_expand("psi", 6, &series) == QTHETA_OK);
    REQUIRE(series != nullptr);
    CHECK(qtheta_series_valuation(series) == 0);
    CHECK(qtheta_series_order(series) == 6);
    char* text = nullptr;
    REQUIRE(qtheta_series_text(series, &text) == QTHETA_OK);
    CHECK(take_string(text) == "1 + q + q^3 + q^6 + O(q^7)");
    char* json = nullptr;
    REQUIRE(qtheta_series_json(series, &json) == QTHETA_OK);
    auto parsed = nlohmann::json::parse(take_string(json));
    CHECK(parsed["valuation"] == 0);
    CHECK(parsed["order"] == 6);
    qtheta_series_free(series);
}

TEST_CASE("C API reports typed failures") {
    qtheta_series* series = nullptr;
    CHECK(qtheta_expand("2 +", 6, &series) == QTHETA_PARSE_ERROR);
    CHECK(series == nullptr);
    CHECK(std::string(qtheta_last_error()).find("position") != std::string::npos);

    CHECK(qtheta_expand("G(1, -1)", 12, &series) == QTHETA_NONGENERIC);
    CHECK(series == nullptr);
    CHECK(std::string(qtheta_last_error()).find("pole") != std::string::npos);

    CHECK(qtheta_expand("J(1,2,3)", 8, &series) == QTHETA_BAD_ARGUMENT);
    CHECK(qtheta_expand(nullptr, 8, &series) == QTHETA_BAD_ARGUMENT);

    qtheta_reports* reports = nullptr;
    CHECK(qtheta_verify("bogus", 0, 1, nullptr, nullptr, &reports) == QTHETA_BAD_ARGUMENT);
    CHECK(reports == nullptr);
    CHECK(std::string(qtheta_last_error()).find("unknown suite") != std::string::npos);
}

TEST_CASE("C API runs suites and exposes report rows") {
    qtheta_reports* reports = nullptr;
    REQUIRE(qtheta_verify("prelim", 12, 2, nullptr, nullptr, &reports) == QTHETA_OK);
    REQUIRE(reports != nullptr);
    long count = qtheta_reports_count(reports);
    CHECK(count == static_cast<long>(qtheta::catalogue("prelim").size()));
    CHECK(qtheta_reports_all_passed(reports) == 1);
    for (long k = 0; k < count; ++k) {
        CHECK(std::string(qtheta_report_status(reports, k)) == "pass");
        CHECK(qtheta_report_order(reports, k) == 12);
        CHECK(qtheta_report_has_mismatch(reports, k) == 0);
        CHECK(std::string(qtheta_report_detail(reports, k)).empty());
        CHECK(std::string(qtheta_report_id(reports, k)).substr(0, 2) == "eq");
        CHECK(qtheta_report_elapsed_ms(reports, k) >= 0.0);
    }
    char* json = nullptr;
    REQUIRE(qtheta_reports_json(reports, &json) == QTHETA_OK);
    auto parsed = nlohmann::json::parse(take_string(json));
    CHECK(parsed.is_array());
    CHECK(parsed.size() == static_cast<size_t>(count));
    qtheta_reports_free(reports);
}

TEST_CASE("C API honors degenerate sample overrides") {
    qtheta_reports* reports = nullptr;
    REQUIRE(qtheta_verify("entry1", 12, 2, "zeta^6", nullptr, &reports) == QTHETA_OK);
    REQUIRE(reports != nullptr);
    CHECK(qtheta_reports_all_passed(reports) == 0);
    bool saw_error = false;
    for (long k = 0; k < qtheta_reports_count(reports); ++k) {
        std::string status = qtheta_report_status(reports, k);
        CHECK(status != "fail");
        if (status == "error") {
            saw_error = true;
            CHECK(!std::string(qtheta_report_detail(reports, k)).empty());
        }
        std::string id = qtheta_report_id(reports, k);
        CHECK(id.find("[t=i]") != std::string::npos);
    }
    CHECK(saw_error);
    qtheta_reports_free(reports);

    // malformed sample expression
    qtheta_reports* bad = nullptr;
    CHECK(qtheta_verify("entry1", 12, 1, "q + 1", nullptr, &bad) == QTHETA_BAD_ARGUMENT);
    CHECK(bad == nullptr);
}

TEST_CASE("C API emits rank tables") {
    char* tsv = nullptr;
    REQUIRE(qtheta_rank_table(4, &tsv) == QTHETA_OK);
    std::string table = take_string(tsv);
    long rows = 0;
    for (char c : table)
        if (c == '\n') ++rows;
    CHECK(rows == 12);
    CHECK(table.substr(0, 6) == "0\t0\t1\n");

    char* too_big = nullptr;
    CHECK(qtheta_rank_table(41, &too_big) == QTHETA_BAD_ARGUMENT);
}
