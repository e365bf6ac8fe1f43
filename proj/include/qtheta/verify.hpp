#pragma once

// The identity catalogue and checking engine. Every identity is a pair of
// expression builders (order -> series); run_check evaluates both sides to a
// common guaranteed order and compares coefficients exactly. Genericity
// violations (poles, vanishing theta divisors, non-invertible constants)
// surface as status = error, never as a spurious pass or fail.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtheta/series.hpp"

namespace qtheta {

struct IdentityCheck {
    std::string id;  // unique within the catalogue, e.g. "eq2.4[x=z*q]"
    long default_order = 40;
    std::function<QSeries(long)> lhs;
    std::function<QSeries(long)> rhs;
};

enum class CheckStatus { Pass, Fail, Error };

std::string status_name(CheckStatus status);

struct CheckReport {
    std::string id;
    long order = 0;
    CheckStatus status = CheckStatus::Error;
    std::optional<Mismatch> mismatch;  // set when status == Fail
    std::string error;                 // set when status == Error
    double elapsed_ms = 0.0;
};

// order == 0 uses the check's default. Never throws: evaluation problems
// (including order < 10, violating the catalogue invariant) become
// status = error reports.
CheckReport run_check(const IdentityCheck& check, long order = 0);

struct SuiteOptions {
    long order = 0;  // 0 = per-check defaults
    int jobs = 1;
    std::vector<Monomial> entry1_samples;  // empty = built-in defaults
    std::vector<Monomial> entry2_samples;
};

// suite: all | prelim | props | entries | entry1 | entry2 | entry3 | entry4 |
// relations. Raises BadArgument for anything else.
std::vector<IdentityCheck> catalogue(const std::string& suite = "all",
                                     const SuiteOptions& options = {});

// Runs the requested subset, fanning out across options.jobs workers, and
// returns reports sorted by id.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options = {});

// Composite per-entry runners: each executes every layer of the entry at the
// given sample/order and merges the layer reports into one (worst status
// wins, first mismatch is kept).
CheckReport entry1_check(const Monomial& t, long order);
CheckReport entry2_check(const Monomial& t, long order);
CheckReport entry3_check(long order);
CheckReport entry4_check(long order);

// which: "prop2.4" or "prop2.5" (anything else raises BadArgument).
CheckReport mortenson_check(const std::string& which, const Monomial& x, long order);

std::string reports_json(const std::vector<CheckReport>& reports);
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace qtheta
