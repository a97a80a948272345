#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quotdeg/rational.hpp"

namespace quotdeg {

// Stable process exit codes, part of the CLI contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitParameterError = 2;
inline constexpr int kExitInapplicable = 3;
inline constexpr int kExitInternalError = 4;

int classify_exit_code(const std::exception& e);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Exact value rendered for machine output: decimal string plus the
// numerator/denominator pair. Never a float.
struct ExactValue {
    std::string value;
    std::string num;
    std::string den;

    static ExactValue from(const BigRational& q);
};

/**
 * One command invocation's machine-readable payload. Exact results and
 * relative errors are kept in separate maps so that no exact quantity can
 * ever be emitted as a float; every cross-check that ran shows up in
 * `checks` with an explicit status.
 */
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, ExactValue>> results;
    std::vector<std::pair<std::string, double>> rel_errs;
    std::vector<CheckResult> checks;

    void add_param(const std::string& name, long long v);
    void add_param(const std::string& name, const std::string& v);
    void add_result(const std::string& name, const BigRational& v);
    void add_result(const std::string& name, long long v);
    void add_rel_err(const std::string& name, double v);
    void add_check(const std::string& name, bool pass, const std::string& detail = "");

    bool all_checks_pass() const;
};

std::string to_json_text(const OutputRecord& rec);
std::string to_text(const OutputRecord& rec);

// One (g, p) table row; the optional columns are populated only for g=2.
struct TableRow {
    long long g = 0;
    long long p = 0;
    BigRational bound_exact;
    BigRational quotf_degree;
    double trig_rel_err = 0.0;
    std::optional<BigRational> g2_exact;
    std::optional<BigRational> gap;
};

// Header: g,p,bound_exact,quotF_degree,trig_rel_err,g2_exact,gap
// UTF-8, LF endings, rationals as "num/den", integers bare.
std::string table_to_csv(const std::vector<TableRow>& rows);

std::string table_to_json(const std::vector<std::pair<std::string, std::string>>& params,
                          const std::vector<TableRow>& rows);

}  // namespace quotdeg
