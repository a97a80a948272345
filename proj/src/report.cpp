#include "quotdeg/report.hpp"

#include <json.hpp>

#include <sstream>

#include "quotdeg/errors.hpp"

namespace quotdeg {

using nlohmann::json;

int classify_exit_code(const std::exception& e) {
    if (dynamic_cast<const DimensionPositive*>(&e)) return kExitInapplicable;
    if (dynamic_cast<const ParameterError*>(&e)) return kExitParameterError;
    // Everything else reachable from the CLI is an internal consistency
    // failure (NonIntegerSign, NonRationalResult, CrossCheckFailure, ...).
    return kExitInternalError;
}

ExactValue ExactValue::from(const BigRational& q) {
    return {q.str(), q.num_str(), q.den_str()};
}

void OutputRecord::add_param(const std::string& name, long long v) {
    params.emplace_back(name, std::to_string(v));
}

void OutputRecord::add_param(const std::string& name, const std::string& v) {
    params.emplace_back(name, v);
}

void OutputRecord::add_result(const std::string& name, const BigRational& v) {
    results.emplace_back(name, ExactValue::from(v));
}

void OutputRecord::add_result(const std::string& name, long long v) {
    results.emplace_back(name, ExactValue::from(BigRational(v)));
}

void OutputRecord::add_rel_err(const std::string& name, double v) {
    rel_errs.emplace_back(name, v);
}

void OutputRecord::add_check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

bool OutputRecord::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

std::string to_json_text(const OutputRecord& rec) {
    json j;
    j["command"] = rec.command;
    j["params"] = json::object();
    for (const auto& [k, v] : rec.params) j["params"][k] = v;
    j["results"] = json::object();
    for (const auto& [k, v] : rec.results)
        j["results"][k] = json{{"value", v.value}, {"num", v.num}, {"den", v.den}};
    for (const auto& [k, v] : rec.rel_errs) j["results"][k] = v;
    j["checks"] = checks_to_json(rec.checks);
    return j.dump(2) + "\n";
}

std::string to_text(const OutputRecord& rec) {
    std::ostringstream os;
    for (const auto& [k, v] : rec.params) os << k << " = " << v << "\n";
    for (const auto& [k, v] : rec.results) os << k << " = " << v.value << "\n";
    os.precision(15);
    for (const auto& [k, v] : rec.rel_errs) os << k << " = " << v << "\n";
    for (const auto& c : rec.checks)
        os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL")
           << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    return os.str();
}

namespace {

std::string rel_err_str(double v) {
    std::ostringstream os;
    os.precision(9);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "g,p,bound_exact,quotF_degree,trig_rel_err,g2_exact,gap\n";
    for (const auto& r : rows) {
        os << r.g << ',' << r.p << ',' << r.bound_exact.str() << ',' << r.quotf_degree.str()
           << ',' << rel_err_str(r.trig_rel_err) << ','
           << (r.g2_exact ? r.g2_exact->str() : "") << ','
           << (r.gap ? r.gap->str() : "") << '\n';
    }
    return os.str();
}

std::string table_to_json(const std::vector<std::pair<std::string, std::string>>& params,
                          const std::vector<TableRow>& rows) {
    json j;
    j["command"] = "table";
    j["params"] = json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json row{{"g", r.g},
                 {"p", r.p},
                 {"bound_exact", r.bound_exact.str()},
                 {"quotF_degree", r.quotf_degree.str()},
                 {"trig_rel_err", r.trig_rel_err}};
        row["g2_exact"] = r.g2_exact ? json(r.g2_exact->str()) : json(nullptr);
        row["gap"] = r.gap ? json(r.gap->str()) : json(nullptr);
        j["rows"].push_back(std::move(row));
    }
    j["checks"] = json::array();
    return j.dump(2) + "\n";
}

}  // namespace quotdeg
