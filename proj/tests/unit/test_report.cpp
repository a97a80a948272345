#include <doctest.h>

#include <json.hpp>

#include <stdexcept>

#include "quotdeg/errors.hpp"
#include "quotdeg/report.hpp"

using namespace quotdeg;
using nlohmann::json;

TEST_CASE("exact values render as integer or num/den strings") {
    ExactValue i = ExactValue::from(BigRational(35));
    CHECK(i.value == "35");
    CHECK(i.num == "35");
    CHECK(i.den == "1");

    ExactValue q = ExactValue::from(BigRational(-35, 12));
    CHECK(q.value == "-35/12");
    CHECK(q.num == "-35");
    CHECK(q.den == "12");
}

TEST_CASE("output record json shape") {
    OutputRecord rec;
    rec.command = "versch";
    rec.add_param("g", 2);
    rec.add_param("p", 3);
    rec.add_result("bound_exact", BigRational(35));
    rec.add_rel_err("trig_rel_err", 1.5e-16);
    rec.add_check("trig_within_tol", true, "ok");
    rec.add_check("watchdog", false, "boom");

    CHECK_FALSE(rec.all_checks_pass());

    json j = json::parse(to_json_text(rec));
    CHECK(j["command"] == "versch");
    CHECK(j["params"]["g"] == "2");
    CHECK(j["results"]["bound_exact"]["value"].is_string());
    CHECK(j["results"]["bound_exact"]["value"] == "35");
    CHECK(j["results"]["bound_exact"]["num"] == "35");
    CHECK(j["results"]["bound_exact"]["den"] == "1");
    CHECK(j["results"]["trig_rel_err"].is_number());  // floats only in *_rel_err
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][1]["status"] == "fail");

    std::string text = to_text(rec);
    CHECK(text.find("bound_exact = 35") != std::string::npos);
    CHECK(text.find("check watchdog: FAIL") != std::string::npos);
}

TEST_CASE("csv table contract") {
    TableRow row;
    row.g = 2;
    row.p = 3;
    row.bound_exact = BigRational(35);
    row.quotf_degree = BigRational(315);
    row.trig_rel_err = 0.0;
    row.g2_exact = BigRational(11);
    row.gap = BigRational(24);

    TableRow row3;
    row3.g = 3;
    row3.p = 5;
    row3.bound_exact = BigRational(6105);
    row3.quotf_degree = BigRational(763125);
    row3.trig_rel_err = 0.0;

    std::string csv = table_to_csv({row, row3});
    CHECK(csv.find("g,p,bound_exact,quotF_degree,trig_rel_err,g2_exact,gap\n") == 0);
    CHECK(csv.find("\n2,3,35,315,0.000000000e+00,11,24\n") != std::string::npos);
    CHECK(csv.find("\n3,5,6105,763125,0.000000000e+00,,\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);  // LF endings only

    json j = json::parse(table_to_json({{"g_range", "2:3"}}, {row, row3}));
    CHECK(j["command"] == "table");
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["bound_exact"] == "35");      // exact values are strings
    CHECK(j["rows"][0]["quotF_degree"] == "315");
    CHECK(j["rows"][0]["g2_exact"] == "11");
    CHECK(j["rows"][1]["g2_exact"].is_null());
    CHECK(j["rows"][1]["trig_rel_err"].is_number());

    // header-only output for an empty grid
    CHECK(table_to_csv({}) == "g,p,bound_exact,quotF_degree,trig_rel_err,g2_exact,gap\n");
}

TEST_CASE("exception classification drives the exit codes") {
    CHECK(classify_exit_code(ParameterError("x")) == kExitParameterError);
    CHECK(classify_exit_code(DimensionPositive("x")) == kExitInapplicable);
    CHECK(classify_exit_code(NonIntegerSign("x")) == kExitInternalError);
    CHECK(classify_exit_code(NonRationalResult("x")) == kExitInternalError);
    CHECK(classify_exit_code(CrossCheckFailure("x")) == kExitInternalError);
    CHECK(classify_exit_code(ModulusMismatch("x")) == kExitInternalError);
    CHECK(classify_exit_code(std::runtime_error("x")) == kExitInternalError);
}
