#include <doctest.h>

#include <json.hpp>

#include "augnewton/report.hpp"

using namespace augnewton;

TEST_CASE("csv quoting follows RFC 4180") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("fingerprint json carries the fields in order") {
    VariableList v2 = VariableList::split("x,y");
    LatticePolytope poly = newton_polytope(parse_poly("x^2 + y^2 + x", v2));
    Fingerprint fp = fingerprint_of(poly);
    std::string out = report_newton(poly, fp, Format::json);
    auto j = nlohmann::ordered_json::parse(out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"intrinsic_dim", "total", "boundary", "interior",
                                           "normalized_volume", "vertices"});
    CHECK(j["total"] == 4);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["vertices"][0] == nlohmann::ordered_json::array({0, 2}));
}

TEST_CASE("orbit reports are deterministic and carry the verdict") {
    Scenario s = scenario_beta11();
    auto rows = orbit_table(s, 3);
    Verdict v = distinctness_verdict(rows);
    std::string a = report_orbit(s.name, rows, v, Format::json);
    std::string b = report_orbit(s.name, rows, v, Format::json);
    CHECK(a == b);
    auto j = nlohmann::ordered_json::parse(a);
    CHECK(j["scenario"] == "beta11");
    CHECK(j["rows"].size() == 3);
    CHECK(j["distinct"] == true);
    CHECK(j["witness"].is_null());

    std::string csv = report_orbit(s.name, rows, v, Format::csv);
    CHECK(csv.rfind("n,monomials,dim,total,boundary,interior,nvol\r\n", 0) == 0);
}

TEST_CASE("alpha text report includes the check line") {
    auto rows = alpha_table(3);
    std::string out = report_alpha(rows, Format::text, std::string("ok"));
    CHECK(out.find("check: ok") != std::string::npos);
    CHECK(out.find("n  monomials") == 0);
}

TEST_CASE("selftest report has one line per criterion") {
    std::vector<CriterionResult> results = {{1, "first", true, "fine"},
                                            {2, "second", false, "broken, badly"}};
    std::string text = report_selftest(results, Format::text);
    CHECK(text == "PASS  1  first: fine\nFAIL  2  second: broken, badly\n");
    std::string csv = report_selftest(results, Format::csv);
    CHECK(csv.find("\"broken, badly\"") != std::string::npos);
    auto j = nlohmann::ordered_json::parse(report_selftest(results, Format::json));
    CHECK(j.is_array());
    CHECK(j[1]["passed"] == false);
}

TEST_CASE("acceptance suite reports nine named criteria") {
    auto results = run_acceptance_suite();
    REQUIRE(results.size() == 9);
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i].id == static_cast<int>(i) + 1);
        CHECK(!results[i].name.empty());
        CHECK(!results[i].detail.empty());
    }
    // a doctored failure flips the aggregate and is named in the report
    auto doctored = results;
    doctored[0].passed = false;
    doctored[0].detail = "n=7: computed 13, reference 14";
    CHECK(!all_passed(doctored));
    std::string text = report_selftest(doctored, Format::text);
    CHECK(text.find("FAIL  1  alpha monomial sequence") != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::text);
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(!parse_format("yaml"));
}
