#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "wirtinger/report.hpp"

using namespace wirtinger;

TEST_CASE("function spec parsing") {
    auto poly = parse_function_spec(ordered_json::parse(
        R"({"type":"polynomial","coeffs":[0,1,-1],"domain":[0,1]})"));
    REQUIRE(poly.poly.has_value());
    CHECK((*poly.poly)(0.5) == doctest::Approx(0.25));
    CHECK(poly.handle(0.5) == doctest::Approx(0.25));

    auto ext = parse_function_spec(
        ordered_json::parse(R"({"type":"extremal","n":3,"k":1})"));
    REQUIRE(ext.poly.has_value());
    CHECK(ext.poly->degree() == 3);

    auto sin = parse_function_spec(ordered_json::parse(
        R"({"type":"sin","frequency":3.0,"domain":[0,2]})"));
    CHECK(!sin.poly.has_value());
    CHECK(sin.handle(0.5) == doctest::Approx(std::sin(1.5)));

    CHECK_THROWS_AS(parse_function_spec(ordered_json::parse(
                        R"({"type":"fourier","coeffs":[1]})")),
                    ConfigError);
    CHECK_THROWS_AS(parse_function_spec(ordered_json::parse(
                        R"({"type":"polynomial","domain":[0,1]})")),
                    ConfigError);
}

TEST_CASE("space spec parsing") {
    auto leb = parse_space_spec(ordered_json::parse(R"({"type":"lebesgue","p":2})"));
    CHECK(std::holds_alternative<Lebesgue>(leb));
    auto lebinf =
        parse_space_spec(ordered_json::parse(R"({"type":"lebesgue","p":"inf"})"));
    CHECK(std::isinf(std::get<Lebesgue>(lebinf).p));

    auto gls = parse_space_spec(ordered_json::parse(
        R"({"type":"gls","psi":{"form":"power","params":[1,0.5]},"A":1.5,"B":4})"));
    CHECK(std::holds_alternative<GrandLebesgue>(gls));
    auto glsinf = parse_space_spec(ordered_json::parse(
        R"({"type":"gls","psi":{"form":"constant","params":[1]},"A":1.5,"B":"inf"})"));
    CHECK(std::get<GrandLebesgue>(glsinf).gen.unbounded());

    auto orl = parse_space_spec(
        ordered_json::parse(R"({"type":"orlicz","phi":{"form":"power","p":2.5}})"));
    CHECK(std::holds_alternative<Orlicz>(orl));

    auto zyg = parse_space_spec(
        ordered_json::parse(R"({"type":"zygmund","q":2,"gamma":1})"));
    CHECK(std::get<Zygmund>(zyg).q == doctest::Approx(2.0));

    // unknown type names the field
    try {
        parse_space_spec(ordered_json::parse(R"({"type":"besov","p":2})"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("space.type") != std::string::npos);
    }
    CHECK_THROWS_AS(
        parse_space_spec(ordered_json::parse(R"({"type":"lebesgue","p":0.5})")),
        ConfigError);
}

TEST_CASE("config validation collects all violations") {
    try {
        parse_config(R"({"command":"transmogrify","format":"yaml"})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.violations().size() == 2);
    }
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    try {
        parse_config("{not json");
    } catch (const ConfigError& e) {
        // nlohmann reports the byte offset of the failure
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("grid overrides echo verbatim") {
    RunConfig cfg = parse_config(
        R"({"command":"verify","theorem":"ank","n":2,"k":1,
            "grids":{"p_grid":[2,3,5],"q_grid":[2]}})");
    ReportDocument doc = run(cfg);
    CHECK(doc.config_echo["grids"]["p_grid"] ==
          ordered_json::parse("[2,3,5]"));
    CHECK(doc.results.size() == 1);
    CHECK(doc.results[0]["satisfied"].get<bool>());
    CHECK(doc.exit_status() == 0);
}

TEST_CASE("report round-trips and is deterministic") {
    RunConfig cfg = parse_config(
        R"({"command":"verify","theorem":"thm41","n":2,"k":1,
            "psi":"constant","nu":"constant"})");
    ReportDocument a = run(cfg);
    ReportDocument b = run(cfg);
    CHECK(a.to_json().dump() == b.to_json().dump());

    ordered_json j = a.to_json();
    ordered_json reparsed = ordered_json::parse(j.dump());
    CHECK(reparsed == j);
    CHECK(j["results"][0]["bound"].get<double>() ==
          doctest::Approx(1.0 / 54.0));
    CHECK(j["timing_ms"].get<long>() == 0);
    CHECK(!j["warnings"].empty());
}

TEST_CASE("norm and fundamental commands") {
    RunConfig cfg = parse_config(
        R"({"command":"norm","function":{"type":"extremal","n":2,"k":1},
            "spaces":[{"type":"lebesgue","p":2},{"type":"orlicz","phi":{"form":"power","p":2}}]})");
    ReportDocument doc = run(cfg);
    REQUIRE(doc.results.size() == 2);
    CHECK(doc.results[0]["value"].get<double>() ==
          doctest::Approx(std::sqrt(1.0 / 30.0)).epsilon(1e-9));

    RunConfig fcfg = parse_config(
        R"({"command":"fundamental","delta":0.5,
            "spaces":[{"type":"lebesgue","p":2}]})");
    ReportDocument fdoc = run(fcfg);
    CHECK(fdoc.results[0]["value"].get<double>() ==
          doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("csv and text projections carry every result row") {
    RunConfig cfg = parse_config(
        R"({"command":"sweep","theorem":"thm31","n":2,"k":1,
            "spaces":[{"type":"lebesgue","p":2},{"type":"lebesgue","p":2}],
            "grids":{"delta_grid":[0.5,1,2]}})");
    ReportDocument doc = run(cfg);
    REQUIRE(doc.results.size() == 4);  // 3 sweep points + 1 verdict
    const std::string csv = doc.to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
    const std::string text = doc.to_text();
    CHECK(text.find("thm31_w_sweep") != std::string::npos);
}

TEST_CASE("exit status contract") {
    ReportDocument doc;
    doc.results = ordered_json::array();
    VerdictReport bad;
    bad.theorem_id = "synthetic";
    bad.satisfied = false;
    doc.results.push_back(verdict_to_json(bad));
    CHECK(doc.exit_status() == 1);
    doc.results.back()["satisfied"] = true;
    CHECK(doc.exit_status() == 0);
}
