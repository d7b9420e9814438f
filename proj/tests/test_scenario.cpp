// test_scenario.cpp — config parsing, registry, runner, CSV/SVG output and reports

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "qbt/output.hpp"
#include "qbt/scenario.hpp"

using namespace qbt;
using namespace qbt::scenario;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("qbt_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string config_error(const std::string& json) {
    try {
        parse_config(json);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

ScenarioConfig short_bath(const std::string& name, double t_max = 0.5) {
    return parse_config(R"({"name": ")" + name + R"(", "model": "thermal_bath", "gamma0": 1, "T_env": 10,
                           "bloch": [0.2, 0.5, 0.4], "t_max": )" + std::to_string(t_max) + "}");
}

} // namespace

TEST_CASE("minimal config receives defaults") {
    const ScenarioConfig c = parse_config(R"({"name": "m", "model": "thermal_bath", "gamma0": 1, "T_env": 2,
                                              "bloch": [0, 0, 0.5]})");
    CHECK(c.integrator.dt == 1e-3);
    CHECK(c.integrator.sample_stride == 1);
    CHECK(c.field == Vec3(0, 0, 1));
    CHECK(c.out_dir == "out");
    CHECK(c.plot);
    CHECK(c.panels.size() == 2);
    CHECK(c.dim() == 2);
}

TEST_CASE("config diagnostics name the offending field") {
    CHECK(config_error(R"({"name": "x", "model": "thermal_bath", "gamma0": 1, "T_env": 1, "bloch": [0, 0, 1.2]})")
              .find("'bloch'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "thermal_bath", "gamma0": 1, "T_env": 1, "bloch": [0, 0, 1.2]})")
              .find("1.2") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "thermal_bath", "gamma0": -1, "T_env": 1, "bloch": [0, 0, 0]})")
              .find("'gamma0'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "thermal_bath", "T_env": 1, "bloch": [0, 0, 0]})")
              .find("'gamma0'") != std::string::npos);
    CHECK(config_error(R"({"model": "thermal_bath"})").find("'name'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "dephasing", "gamma_phi": 1, "bloch": [0,0,0], "colour": 1})")
              .find("'colour'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "dephasing", "gamma_phi": 1, "J": 1, "bloch": [0,0,0]})")
              .find("'J'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "spin_glass"})").find("'model'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "two_atom", "gamma0": 1, "g": 1.5,
                          "bloch_a": [0,0,1], "bloch_b": [0,0,1]})")
              .find("'g'") != std::string::npos);
    CHECK(config_error(R"({"name": "x", "model": "dephasing", "gamma_phi": 1, "bloch": [0,0,0], "dt": 0})")
              .find("'dt'") != std::string::npos);
    CHECK_FALSE(config_error("{not json").empty());
}

TEST_CASE("two-qubit configs accept an explicit density matrix") {
    const ScenarioConfig c = parse_config(R"({"name": "r", "model": "exchange_unitary", "J": 1,
        "rho": [[0.5, 0, 0, [0, 0.5]], [0, 0, 0, 0], [0, 0, 0, 0], [[0, -0.5], 0, 0, 0.5]]})");
    REQUIRE(c.rho.has_value());
    CHECK(std::abs((*c.rho)(0, 3) - Complex(0, 0.5)) < 1e-15);
    CHECK(initial_state(c).isApprox(*c.rho));
    CHECK_FALSE(config_error(R"({"name": "r", "model": "exchange_unitary", "J": 1,
        "rho": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]})")
                    .empty());
}

TEST_CASE("built-in registry") {
    const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "dephasing-demo", "schmidt-demo"};
    REQUIRE(builtin_scenarios().size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(builtin_scenarios()[i].name == names[i]);
        CHECK_NOTHROW(validate(builtin_scenarios()[i]));
    }
    const ScenarioConfig fig2 = *find_builtin("fig2");
    CHECK(*fig2.T_env == 10.0);
    CHECK(fig2.bloch.at(0) == Vec3(0.2, 0.5, 0.4));
    const ScenarioConfig fig4 = *find_builtin("fig4");
    CHECK(*fig4.g == 0.8);
    CHECK(*fig4.T_env == 0.0);
    CHECK(fig4.bloch.at(0) == Vec3(0, 0.5, 0.8));
    CHECK(fig4.bloch.at(1) == Vec3(0, 0, 1));
    CHECK_FALSE(find_builtin("fig9").has_value());
    CHECK_THROWS_AS(resolve_scenario("no-such-scenario"), ConfigError);
}

TEST_CASE("set_parameter re-validates") {
    ScenarioConfig c = *find_builtin("fig2");
    set_parameter(c, "T_env", 3.0);
    CHECK(*c.T_env == 3.0);
    set_parameter(c, "dt", 2e-3);
    CHECK(c.integrator.dt == 2e-3);
    CHECK_THROWS_AS(set_parameter(c, "gamma0", -1.0), ConfigError);
    CHECK_THROWS_AS(set_parameter(c, "colour", 1.0), ConfigError);
    CHECK_THROWS_AS(set_parameter(c, "J", 1.0), ConfigError);
}

TEST_CASE("tilted field: the relaxed state points along the field") {
    ScenarioConfig c = short_bath("tilt", 12.0);
    c.field = Vec3(0.6, 0.0, 0.8) * 2.0;
    const RunReport r = run_scenario(c, {false, std::nullopt, false});
    REQUIRE(r.error.empty());
    CHECK(r.passed());
    const Vec3 b = r.ledgers[0].samples.back().bloch;
    CHECK((b - Vec3(0.6, 0, 0.8) * std::tanh(0.2)).norm() < 1e-4);
    CHECK(r.ledgers[0].samples.back().temp2.value() == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("CSV golden header and row count") {
    RunReport r = run_scenario(short_bath("csv", 0.002), {false, std::nullopt, false});
    REQUIRE(r.ledgers.size() == 1);
    const std::string csv = output::format_csv(r.ledgers[0]);
    const std::string header =
        "t,bx,by,bz,Bmod,theta,E,S,q1_rate,w1_rate,q2_rate,w2_rate,wprime_rate,Q1,W1,Q2,W2,T1,T2,C1,C2,sgen1_rate,"
        "Sgen1,sgen_ht_rate,coherence\n";
    CHECK(csv.substr(0, header.size()) == header);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("value formatting") {
    CHECK(output::format_value(MarkedValue::infinite()) == "inf");
    CHECK(output::format_value(MarkedValue::infinite(-1)) == "-inf");
    CHECK(output::format_value(MarkedValue::undefined()) == "undef");
    CHECK(output::format_value(MarkedValue::finite(-0.0)) == "0");
    CHECK(output::format_value(MarkedValue::finite(0.1)) == "0.10000000000000001");
    CHECK(std::stod(output::format_value(MarkedValue::finite(M_PI))) == M_PI);
}

TEST_CASE("runs write CSV, SVG and report deterministically") {
    const fs::path d1 = scratch("det1");
    const fs::path d2 = scratch("det2");
    const ScenarioConfig c = short_bath("det", 1.0);
    const RunReport r1 = run_scenario(c, {true, d1, true});
    const RunReport r2 = run_scenario(c, {true, d2, true});
    REQUIRE(r1.passed());
    for (const char* f : {"det.csv", "det_heat_work.svg", "det_temperature.svg"}) {
        REQUIRE(fs::exists(d1 / "det" / f));
        CHECK(slurp(d1 / "det" / f) == slurp(d2 / "det" / f));
    }
    CHECK(fs::exists(d1 / "det" / "report.txt"));
    const std::string svg = slurp(d1 / "det" / "det_heat_work.svg");
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(svg.find("stroke-width=\"2\"") != std::string::npos);
    CHECK(svg.find("gamma0 t") != std::string::npos);
    for (const char* name : {">Q1<", ">W1<", ">Q2<", ">W2<"}) CHECK(svg.find(name) != std::string::npos);
}

TEST_CASE("two-qubit runs write one CSV per atom and a Bloch panel") {
    const fs::path d = scratch("pair");
    ScenarioConfig c = *find_builtin("fig4");
    c.name = "pair";
    c.integrator.t_max = 0.5;
    const RunReport r = run_scenario(c, {true, d, true});
    REQUIRE(r.passed());
    CHECK(fs::exists(d / "pair" / "pair_A.csv"));
    CHECK(fs::exists(d / "pair" / "pair_B.csv"));
    CHECK(fs::exists(d / "pair" / "pair_bloch.svg"));
    CHECK(r.subsystems.size() == 2);
}

TEST_CASE("SVG edge cases produce notes, not files") {
    const fs::path d = scratch("svg");
    RunReport r = run_scenario(short_bath("svg", 0.01), {false, std::nullopt, false});
    const ThermoLedger& l = r.ledgers[0];
    const auto empty = output::write_svg(l, {}, d / "empty.svg", "t", "y");
    CHECK_FALSE(empty.written);
    CHECK_FALSE(fs::exists(d / "empty.svg"));
    CHECK(empty.notes.size() == 1);

    // Dephasing from a pure orthogonal state: T1 is undefined at every sample.
    ScenarioConfig c = parse_config(R"({"name": "m", "model": "dephasing", "gamma_phi": 1, "bloch": [0.5, 0, 0],
                                        "t_max": 0.01})");
    const RunReport rm = run_scenario(c, {false, std::nullopt, false});
    const auto res = output::write_svg(rm.ledgers[0], {"T1"}, d / "marker.svg", "t", "y");
    CHECK_FALSE(res.written);
    CHECK(res.notes.size() == 2);
    const auto mixed = output::write_svg(rm.ledgers[0], {"T1", "T2"}, d / "mixed.svg", "t", "y");
    CHECK(mixed.written);
    CHECK(mixed.notes.size() == 1);
}

TEST_CASE("line chart escapes text and splits at gaps") {
    output::LineChart chart("a < b & c", "x", "y");
    chart.add_series({"s", {std::make_pair(0.0, 0.0), std::make_pair(1.0, 1.0), std::nullopt,
                            std::make_pair(2.0, 0.0), std::make_pair(3.0, 1.0)}});
    const std::string svg = chart.render();
    CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
    std::size_t n = 0;
    for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++n;
    CHECK(n == 2);
    CHECK(svg == chart.render());
}

TEST_CASE("induced failure: dt = 0.5 is reported as a named failing audit") {
    ScenarioConfig c = *find_builtin("fig2");
    set_parameter(c, "dt", 0.5);
    const RunReport r = run_scenario(c, {false, std::nullopt, false});
    CHECK_FALSE(r.passed());
    const std::string table = audit_report({r});
    CHECK(table.find("FAIL positivity[system]") != std::string::npos);
    CHECK(exit_status({r}) == 1);
}

TEST_CASE("audit report table") {
    const RunReport r = run_scenario(short_bath("single", 0.1), {false, std::nullopt, false});
    const std::string table = audit_report({r});
    CHECK(std::count(table.begin(), table.end(), '\n') == 2);
    CHECK(table.find("single") != std::string::npos);
    CHECK(table.find("first_law_alicki[system]") != std::string::npos);
    CHECK(exit_status({r}) == 0);
    CHECK(format_report(r).find("PASS") != std::string::npos);
}

TEST_CASE("batch keeps input order") {
    std::vector<ScenarioConfig> cfgs;
    for (int i = 0; i < 4; ++i) cfgs.push_back(short_bath("b" + std::to_string(i), 0.05 * (4 - i)));
    const auto reports = run_batch(cfgs, {false, std::nullopt, false});
    REQUIRE(reports.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(reports[i].scenario == "b" + std::to_string(i));
}
