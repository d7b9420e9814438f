// qbt.cpp — command-line front end: run, list, audit, sweep

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qbt/scenario.hpp"

namespace sc = qbt::scenario;

namespace {

constexpr int kExitUsage = 2;

std::string value_tag(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open-system qubit thermodynamics: simulate, audit and plot"};
    app.require_subcommand(1);

    std::string scenario;
    std::optional<double> dt, tmax;
    std::optional<std::string> out;
    bool no_svg = false;
    auto* run = app.add_subcommand("run", "Run one scenario (built-in name or JSON config path)");
    run->add_option("--scenario", scenario, "Built-in name or path to a JSON config")->required();
    run->add_option("--dt", dt, "Override the integration step");
    run->add_option("--tmax", tmax, "Override the integration horizon");
    run->add_option("--out", out, "Output directory (default: the config's out_dir)");
    run->add_flag("--no-svg", no_svg, "Skip SVG panels");

    auto* list = app.add_subcommand("list", "List built-in scenarios");

    std::vector<std::string> names;
    std::optional<std::string> audit_out;
    auto* audit = app.add_subcommand("audit", "Run scenarios (default: all built-ins) and print the audit table");
    audit->add_option("names", names, "Built-in names or config paths");
    audit->add_option("--out", audit_out, "Output directory (default: the config's out_dir)");

    std::string sweep_scenario, param, values_text;
    std::optional<std::string> sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Run one scenario over a list of parameter values");
    sweep->add_option("--scenario", sweep_scenario, "Built-in name or path to a JSON config")->required();
    sweep->add_option("--param", param, "gamma0, T_env, g, gamma_phi, J, dt, t_max or sample_stride")->required();
    sweep->add_option("--values", values_text, "Comma-separated values, e.g. 1,2,5")->required();
    sweep->add_option("--out", sweep_out, "Output directory (default: the config's out_dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*list) {
            for (const auto& c : sc::builtin_scenarios()) {
                std::cout << c.name << "  [" << sc::to_string(c.model) << ", t_max=" << c.integrator.t_max
                          << "]  " << c.description << "\n";
            }
            return 0;
        }
        if (*run) {
            auto cfg = sc::resolve_scenario(scenario);
            if (dt) sc::set_parameter(cfg, "dt", *dt);
            if (tmax) sc::set_parameter(cfg, "t_max", *tmax);
            sc::RunOptions opts;
            if (out) opts.out_dir = *out;
            opts.svg = !no_svg;
            const auto report = sc::run_scenario(cfg, opts);
            std::cout << sc::format_report(report);
            return sc::exit_status({report});
        }
        if (*audit) {
            std::vector<sc::ScenarioConfig> cfgs;
            if (names.empty()) {
                cfgs = sc::builtin_scenarios();
            } else {
                for (const auto& n : names) cfgs.push_back(sc::resolve_scenario(n));
            }
            sc::RunOptions opts;
            if (audit_out) opts.out_dir = *audit_out;
            const auto reports = sc::run_batch(cfgs, opts);
            std::cout << sc::audit_report(reports);
            return sc::exit_status(reports);
        }
        if (*sweep) {
            const auto base = sc::resolve_scenario(sweep_scenario);
            std::vector<double> values;
            std::size_t pos = 0;
            while (pos <= values_text.size()) {
                const auto comma = values_text.find(',', pos);
                const auto item = values_text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                std::size_t used = 0;
                double v = 0.0;
                try {
                    v = std::stod(item, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (item.empty() || used != item.size()) {
                    throw sc::ConfigError("--values: '" + item + "' is not a number");
                }
                values.push_back(v);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            std::vector<sc::ScenarioConfig> cfgs;
            for (double v : values) {
                auto cfg = base;
                sc::set_parameter(cfg, param, v);
                cfg.name = base.name + "-" + param + "-" + value_tag(v);
                cfgs.push_back(std::move(cfg));
            }
            sc::RunOptions opts;
            if (sweep_out) opts.out_dir = *sweep_out;
            const auto reports = sc::run_batch(cfgs, opts);
            std::cout << sc::audit_report(reports);
            return sc::exit_status(reports);
        }
    } catch (const sc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
