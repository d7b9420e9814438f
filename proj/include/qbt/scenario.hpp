// scenario.hpp — scenario configuration, built-in registry, batch runner and reports

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbt/integrator.hpp"
#include "qbt/ledger.hpp"

namespace qbt::scenario {

/// Malformed, incomplete or unphysical scenario input.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ModelKind { thermal_bath, dephasing, two_atom, exchange_unitary };

enum class Panel { heat_work, temperature, bloch };

std::string to_string(ModelKind kind);
std::string to_string(Panel panel);

struct ScenarioConfig {
    std::string name;
    std::string description;
    ModelKind model = ModelKind::thermal_bath;
    std::optional<double> gamma0;
    std::optional<double> T_env;
    std::optional<double> g;
    std::optional<double> gamma_phi;
    std::optional<double> J;
    /// One Bloch vector for single-qubit models, two (A, B) for two-qubit models.
    std::vector<Vec3> bloch;
    /// Explicit two-qubit initial state; overrides `bloch`.
    std::optional<ComplexMatrix> rho;
    Vec3 field{0.0, 0.0, 1.0};
    IntegratorConfig integrator{1e-3, 10.0, 1};
    std::string out_dir = "out";
    bool plot = true;
    std::vector<Panel> panels;

    int dim() const { return model == ModelKind::thermal_bath || model == ModelKind::dephasing ? 2 : 4; }
};

/// Parses and validates a JSON scenario document. Defaults are applied and
/// unknown keys rejected; every diagnostic names the offending field.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError when the config violates its invariants.
void validate(const ScenarioConfig& cfg);

/// Sets a numeric parameter by key (gamma0, T_env, g, gamma_phi, J, dt,
/// t_max, sample_stride) and re-validates.
void set_parameter(ScenarioConfig& cfg, const std::string& key, double value);

const std::vector<ScenarioConfig>& builtin_scenarios();
std::optional<ScenarioConfig> find_builtin(const std::string& name);
/// Built-in name, or else a path to a JSON config.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

LindbladModel build_model(const ScenarioConfig& cfg);
ComplexMatrix initial_state(const ScenarioConfig& cfg);

struct Verdict {
    std::string name;
    std::string subsystem;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct SubsystemSummary {
    std::string label;
    double delta_energy = 0.0;
    double Q1 = 0.0, W1 = 0.0, Q2 = 0.0, W2 = 0.0;
    MarkedValue final_temp1 = MarkedValue::undefined();
    MarkedValue final_temp2 = MarkedValue::undefined();
};

struct RunReport {
    std::string scenario;
    std::vector<SubsystemSummary> subsystems;
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;
    std::vector<std::filesystem::path> files;
    double wall_seconds = 0.0;
    std::string error;

    std::optional<Trajectory> trajectory;
    std::vector<ThermoLedger> ledgers;

    bool passed() const;
};

struct RunOptions {
    bool write_files = true;
    std::optional<std::filesystem::path> out_dir; ///< overrides cfg.out_dir
    bool svg = true;
};

/// Integrates, annotates every subsystem and writes
/// <out>/<name>/<name>[_A|_B].csv, optional SVG panels and report.txt.
RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// Runs independent scenarios concurrently; results keep the input order.
std::vector<RunReport> run_batch(const std::vector<ScenarioConfig>& cfgs, const RunOptions& opts = {});

std::string format_report(const RunReport& report);
/// Table of scenarios x audit verdicts.
std::string audit_report(const std::vector<RunReport>& reports);
/// 0 when every verdict passed, 1 otherwise.
int exit_status(const std::vector<RunReport>& reports);

} // namespace qbt::scenario
