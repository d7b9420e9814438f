// runner.cpp — integrate, annotate and emit one scenario; concurrent batches

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "qbt/output.hpp"
#include "qbt/scenario.hpp"
#include "qbt/spectrum.hpp"

namespace qbt::scenario {

namespace {

constexpr double kSchmidtTol = 1e-8;
constexpr double kPurityTol = 1e-10;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

SubsystemSummary summarize(const ThermoLedger& l) {
    SubsystemSummary s;
    s.label = l.label;
    s.delta_energy = l.delta_energy();
    s.Q1 = l.Q1.back();
    s.W1 = l.W1.back();
    s.Q2 = l.Q2.back();
    s.W2 = l.W2.back();
    s.final_temp1 = l.samples.back().temp1;
    s.final_temp2 = l.samples.back().temp2;
    return s;
}

Verdict schmidt_verdict(const ThermoLedger& a, const ThermoLedger& b) {
    Verdict v{"schmidt_equal_entropy", "A,B", true, true, ""};
    double worst = 0.0;
    double worst_t = 0.0;
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        const double d = std::abs(a.samples[k].entropy - b.samples[k].entropy);
        if (d > worst) {
            worst = d;
            worst_t = a.samples[k].t;
        }
    }
    v.passed = worst <= kSchmidtTol;
    v.detail = "max |S_A - S_B| = " + fmt(worst) + " at t = " + fmt(worst_t) + " (tol " + fmt(kSchmidtTol) + ")";
    return v;
}

bool is_pure(const ComplexMatrix& rho) { return std::abs((rho * rho).trace().real() - 1.0) < kPurityTol; }

void write_outputs(const ScenarioConfig& cfg, const RunOptions& opts, RunReport& report) {
    const std::filesystem::path dir = opts.out_dir.value_or(std::filesystem::path(cfg.out_dir)) / cfg.name;
    std::filesystem::create_directories(dir);
    const bool split = report.ledgers.size() > 1;
    for (const auto& l : report.ledgers) {
        const std::string stem = split ? cfg.name + "_" + l.label : cfg.name;
        const auto path = dir / (stem + ".csv");
        output::write_csv(l, path);
        report.files.push_back(path);
    }
    if (opts.svg && cfg.plot) {
        for (Panel p : cfg.panels) {
            if (p == Panel::bloch) {
                std::vector<const ThermoLedger*> ls;
                for (const auto& l : report.ledgers) ls.push_back(&l);
                const auto path = dir / (cfg.name + "_bloch.svg");
                auto r = output::write_bloch_svg(ls, path, cfg.name + ": Bloch trajectory (field frame)");
                if (r.written) report.files.push_back(path);
                report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
                continue;
            }
            const bool hw = p == Panel::heat_work;
            const std::vector<std::string> sel = hw ? std::vector<std::string>{"Q1", "W1", "Q2", "W2"}
                                                    : std::vector<std::string>{"T1", "T2"};
            for (const auto& l : report.ledgers) {
                const std::string stem = split ? cfg.name + "_" + l.label : cfg.name;
                const auto path = dir / (stem + (hw ? "_heat_work.svg" : "_temperature.svg"));
                const std::string who = split ? " (atom " + l.label + ")" : "";
                auto r = hw ? output::write_svg(l, sel, path, cfg.name + ": heat and work" + who, "energy / eps")
                            : output::write_svg(l, sel, path, cfg.name + ": temperature" + who, "k_B T / eps");
                if (r.written) report.files.push_back(path);
                report.notes.insert(report.notes.end(), r.notes.begin(), r.notes.end());
            }
        }
    }
    const auto rpath = dir / "report.txt";
    report.files.push_back(rpath);
    std::ofstream out(rpath, std::ios::binary);
    out << format_report(report);
    if (!out) {
        throw std::runtime_error("cannot write report '" + rpath.string() + "'");
    }
}

} // namespace

bool RunReport::passed() const {
    if (!error.empty()) return false;
    for (const auto& v : verdicts) {
        if (v.applicable && !v.passed) return false;
    }
    return true;
}

RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.scenario = cfg.name;
    try {
        validate(cfg);
        const LindbladModel model = build_model(cfg);
        const ComplexMatrix rho0 = initial_state(cfg);
        try {
            report.trajectory = integrate(model, rho0, cfg.integrator);
            report.verdicts.push_back({"positivity", "system", true, true,
                                       "min eigenvalue " + fmt(report.trajectory->min_eigenvalue) + " (tol -" +
                                           fmt(kPositivityMonitorTol) + ")"});
        } catch (const PositivityError& e) {
            report.verdicts.push_back({"positivity", "system", true, false, e.what()});
        }
        if (report.trajectory) {
            const FieldProtocol field{cfg.field, Vec3::Zero()};
            const EnvironmentSpec env{cfg.T_env};
            if (cfg.dim() == 2) {
                report.ledgers.push_back(annotate_trajectory(*report.trajectory, field, env));
            } else {
                report.ledgers.push_back(annotate_trajectory(*report.trajectory, field, env, Subsystem::A));
                report.ledgers.push_back(annotate_trajectory(*report.trajectory, field, env, Subsystem::B));
            }
            for (const auto& l : report.ledgers) {
                report.subsystems.push_back(summarize(l));
                for (const auto& a : l.audits) {
                    std::string detail = a.note;
                    if (a.applicable && !a.passed) {
                        detail += "; worst residual " + fmt(a.residual) + " at t = " + fmt(a.worst_time);
                    }
                    report.verdicts.push_back({a.name, l.label, a.applicable, a.passed, detail});
                }
            }
            if (cfg.model == ModelKind::exchange_unitary && is_pure(rho0)) {
                report.verdicts.push_back(schmidt_verdict(report.ledgers[0], report.ledgers[1]));
            }
        }
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.write_files && report.error.empty()) {
        try {
            write_outputs(cfg, opts, report);
        } catch (const std::exception& e) {
            report.error = e.what();
        }
    }
    return report;
}

std::vector<RunReport> run_batch(const std::vector<ScenarioConfig>& cfgs, const RunOptions& opts) {
    std::vector<std::future<RunReport>> futures;
    futures.reserve(cfgs.size());
    for (const auto& c : cfgs) {
        futures.push_back(std::async(std::launch::async, [&c, &opts] { return run_scenario(c, opts); }));
    }
    std::vector<RunReport> out;
    out.reserve(cfgs.size());
    for (auto& f : futures) {
        out.push_back(f.get());
    }
    return out;
}

} // namespace qbt::scenario
