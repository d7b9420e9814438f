// report.cpp — human-readable run reports and the audit table

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qbt/output.hpp"
#include "qbt/scenario.hpp"

namespace qbt::scenario {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string status(const Verdict& v) {
    if (!v.applicable) return "n/a";
    return v.passed ? "PASS" : "FAIL";
}

} // namespace

std::string format_report(const RunReport& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "\n";
    os << "result:   " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.error.empty()) {
        os << "error:    " << r.error << "\n";
    }
    os << "wall:     " << num(r.wall_seconds) << " s\n";
    for (const auto& s : r.subsystems) {
        os << "\n[" << s.label << "]\n"
           << "  dE = " << num(s.delta_energy) << "\n"
           << "  Q1 = " << num(s.Q1) << "   W1 = " << num(s.W1) << "\n"
           << "  Q2 = " << num(s.Q2) << "   W2 = " << num(s.W2) << "\n"
           << "  final T1 = " << output::format_value(s.final_temp1)
           << "   final T2 = " << output::format_value(s.final_temp2) << "\n";
    }
    if (!r.verdicts.empty()) {
        os << "\naudits:\n";
        for (const auto& v : r.verdicts) {
            os << "  " << status(v) << "  " << v.name << " [" << v.subsystem << "]  " << v.detail << "\n";
        }
    }
    if (!r.notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& n : r.notes) os << "  - " << n << "\n";
    }
    if (!r.files.empty()) {
        os << "\nfiles:\n";
        for (const auto& f : r.files) os << "  " << f.string() << "\n";
    }
    return os.str();
}

std::string audit_report(const std::vector<RunReport>& reports) {
    // Columns: verdict names in order of first appearance, one per subsystem.
    std::vector<std::string> cols;
    auto key = [](const Verdict& v) { return v.name + "[" + v.subsystem + "]"; };
    for (const auto& r : reports) {
        for (const auto& v : r.verdicts) {
            if (std::find(cols.begin(), cols.end(), key(v)) == cols.end()) cols.push_back(key(v));
        }
    }
    std::size_t name_w = 8;
    for (const auto& r : reports) name_w = std::max(name_w, r.scenario.size());

    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    os << pad("scenario", name_w) << "  " << pad("result", 6);
    for (const auto& c : cols) os << "  " << c;
    os << "\n";
    for (const auto& r : reports) {
        os << pad(r.scenario, name_w) << "  " << pad(r.passed() ? "PASS" : "FAIL", 6);
        for (const auto& c : cols) {
            std::string cell = "-";
            for (const auto& v : r.verdicts) {
                if (key(v) == c) cell = status(v);
            }
            os << "  " << pad(cell, c.size());
        }
        os << "\n";
    }
    for (const auto& r : reports) {
        if (!r.error.empty()) {
            os << r.scenario << ": error: " << r.error << "\n";
        }
        for (const auto& v : r.verdicts) {
            if (v.applicable && !v.passed) {
                os << r.scenario << ": FAIL " << key(v) << ": " << v.detail << "\n";
            }
        }
    }
    return os.str();
}

int exit_status(const std::vector<RunReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const RunReport& r) { return r.passed(); }) ? 0 : 1;
}

} // namespace qbt::scenario
