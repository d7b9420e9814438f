// csv.cpp — ledger columns and CSV serialization

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include "qbt/output.hpp"

namespace qbt::output {

namespace {

using Getter = std::function<MarkedValue(const ThermoLedger&, std::size_t)>;

MarkedValue fin(double x) { return MarkedValue::finite(x); }

const std::map<std::string, Getter>& getters() {
    static const std::map<std::string, Getter> g{
        {"t", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].t); }},
        {"bx", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].bloch.x()); }},
        {"by", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].bloch.y()); }},
        {"bz", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].bloch.z()); }},
        {"Bmod", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].modulus); }},
        {"theta", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].theta; }},
        {"E", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].energy); }},
        {"S", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].entropy); }},
        {"q1_rate", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].q1_rate); }},
        {"w1_rate", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].w1_rate); }},
        {"q2_rate", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].q2_rate); }},
        {"w2_rate", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].w2_rate); }},
        {"wprime_rate", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].wprime_rate); }},
        {"Q1", [](const ThermoLedger& l, std::size_t k) { return fin(l.Q1[k]); }},
        {"W1", [](const ThermoLedger& l, std::size_t k) { return fin(l.W1[k]); }},
        {"Q2", [](const ThermoLedger& l, std::size_t k) { return fin(l.Q2[k]); }},
        {"W2", [](const ThermoLedger& l, std::size_t k) { return fin(l.W2[k]); }},
        {"T1", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].temp1; }},
        {"T2", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].temp2; }},
        {"C1", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].cap1; }},
        {"C2", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].cap2; }},
        {"sgen1_rate", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].sgen1_rate; }},
        {"Sgen1", [](const ThermoLedger& l, std::size_t k) { return fin(l.Sgen1[k]); }},
        {"sgen_ht_rate", [](const ThermoLedger& l, std::size_t k) { return l.samples[k].sgen_ht_rate; }},
        {"coherence", [](const ThermoLedger& l, std::size_t k) { return fin(l.samples[k].coherence); }},
    };
    return g;
}

} // namespace

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{
        "t",  "bx", "by", "bz", "Bmod", "theta", "E",  "S",  "q1_rate",    "w1_rate", "q2_rate",      "w2_rate",  "wprime_rate",
        "Q1", "W1", "Q2", "W2", "T1",   "T2",    "C1", "C2", "sgen1_rate", "Sgen1",   "sgen_ht_rate", "coherence",
    };
    return cols;
}

std::vector<MarkedValue> ledger_column(const ThermoLedger& ledger, const std::string& column) {
    const auto it = getters().find(column);
    if (it == getters().end()) {
        throw std::invalid_argument("unknown ledger column '" + column + "'");
    }
    std::vector<MarkedValue> out;
    out.reserve(ledger.samples.size());
    for (std::size_t k = 0; k < ledger.samples.size(); ++k) {
        out.push_back(it->second(ledger, k));
    }
    return out;
}

std::string format_value(const MarkedValue& v) {
    switch (v.kind()) {
        case MarkedValue::Kind::undefined: return "undef";
        case MarkedValue::Kind::infinite: return v.value() < 0.0 ? "-inf" : "inf";
        case MarkedValue::Kind::finite: break;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v.value() == 0.0 ? 0.0 : v.value());
    return buf;
}

std::string format_csv(const ThermoLedger& ledger) {
    const auto& cols = csv_columns();
    std::vector<Getter> row_getters;
    row_getters.reserve(cols.size());
    for (const auto& c : cols) {
        row_getters.push_back(getters().at(c));
    }
    std::string out;
    out.reserve((ledger.samples.size() + 1) * cols.size() * 22);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out += (c ? "," : "") + cols[c];
    }
    out += '\n';
    for (std::size_t k = 0; k < ledger.samples.size(); ++k) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) out += ',';
            out += format_value(row_getters[c](ledger, k));
        }
        out += '\n';
    }
    return out;
}

void write_csv(const ThermoLedger& ledger, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write CSV file '" + path.string() + "'");
    }
    out << format_csv(ledger);
    if (!out) {
        throw std::runtime_error("error while writing CSV file '" + path.string() + "'");
    }
}

} // namespace qbt::output
