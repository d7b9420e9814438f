// output.hpp — CSV and SVG emission for thermodynamic ledgers

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbt/ledger.hpp"

namespace qbt::output {

/// Stable CSV column contract.
const std::vector<std::string>& csv_columns();

/// One column of a ledger by CSV name; throws std::invalid_argument for unknown names.
std::vector<MarkedValue> ledger_column(const ThermoLedger& ledger, const std::string& column);

/// 17 significant digits; markers as inf, -inf, undef.
std::string format_value(const MarkedValue& v);

std::string format_csv(const ThermoLedger& ledger);
/// Throws std::runtime_error if the file cannot be written.
void write_csv(const ThermoLedger& ledger, const std::filesystem::path& path);

struct Series {
    std::string name;
    /// Missing points break the polyline.
    std::vector<std::optional<std::pair<double, double>>> points;
};

/// Standalone SVG 1.1 line chart with an 800x600 view box and linear axes.
class LineChart {
public:
    LineChart(std::string title, std::string x_label, std::string y_label);

    void add_series(Series s) { series_.push_back(std::move(s)); }
    /// Dashed reference curve drawn beneath the data.
    void add_guide(std::vector<std::pair<double, double>> points) { guides_.push_back(std::move(points)); }
    /// Forces the ranges to include these values.
    void include_x(double x);
    void include_y(double y);
    bool empty() const { return series_.empty(); }

    std::string render() const;

private:
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    std::vector<std::vector<std::pair<double, double>>> guides_;
    std::vector<double> extra_x_, extra_y_;
};

struct SvgResult {
    bool written = false;
    std::vector<std::string> notes;
};

/// Time series of the selected ledger columns. Marker samples are omitted from
/// the polylines; series with fewer than two finite samples are dropped with a
/// note, and no file is written when nothing remains.
SvgResult write_svg(const ThermoLedger& ledger, const std::vector<std::string>& selection,
                    const std::filesystem::path& path, const std::string& title, const std::string& y_label);

/// Meridian-plane projection of one or more Bloch trajectories in the field
/// frame: horizontal axis B sin(theta) (the l1 coherence), vertical B cos(theta).
SvgResult write_bloch_svg(const std::vector<const ThermoLedger*>& ledgers, const std::filesystem::path& path,
                          const std::string& title);

} // namespace qbt::output
