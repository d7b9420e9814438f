// svg.cpp — dependency-free SVG line charts

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qbt/output.hpp"

namespace qbt::output {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        } else if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            const double pad = std::max(0.5, std::abs(hi) * 0.1);
            lo -= pad;
            hi += pad;
        }
    }
};

double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

bool write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

} // namespace

LineChart::LineChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void LineChart::include_x(double x) { extra_x_.push_back(x); }
void LineChart::include_y(double y) { extra_y_.push_back(y); }

std::string LineChart::render() const {
    Range xr, yr;
    for (const auto& s : series_) {
        for (const auto& p : s.points) {
            if (p) {
                xr.add(p->first);
                yr.add(p->second);
            }
        }
    }
    for (const auto& g : guides_) {
        for (const auto& [x, y] : g) {
            xr.add(x);
            yr.add(y);
        }
    }
    for (double x : extra_x_) xr.add(x);
    for (double y : extra_y_) yr.add(y);
    xr.finish();
    yr.finish();

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
       << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
       << xml_escape(title_) << "</text>\n";

    // Grid and tick labels.
    os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    const double xs = nice_step(xr.hi - xr.lo);
    for (double x = std::ceil(xr.lo / xs) * xs; x <= xr.hi + 1e-9 * xs; x += xs) {
        os << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px(x)) << "\" y2=\""
           << num(kTop + ph) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n"
           << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
           << tick_label(x) << "</text>\n";
    }
    const double ys = nice_step(yr.hi - yr.lo);
    for (double y = std::ceil(yr.lo / ys) * ys; y <= yr.hi + 1e-9 * ys; y += ys) {
        os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
           << num(py(y)) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n"
           << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
           << tick_label(y) << "</text>\n";
    }
    os << "</g>\n";
    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 20)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(x_label_) << "</text>\n";
    os << "<text x=\"24\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"14\" transform=\"rotate(-90 24 " << num(kTop + ph / 2) << ")\">" << xml_escape(y_label_)
       << "</text>\n";

    for (const auto& g : guides_) {
        os << "<polyline fill=\"none\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"5,4\" points=\"";
        for (std::size_t i = 0; i < g.size(); ++i) {
            os << (i ? " " : "") << num(px(g[i].first)) << "," << num(py(g[i].second));
        }
        os << "\"/>\n";
    }

    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        // One polyline per run of consecutive present points.
        std::vector<std::pair<double, double>> run;
        auto flush = [&]() {
            if (run.size() >= 2) {
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
                for (std::size_t i = 0; i < run.size(); ++i) {
                    os << (i ? " " : "") << num(px(run[i].first)) << "," << num(py(run[i].second));
                }
                os << "\"/>\n";
            }
            run.clear();
        };
        for (const auto& p : s.points) {
            if (p) {
                run.push_back(*p);
            } else {
                flush();
            }
        }
        flush();

        const double ly = kTop + 18 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << num(kLeft + pw - 150) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(kLeft + pw - 125)
           << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << num(kLeft + pw - 118) << "\" y=\"" << num(ly)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(s.name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

SvgResult write_svg(const ThermoLedger& ledger, const std::vector<std::string>& selection,
                    const std::filesystem::path& path, const std::string& title, const std::string& y_label) {
    SvgResult result;
    if (selection.empty()) {
        result.notes.push_back("no quantities selected for " + path.filename().string() + "; no file written");
        return result;
    }
    const auto times = ledger_column(ledger, "t");
    LineChart chart(title, "gamma0 t", y_label);
    for (const auto& name : selection) {
        const auto values = ledger_column(ledger, name);
        Series s{name, {}};
        std::size_t finite = 0;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (values[k].is_finite()) {
                s.points.emplace_back(std::make_pair(times[k].value(), values[k].value()));
                ++finite;
            } else {
                s.points.emplace_back(std::nullopt);
            }
        }
        if (finite < 2) {
            result.notes.push_back("series '" + name + "' has fewer than two finite samples; omitted from " +
                                   path.filename().string());
            continue;
        }
        chart.add_series(std::move(s));
    }
    if (chart.empty()) {
        result.notes.push_back("nothing to plot for " + path.filename().string() + "; no file written");
        return result;
    }
    if (!write_text_file(path, chart.render())) {
        throw std::runtime_error("cannot write SVG file '" + path.string() + "'");
    }
    result.written = true;
    return result;
}

SvgResult write_bloch_svg(const std::vector<const ThermoLedger*>& ledgers, const std::filesystem::path& path,
                          const std::string& title) {
    SvgResult result;
    LineChart chart(title, "B sin(theta)", "B cos(theta)");
    std::vector<std::pair<double, double>> circle;
    for (int i = 0; i <= 90; ++i) {
        const double a = M_PI * static_cast<double>(i) / 90.0;
        circle.emplace_back(std::sin(a), std::cos(a));
    }
    chart.add_guide(std::move(circle));
    chart.add_guide({{0.0, -1.0}, {0.0, 1.0}});
    for (const ThermoLedger* l : ledgers) {
        Series s{"atom " + l->label, {}};
        if (l->label == "system") s.name = "B";
        for (const auto& sample : l->samples) {
            const double th = sample.theta.is_finite() ? sample.theta.value() : 0.0;
            s.points.emplace_back(std::make_pair(sample.modulus * std::sin(th), sample.modulus * std::cos(th)));
        }
        if (s.points.size() < 2) {
            result.notes.push_back("trajectory '" + l->label + "' has fewer than two samples; omitted");
            continue;
        }
        chart.add_series(std::move(s));
    }
    if (chart.empty()) {
        result.notes.push_back("nothing to plot for " + path.filename().string() + "; no file written");
        return result;
    }
    if (!write_text_file(path, chart.render())) {
        throw std::runtime_error("cannot write SVG file '" + path.string() + "'");
    }
    result.written = true;
    return result;
}

} // namespace qbt::output
