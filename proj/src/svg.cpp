#include "rindler/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <locale>
#include <sstream>

#include "rindler/output.hpp"

namespace rindler::svg {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 48.0;
constexpr double kTitleHeight = 30.0;

std::string px(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(2) << (v == 0.0 ? 0.0 : v);
    return os.str();
}

std::string tick_label(double v, double step)
{
    // Snap to the tick step so that 0.30000000000000004 prints as 0.3.
    const double snapped = std::round(v / step) * step;
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << (std::abs(snapped) < 1e-12 * std::abs(step) ? 0.0 : snapped);
    return os.str();
}

struct Bounds
{
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -std::numeric_limits<double>::infinity();
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
};

Bounds data_bounds(const Panel& panel)
{
    Bounds b;
    for (const auto& s : panel.series)
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            b.x_lo = std::min(b.x_lo, s.x[i]);
            b.x_hi = std::max(b.x_hi, s.x[i]);
            b.y_lo = std::min(b.y_lo, s.y[i]);
            b.y_hi = std::max(b.y_hi, s.y[i]);
        }
    if (!std::isfinite(b.x_lo)) b = {0.0, 1.0, 0.0, 1.0};
    if (b.x_hi == b.x_lo) {
        b.x_lo -= 0.5;
        b.x_hi += 0.5;
    }
    if (b.y_hi == b.y_lo) {
        b.y_lo -= 0.5;
        b.y_hi += 0.5;
    }
    const double pad_x = 0.04 * (b.x_hi - b.x_lo);
    const double pad_y = 0.06 * (b.y_hi - b.y_lo);
    return {b.x_lo - pad_x, b.x_hi + pad_x, b.y_lo - pad_y, b.y_hi + pad_y};
}

void render_panel(std::ostringstream& out, const Panel& panel, double left, double top, double width, double height)
{
    const double ax = left + kMarginLeft;
    const double ay = top + kMarginTop;
    const double aw = width - kMarginLeft - kMarginRight;
    const double ah = height - kMarginTop - kMarginBottom;
    const Bounds b = data_bounds(panel);
    auto map_x = [&](double x) { return ax + (x - b.x_lo) / (b.x_hi - b.x_lo) * aw; };
    auto map_y = [&](double y) { return ay + (1.0 - (y - b.y_lo) / (b.y_hi - b.y_lo)) * ah; };

    out << "  <g class=\"panel\">\n";
    out << "    <text x=\"" << px(ax + aw / 2) << "\" y=\"" << px(top + 20) << "\" text-anchor=\"middle\" "
        << "font-size=\"14\">" << xml_escape(panel.title) << "</text>\n";
    out << "    <rect x=\"" << px(ax) << "\" y=\"" << px(ay) << "\" width=\"" << px(aw) << "\" height=\"" << px(ah)
        << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";

    const auto xt = nice_ticks(b.x_lo, b.x_hi);
    const auto yt = nice_ticks(b.y_lo, b.y_hi);
    const double x_step = xt.size() > 1 ? xt[1] - xt[0] : 1.0;
    const double y_step = yt.size() > 1 ? yt[1] - yt[0] : 1.0;
    out << "    <g font-size=\"11\" stroke=\"#000\">\n";
    for (double t : xt) {
        const double sx = map_x(t);
        out << "      <line x1=\"" << px(sx) << "\" y1=\"" << px(ay + ah) << "\" x2=\"" << px(sx) << "\" y2=\""
            << px(ay + ah + 5) << "\"/>\n";
        out << "      <text x=\"" << px(sx) << "\" y=\"" << px(ay + ah + 18) << "\" text-anchor=\"middle\" stroke=\"none\">"
            << tick_label(t, x_step) << "</text>\n";
    }
    for (double t : yt) {
        const double sy = map_y(t);
        out << "      <line x1=\"" << px(ax - 5) << "\" y1=\"" << px(sy) << "\" x2=\"" << px(ax) << "\" y2=\"" << px(sy)
            << "\"/>\n";
        out << "      <text x=\"" << px(ax - 8) << "\" y=\"" << px(sy + 4) << "\" text-anchor=\"end\" stroke=\"none\">"
            << tick_label(t, y_step) << "</text>\n";
    }
    out << "    </g>\n";
    out << "    <text x=\"" << px(ax + aw / 2) << "\" y=\"" << px(ay + ah + 38) << "\" text-anchor=\"middle\" "
        << "font-size=\"12\">" << xml_escape(panel.x_label) << "</text>\n";
    out << "    <text x=\"" << px(left + 16) << "\" y=\"" << px(ay + ah / 2) << "\" text-anchor=\"middle\" "
        << "font-size=\"12\" transform=\"rotate(-90 " << px(left + 16) << " " << px(ay + ah / 2) << ")\">"
        << xml_escape(panel.y_label) << "</text>\n";

    for (std::size_t k = 0; k < panel.series.size(); ++k) {
        const auto& s = panel.series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        const std::size_t n = std::min(s.x.size(), s.y.size());
        if (s.style == Style::line) {
            out << "    <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < n; ++i) {
                if (i) out << ' ';
                out << px(map_x(s.x[i])) << ',' << px(map_y(s.y[i]));
            }
            out << "\"/>\n";
        } else {
            out << "    <g fill=\"" << color << "\">\n";
            for (std::size_t i = 0; i < n; ++i)
                out << "      <circle cx=\"" << px(map_x(s.x[i])) << "\" cy=\"" << px(map_y(s.y[i]))
                    << "\" r=\"3\"/>\n";
            out << "    </g>\n";
        }
        // legend entry, top-right corner of the axes
        const double ly = ay + 14 + 16 * static_cast<double>(k);
        out << "    <rect x=\"" << px(ax + aw - 120) << "\" y=\"" << px(ly - 8) << "\" width=\"10\" height=\"10\" fill=\""
            << color << "\"/>\n";
        out << "    <text x=\"" << px(ax + aw - 105) << "\" y=\"" << px(ly + 1) << "\" font-size=\"11\">"
            << xml_escape(s.label) << "</text>\n";
    }
    out << "  </g>\n";
}

}  // namespace

std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target)
{
    if (!(hi > lo) || target < 1) return {lo};
    const double raw = (hi - lo) / target;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    double step = magnitude;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * magnitude >= raw) {
            step = m * magnitude;
            break;
        }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
    return ticks;
}

std::string render(const Figure& figure)
{
    const int columns = std::max(1, figure.columns);
    const int rows = static_cast<int>((figure.panels.size() + columns - 1) / columns);
    const double width = columns * figure.panel_width;
    const double height = kTitleHeight + std::max(1, rows) * figure.panel_height;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(width) << "\" height=\""
        << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\" font-family=\"sans-serif\">\n";
    if (!figure.comment.empty()) {
        std::string c = figure.comment;
        // "--" is not allowed inside XML comments.
        for (std::size_t p = c.find("--"); p != std::string::npos; p = c.find("--", p)) c.replace(p, 2, "- -");
        out << "<!--\n" << c << "\n-->\n";
    }
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    out << "  <text x=\"" << px(width / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"16\">"
        << xml_escape(figure.title) << "</text>\n";
    for (std::size_t i = 0; i < figure.panels.size(); ++i) {
        const double left = static_cast<double>(static_cast<int>(i) % columns) * figure.panel_width;
        const double top = kTitleHeight + static_cast<double>(static_cast<int>(i) / columns) * figure.panel_height;
        render_panel(out, figure.panels[i], left, top, figure.panel_width, figure.panel_height);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace rindler::svg
