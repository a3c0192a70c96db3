#pragma once

#include <string>
#include <vector>

namespace rindler::svg {

enum class Style { line, markers };

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    Style style = Style::line;
};

struct Panel
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// A grid of panels rendered into one SVG 1.1 document.
struct Figure
{
    std::string title;
    int columns = 1;
    double panel_width = 480.0;
    double panel_height = 340.0;
    /// Emitted as an XML comment after the root element (run metadata).
    std::string comment;
    std::vector<Panel> panels;
};

/// Deterministic rendering: same figure, same bytes.
std::string render(const Figure& figure);

/// Round tick positions covering [lo, hi], roughly `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 5);

std::string xml_escape(const std::string& s);

}  // namespace rindler::svg
