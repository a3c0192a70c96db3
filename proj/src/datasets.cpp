#include "rindler/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rindler/geometry.hpp"
#include "rindler/svg.hpp"

namespace rindler {

using output::format_compact;
using output::format_number;

namespace {

std::vector<std::string> column_list(std::initializer_list<const char*> names)
{
    return {names.begin(), names.end()};
}

std::string sector_label(Sector s)
{
    return "s = " + std::to_string(sign(s));
}

}  // namespace

output::CsvTable spectrum_csv(const SpectrumReport& report, output::Metadata metadata)
{
    metadata.emplace_back("solver", report.solver);
    metadata.emplace_back("status", report.passed ? "pass" : "FAIL");
    for (const auto& f : report.failures) metadata.emplace_back("failure", f);

    output::CsvTable table(std::move(metadata), {std::begin(kSpectrumColumns), std::end(kSpectrumColumns)});
    const double a = report.frame.acceleration();
    const double m = report.frame.mass();
    for (const auto& row : report.rows) {
        table.add_row({std::to_string(row.n), std::to_string(sign(report.sector)), format_number(a), format_number(m),
                       format_number(row.eps_analytic), format_number(-row.eps_analytic),
                       format_number(row.eps_numeric), format_number(row.abs_diff), format_number(row.rel_diff),
                       std::to_string(row.nodes)});
    }
    return table;
}

output::CsvTable wavefunction_csv(const WavefunctionDataset& data, std::size_t level_index, output::Metadata metadata)
{
    const auto& level = data.levels.at(level_index);
    metadata.emplace_back("level", std::to_string(level.n));
    metadata.emplace_back("energy", format_number(level.energy));
    metadata.emplace_back("B1", format_number(level.upper_norm_constant));
    metadata.emplace_back("B2", format_number(level.lower_norm_constant));
    metadata.emplace_back("norm", format_number(level.norm));
    metadata.emplace_back("nodes", std::to_string(level.nodes));
    if (level.has_decay_markers) {
        metadata.emplace_back("decay_x", format_number(level.decay_left_x) + " " + format_number(level.decay_right_x));
        metadata.emplace_back("decay_y", format_number(level.decay_left_y) + " " + format_number(level.decay_right_y));
    }

    output::CsvTable table(std::move(metadata), column_list({"x", "xi", "y", "g", "f"}));
    for (std::size_t i = 0; i < data.x.size(); ++i)
        table.add_row({format_number(data.x[i]), format_number(data.xi[i]), format_number(data.y[i]),
                       format_number(level.lower[i]), format_number(level.upper[i])});
    return table;
}

output::CsvTable truncation_csv(const TruncationReport& report, output::Metadata metadata)
{
    metadata.emplace_back("drift_threshold", format_compact(report.drift_threshold));
    metadata.emplace_back("wall_ratio", format_number(report.wall_ratio));
    output::CsvTable table(std::move(metadata),
                           column_list({"level", "s", "a", "m", "lambda_truncated", "lambda_exact", "gap",
                                        "lambda_exact_shifted", "relative_drift", "box_artifact"}));
    for (const auto& row : report.rows)
        table.add_row({std::to_string(row.level), std::to_string(sign(report.sector)),
                       format_number(report.frame.acceleration()), format_number(report.frame.mass()),
                       format_number(row.lambda_truncated), format_number(row.lambda_exact), format_number(row.gap),
                       format_number(row.exact_shifted), format_number(row.relative_drift),
                       row.box_artifact ? "1" : "0"});
    return table;
}

output::CsvTable truncation_sweep_csv(const TruncationSweep& sweep, output::Metadata metadata)
{
    metadata.emplace_back("all_monotone", sweep.all_monotone() ? "1" : "0");
    output::CsvTable table(std::move(metadata), column_list({"a", "level", "gap", "monotone"}));
    for (const auto& report : sweep.reports)
        for (const auto& row : report.rows)
            table.add_row({format_number(report.frame.acceleration()), std::to_string(row.level),
                           format_number(row.gap),
                           sweep.monotone.at(static_cast<std::size_t>(row.level)) ? "1" : "0"});
    return table;
}

output::CsvTable potential_csv(const RindlerFrame& frame, Sector sector, PotentialKind kind, const Grid& grid,
                               output::Metadata metadata)
{
    const auto z = build_mass_function(frame, kind);
    const auto v = effective_potential(z, sector);
    const OscillatorForm osc(frame, sector);
    output::CsvTable table(std::move(metadata), column_list({"x", "xi", "y", "z", "V"}));
    for (double x : grid.nodes())
        table.add_row({format_number(x), format_number(conformal_to_proper(x, frame)), format_number(osc.to_y(x)),
                       format_number(z(x)), format_number(v(x))});
    return table;
}

std::string metadata_comment(const output::Metadata& metadata)
{
    std::string out;
    for (const auto& [key, value] : metadata) {
        if (!out.empty()) out += '\n';
        out += key + ": " + value;
    }
    return out;
}

std::string spectrum_svg(std::span<const SpectrumReport> reports, const std::string& comment)
{
    svg::Figure fig;
    fig.title = "Energy levels";
    fig.comment = comment;
    std::vector<Sector> sectors;
    for (const auto& r : reports)
        if (std::find(sectors.begin(), sectors.end(), r.sector) == sectors.end()) sectors.push_back(r.sector);
    fig.columns = static_cast<int>(std::max<std::size_t>(1, sectors.size()));
    for (Sector s : sectors) {
        svg::Panel panel{sector_label(s), "n", "eps", {}};
        for (const auto& r : reports) {
            if (r.sector != s) continue;
            svg::Series series{"a = " + format_compact(r.frame.acceleration()), {}, {}, svg::Style::markers};
            for (const auto& row : r.rows) {
                series.x.push_back(row.n);
                series.y.push_back(row.eps_analytic);
                series.x.push_back(row.n);
                series.y.push_back(-row.eps_analytic);
            }
            panel.series.push_back(std::move(series));
        }
        fig.panels.push_back(std::move(panel));
    }
    return svg::render(fig);
}

std::string wavefunction_svg(std::span<const WavefunctionDataset> datasets, const std::string& comment)
{
    if (datasets.empty()) throw std::invalid_argument("wavefunction plot needs at least one dataset");
    svg::Figure fig;
    fig.title = "Lower component g(x)";
    fig.comment = comment;
    fig.columns = 2;
    for (std::size_t k = 0; k < datasets.front().levels.size(); ++k) {
        svg::Panel panel{"n = " + std::to_string(datasets.front().levels[k].n), "x", "g", {}};
        for (const auto& d : datasets)
            panel.series.push_back(
                {"a = " + format_compact(d.frame.acceleration()), d.x, d.levels.at(k).lower, svg::Style::line});
        fig.panels.push_back(std::move(panel));
    }
    return svg::render(fig);
}

std::string truncation_svg(std::span<const TruncationReport> reports, const std::string& comment)
{
    svg::Figure fig;
    fig.title = "Exact minus truncated box eigenvalues";
    fig.comment = comment;
    svg::Panel panel{"", "level", "log10 gap", {}};
    for (const auto& r : reports) {
        svg::Series series{"a = " + format_compact(r.frame.acceleration()) + ", " + sector_label(r.sector), {}, {},
                           svg::Style::markers};
        for (const auto& row : r.rows) {
            if (!(row.gap > 0.0)) continue;
            series.x.push_back(row.level);
            series.y.push_back(std::log10(row.gap));
        }
        panel.series.push_back(std::move(series));
    }
    fig.panels.push_back(std::move(panel));
    return svg::render(fig);
}

std::string potential_svg(std::span<const RindlerFrame> frames, std::span<const Sector> sectors, PotentialKind kind,
                          std::span<const Grid> grids, const std::string& comment)
{
    if (frames.size() != grids.size()) throw std::invalid_argument("one grid per frame is required");
    svg::Figure fig;
    fig.title = std::string("Effective potential (") + std::string(to_string(kind)) + ")";
    fig.comment = comment;
    fig.columns = static_cast<int>(std::min<std::size_t>(2, std::max<std::size_t>(1, frames.size())));
    for (std::size_t i = 0; i < frames.size(); ++i) {
        svg::Panel panel{"a = " + format_compact(frames[i].acceleration()), "x", "V", {}};
        const auto x = grids[i].nodes();
        for (Sector s : sectors) {
            const auto v = effective_potential(build_mass_function(frames[i], kind), s);
            svg::Series series{sector_label(s), x, {}, svg::Style::line};
            for (double xi : x) series.y.push_back(v(xi));
            panel.series.push_back(std::move(series));
        }
        fig.panels.push_back(std::move(panel));
    }
    return svg::render(fig);
}

}  // namespace rindler
