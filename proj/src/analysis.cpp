#include "rindler/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include "rindler/geometry.hpp"

namespace rindler {

double SpectrumReport::max_rel_diff() const
{
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.rel_diff);
    return worst;
}

SpectrumReport compare_spectra(const RindlerFrame& frame, Sector sector, int n_max, const Grid& grid,
                               double tolerance)
{
    if (n_max < 0 || n_max > 6) throw std::invalid_argument("compare_spectra supports n_max in [0, 6]");
    const auto k = static_cast<std::size_t>(n_max + 1);
    const auto potential = effective_potential(build_mass_function(frame, PotentialKind::harmonic_truncation), sector);
    const PotentialFn fn = [potential](double x) { return potential(x); };

    const auto grid_levels = eigen_lowest_k(discretize(fn, grid), k);
    const auto grids = refinement_sequence(grid, 3);
    std::vector<double> hints;
    for (const auto& level : grid_levels) hints.push_back(level.eigenvalue);
    const auto study = convergence_study(fn, k, grids, hints);
    if (grid_levels.size() < k || study.size() < k)
        throw std::runtime_error("numeric solver returned fewer levels than requested");

    SpectrumReport report{frame, sector, PotentialKind::harmonic_truncation, grid, tolerance, kSolverVersion, {}, true, {}};
    const double floor = std::sqrt(frame.acceleration() * frame.mass());
    for (int n = 0; n <= n_max; ++n) {
        const auto& level = grid_levels[static_cast<std::size_t>(n)];
        const auto& conv = study[static_cast<std::size_t>(n)];
        SpectrumRow row;
        row.n = n;
        row.eps_analytic = energy(n, sector, frame).magnitude;
        row.lambda_grid = level.eigenvalue;
        row.lambda_extrapolated = conv.extrapolated;
        row.error_bar = conv.error_bar;
        row.eps_numeric = std::copysign(std::sqrt(std::abs(conv.extrapolated)), conv.extrapolated);
        row.abs_diff = std::abs(row.eps_analytic - row.eps_numeric);
        row.rel_diff = row.abs_diff / std::max(row.eps_analytic, floor);
        row.nodes = level.nodes;
        if (!(row.rel_diff <= tolerance)) {
            std::ostringstream msg;
            msg << "n=" << n << " rel_diff " << row.rel_diff << " exceeds " << tolerance;
            report.failures.push_back(msg.str());
        }
        if (row.nodes != n) {
            std::ostringstream msg;
            msg << "n=" << n << " eigenvector has " << row.nodes << " nodes";
            report.failures.push_back(msg.str());
        }
        report.rows.push_back(row);
    }
    report.passed = report.failures.empty();
    return report;
}

std::vector<SpectrumReport> compare_spectra_sweep(std::span<const RindlerFrame> frames,
                                                  std::span<const Sector> sectors, int n_max,
                                                  std::span<const Grid> grids, double tolerance)
{
    if (frames.size() != grids.size()) throw std::invalid_argument("one grid per frame is required");
    std::vector<std::future<SpectrumReport>> cells;
    for (std::size_t i = 0; i < frames.size(); ++i)
        for (Sector s : sectors)
            cells.push_back(std::async(std::launch::async, [&, i, s] {
                return compare_spectra(frames[i], s, n_max, grids[i], tolerance);
            }));
    std::vector<SpectrumReport> reports;
    reports.reserve(cells.size());
    for (auto& c : cells) reports.push_back(c.get());
    return reports;
}

TruncationReport truncation_error_report(const RindlerFrame& frame, Sector sector, const Grid& grid, std::size_t k)
{
    const auto truncated = effective_potential(build_mass_function(frame, PotentialKind::harmonic_truncation), sector);
    const auto trunc_levels = eigen_lowest_k(discretize(truncated, grid), k);
    const auto exact = solve_exact_rindler(frame, sector, grid, k);

    TruncationReport report{frame, sector, grid, exact.drift_threshold, exact.wall_ratio, {}};
    for (std::size_t j = 0; j < k; ++j) {
        TruncationRow row;
        row.level = static_cast<int>(j);
        row.lambda_truncated = trunc_levels[j].eigenvalue;
        row.lambda_exact = exact.levels[j].solution.eigenvalue;
        row.gap = std::abs(row.lambda_exact - row.lambda_truncated);
        row.exact_shifted = exact.levels[j].shifted_eigenvalue;
        row.relative_drift = exact.levels[j].relative_drift;
        row.box_artifact = exact.levels[j].box_artifact;
        report.rows.push_back(row);
    }
    return report;
}

Grid expansion_window(double a_max, std::size_t interior_points)
{
    if (!(a_max > 0.0)) throw std::invalid_argument("expansion window needs a positive acceleration");
    const double half = 0.5 / a_max;
    return Grid(-half, half, interior_points);
}

bool TruncationSweep::all_monotone() const
{
    return std::all_of(monotone.begin(), monotone.end(), [](bool b) { return b; });
}

TruncationSweep assemble_sweep(std::vector<TruncationReport> reports, std::size_t k)
{
    std::stable_sort(reports.begin(), reports.end(), [](const TruncationReport& x, const TruncationReport& y) {
        return x.frame.acceleration() > y.frame.acceleration();
    });
    TruncationSweep sweep;
    for (const auto& r : reports) {
        if (r.rows.size() < k) throw std::invalid_argument("truncation report has fewer levels than the sweep");
        sweep.accelerations.push_back(r.frame.acceleration());
    }
    sweep.reports = std::move(reports);
    sweep.monotone.assign(k, true);
    for (std::size_t i = 1; i < sweep.reports.size(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!(sweep.reports[i].rows[j].gap < sweep.reports[i - 1].rows[j].gap)) sweep.monotone[j] = false;
    return sweep;
}

TruncationSweep truncation_sweep(std::vector<double> accelerations, double mass, Sector sector, const Grid& grid,
                                 std::size_t k)
{
    std::vector<TruncationReport> reports;
    for (double a : accelerations) reports.push_back(truncation_error_report(RindlerFrame(a, mass), sector, grid, k));
    return assemble_sweep(std::move(reports), k);
}

WavefunctionDataset wavefunction_dataset(const RindlerFrame& frame, const Grid& grid, std::span<const int> levels)
{
    WavefunctionDataset data{frame, grid, grid.nodes(), {}, {}, {}};
    const OscillatorForm osc(frame, Sector::lower);
    data.xi.resize(data.x.size());
    data.y.resize(data.x.size());
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        data.xi[i] = conformal_to_proper(data.x[i], frame);
        data.y[i] = osc.to_y(data.x[i]);
    }

    for (int n : levels) {
        const auto s = spinor(n, frame, grid);
        WavefunctionLevel level;
        level.n = n;
        level.energy = s.energy;
        level.lower = s.lower;
        level.upper = s.upper;
        level.lower_norm_constant = s.lower_norm_constant;
        level.upper_norm_constant = s.upper_norm_constant;
        std::vector<double> density(s.x.size());
        for (std::size_t i = 0; i < density.size(); ++i)
            density[i] = s.lower[i] * s.lower[i] + s.upper[i] * s.upper[i];
        level.norm = trapezoid(density, grid.spacing());
        level.nodes = count_sign_changes(s.lower);
        for (double g : s.lower) level.peak = std::max(level.peak, std::abs(g));

        const double threshold = 1e-6 * level.peak;
        std::size_t first = s.lower.size(), last = 0;
        for (std::size_t i = 0; i < s.lower.size(); ++i)
            if (std::abs(s.lower[i]) > threshold) {
                first = std::min(first, i);
                last = i;
            }
        if (first < s.lower.size()) {
            level.has_decay_markers = true;
            level.decay_left_x = data.x[first];
            level.decay_right_x = data.x[last];
            level.decay_left_y = data.y[first];
            level.decay_right_y = data.y[last];
        }
        data.levels.push_back(std::move(level));
    }
    return data;
}

FigureData figure_datasets(std::span<const RindlerFrame> frames, int n_max)
{
    if (frames.empty()) throw std::invalid_argument("figure datasets need at least one frame");
    FigureData out;
    for (Sector sector : {Sector::lower, Sector::upper})
        for (const auto& level : spectrum_table(frames, n_max, sector))
            out.spectrum.push_back({level.acceleration, level.mass, level.n, level.sector, level.energy});

    constexpr int kPanels[] = {0, 1, 2, 3};
    for (const auto& frame : frames)
        out.lower_components.push_back(wavefunction_dataset(frame, Grid::oscillator_box(frame), kPanels));
    return out;
}

bool is_sign_symmetric(std::span<const double> energies)
{
    std::vector<double> values(energies.begin(), energies.end());
    std::vector<double> negated(values.size());
    std::transform(values.begin(), values.end(), negated.begin(), [](double e) { return e == 0.0 ? 0.0 : -e; });
    std::sort(values.begin(), values.end());
    std::sort(negated.begin(), negated.end());
    return values == negated;
}

double susy_closed_form_gap(const RindlerFrame& frame, int n_max)
{
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double lower = energy(n + 1, Sector::lower, frame).magnitude;
        const double upper = energy(n, Sector::upper, frame).magnitude;
        worst = std::max(worst, std::abs(lower - upper));
    }
    return worst;
}

}  // namespace rindler
