#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rindler/analysis.hpp"

using namespace rindler;

TEST_CASE("compare_spectra at a = 0.01, lower sector")
{
    const RindlerFrame f(0.01, 1.0);
    const auto report = compare_spectra(f, Sector::lower, 3, Grid::oscillator_box(f));
    CHECK(report.passed);
    CHECK(report.failures.empty());
    REQUIRE(report.rows.size() == 4);
    const double expected[] = {0.0, 0.1, 0.141421356237, 0.173205080757};
    for (int n = 0; n < 4; ++n) {
        const auto& row = report.rows[static_cast<std::size_t>(n)];
        CHECK(row.n == n);
        CHECK(row.nodes == n);
        CHECK(row.eps_analytic == doctest::Approx(expected[n]).epsilon(1e-11));
        CHECK(row.rel_diff <= 1e-4);
        CHECK(row.rel_diff == doctest::Approx(row.abs_diff / std::max(row.eps_analytic, 0.1)));
        CHECK(std::abs(row.lambda_extrapolated - row.eps_analytic * row.eps_analytic) <= row.error_bar + 1e-9);
    }
    CHECK(report.max_rel_diff() <= 1e-4);
    CHECK(report.kind == PotentialKind::harmonic_truncation);
    CHECK(report.solver == kSolverVersion);
}

TEST_CASE("compare_spectra scaling and cross-sector rows")
{
    const RindlerFrame slow(0.01, 1.0), fast(0.03, 1.0);
    const auto a = compare_spectra(slow, Sector::upper, 4, Grid::oscillator_box(slow));
    const auto b = compare_spectra(fast, Sector::upper, 4, Grid::oscillator_box(fast));
    const auto lower = compare_spectra(slow, Sector::lower, 5, Grid::oscillator_box(slow));
    for (std::size_t n = 0; n < a.rows.size(); ++n) {
        CHECK(b.rows[n].eps_analytic / a.rows[n].eps_analytic == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
        CHECK(a.rows[n].eps_analytic == lower.rows[n + 1].eps_analytic);
        CHECK(std::abs(a.rows[n].eps_numeric - lower.rows[n + 1].eps_numeric) <= 2e-4 * a.rows[n].eps_analytic);
    }
}

TEST_CASE("reports never pass silently")
{
    const RindlerFrame f(0.02, 1.0);
    const auto strict = compare_spectra(f, Sector::upper, 2, Grid::oscillator_box(f, 10.0, 400), 1e-12);
    CHECK_FALSE(strict.passed);
    CHECK_FALSE(strict.failures.empty());
    CHECK_THROWS_AS(compare_spectra(f, Sector::upper, 7, Grid::oscillator_box(f)), std::invalid_argument);
    CHECK_THROWS_AS(compare_spectra(f, Sector::upper, -1, Grid::oscillator_box(f)), std::invalid_argument);
}

TEST_CASE("sweep keeps frame-major order")
{
    const std::vector<RindlerFrame> frames{RindlerFrame(0.02, 1.0), RindlerFrame(0.01, 1.0)};
    const std::vector<Sector> sectors{Sector::upper, Sector::lower};
    std::vector<Grid> grids;
    for (const auto& f : frames) grids.push_back(Grid::oscillator_box(f, 10.0, 1000));
    const auto reports = compare_spectra_sweep(frames, sectors, 2, grids);
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].frame == frames[0]);
    CHECK(reports[0].sector == Sector::upper);
    CHECK(reports[1].sector == Sector::lower);
    CHECK(reports[3].frame == frames[1]);
    const auto serial = compare_spectra(frames[1], Sector::lower, 2, grids[1]);
    for (std::size_t n = 0; n < 3; ++n) CHECK(reports[3].rows[n].eps_numeric == serial.rows[n].eps_numeric);
    CHECK_THROWS_AS(compare_spectra_sweep(frames, sectors, 2, std::span(grids).first(1)), std::invalid_argument);
}

TEST_CASE("truncation report")
{
    const RindlerFrame f(0.01, 1.0);
    const Grid window = expansion_window(0.01);
    CHECK(window.x_min() == -50.0);
    CHECK(window.x_max() == 50.0);
    CHECK_THROWS_AS(expansion_window(0.0), std::invalid_argument);

    const auto report = truncation_error_report(f, Sector::upper, window, 3);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
        CHECK(row.gap == std::abs(row.lambda_exact - row.lambda_truncated));
        CHECK(std::isfinite(row.relative_drift));
        CHECK(row.box_artifact == (row.relative_drift > report.drift_threshold));
    }
    CHECK(report.grid == window);
}

TEST_CASE("truncation gap shrinks as the acceleration decreases")
{
    const Grid window = expansion_window(0.01, 800);
    for (Sector s : {Sector::upper, Sector::lower}) {
        const auto sweep = truncation_sweep({0.002, 0.01, 0.005, 0.001}, 1.0, s, window, 3);
        CHECK(sweep.accelerations == std::vector<double>{0.01, 0.005, 0.002, 0.001});
        CHECK(sweep.all_monotone());
    }

    // a sweep that grows instead of shrinking is flagged
    auto grow = truncation_sweep({0.01, 0.005}, 1.0, Sector::upper, window, 2);
    std::swap(grow.reports[0].rows, grow.reports[1].rows);
    const auto flagged = assemble_sweep(grow.reports, 2);
    CHECK_FALSE(flagged.all_monotone());
    CHECK_THROWS_AS(assemble_sweep(grow.reports, 5), std::invalid_argument);
}

TEST_CASE("wavefunction datasets")
{
    const RindlerFrame f(0.02, 1.0);
    const std::vector<int> levels{0, 1, 2, 3};
    const auto data = wavefunction_dataset(f, Grid::oscillator_box(f), levels);
    REQUIRE(data.levels.size() == 4);
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        CHECK(data.xi[i] > f.horizon());
        CHECK(std::isfinite(data.y[i]));
    }
    for (const auto& level : data.levels) {
        CHECK(std::abs(level.norm - 1.0) <= 1e-8);
        CHECK(level.nodes == level.n);
        CHECK(level.has_decay_markers);
        CHECK(level.decay_left_y < 0.0);
        CHECK(level.decay_right_y > 0.0);
        CHECK(level.decay_right_y == doctest::Approx(-level.decay_left_y).epsilon(1e-3));
        for (double g : level.lower) CHECK(std::isfinite(g));
    }
    CHECK(data.levels[0].energy == 0.0);
    CHECK(data.levels[2].energy == doctest::Approx(0.2));
}

TEST_CASE("figure datasets")
{
    const std::vector<RindlerFrame> frames{RindlerFrame(0.01, 1.0), RindlerFrame(0.02, 1.0), RindlerFrame(0.03, 1.0)};
    const auto fig = figure_datasets(frames, 5);
    CHECK(fig.spectrum.size() == 3 * 6 * 2 * 2);
    std::vector<double> energies;
    for (const auto& p : fig.spectrum) {
        energies.push_back(p.energy);
        CHECK(p.mass == 1.0);
    }
    CHECK(is_sign_symmetric(energies));
    REQUIRE(fig.lower_components.size() == 3);
    for (const auto& data : fig.lower_components) {
        CHECK(data.levels[0].nodes == 0);
        CHECK(data.levels[3].nodes == 3);
        // single peak: the ground state rises then falls
        const auto& g = data.levels[0].lower;
        const auto peak = std::max_element(g.begin(), g.end());
        CHECK(std::is_sorted(g.begin(), peak + 1));
        CHECK(std::is_sorted(peak, g.end(), std::greater<>()));
    }
    CHECK_THROWS_AS(figure_datasets(std::span<const RindlerFrame>{}, 3), std::invalid_argument);
}

TEST_CASE("sign symmetry helper")
{
    CHECK(is_sign_symmetric(std::vector<double>{-0.1, 0.0, 0.1, 0.0}));
    CHECK(is_sign_symmetric(std::vector<double>{}));
    CHECK_FALSE(is_sign_symmetric(std::vector<double>{-0.1, 0.1, 0.2}));
    CHECK_FALSE(is_sign_symmetric(std::vector<double>{-0.1, 0.1000000000000001}));
    CHECK(susy_closed_form_gap(RindlerFrame(0.03, 1.0), 5) == 0.0);
}
