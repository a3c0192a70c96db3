#pragma once

#include <span>
#include <string>
#include <vector>

#include "rindler/analytic.hpp"
#include "rindler/grid.hpp"
#include "rindler/numeric.hpp"
#include "rindler/reduction.hpp"

namespace rindler {

inline constexpr const char* kSolverVersion = "sturm-bisection/inverse-iteration 1.0; richardson h,h/2,h/4";

/// Default spectrum comparison tolerance on rel_diff.
inline constexpr double kSpectrumTolerance = 1e-4;

struct SpectrumRow
{
    int n = 0;
    double eps_analytic = 0.0;  // |eps| from the closed form
    double eps_numeric = 0.0;   // signed root of the extrapolated eigenvalue
    double abs_diff = 0.0;
    double rel_diff = 0.0;      // abs_diff / max(|eps_analytic|, sqrt(a m))
    int nodes = 0;              // node count of the grid eigenvector
    double lambda_grid = 0.0;   // eigenvalue on the requested grid
    double lambda_extrapolated = 0.0;
    double error_bar = 0.0;
};

/// Closed-form levels of the truncated problem paired with the numeric oracle.
struct SpectrumReport
{
    RindlerFrame frame;
    Sector sector;
    PotentialKind kind = PotentialKind::harmonic_truncation;
    Grid grid;
    double tolerance;
    std::string solver = kSolverVersion;
    std::vector<SpectrumRow> rows;
    bool passed = true;
    std::vector<std::string> failures;

    double max_rel_diff() const;
};

/// Pairs eps(n, s) with finite-difference eigenvalues of the truncated potential.
/// eps_numeric comes from Richardson extrapolation over grid, grid/2, grid/4 so
/// that the zero mode (whose eps is the square root of a discretization error)
/// is resolved; the grid eigenvalue itself is kept in lambda_grid.
/// Throws std::invalid_argument for n_max outside [0, 6]; std::runtime_error if
/// the solver returns fewer levels than requested.
SpectrumReport compare_spectra(const RindlerFrame& frame, Sector sector, int n_max, const Grid& grid,
                               double tolerance = kSpectrumTolerance);

/// compare_spectra for every (frame, sector) cell with cells solved concurrently;
/// grids[i] belongs to frames[i]. Results are frame-major in the order given.
std::vector<SpectrumReport> compare_spectra_sweep(std::span<const RindlerFrame> frames,
                                                  std::span<const Sector> sectors, int n_max,
                                                  std::span<const Grid> grids, double tolerance = kSpectrumTolerance);

struct TruncationRow
{
    int level = 0;
    double lambda_truncated = 0.0;
    double lambda_exact = 0.0;
    double gap = 0.0;  // |lambda_exact - lambda_truncated|
    double exact_shifted = 0.0;
    double relative_drift = 0.0;
    bool box_artifact = false;
};

struct TruncationReport
{
    RindlerFrame frame;
    Sector sector;
    Grid grid;
    double drift_threshold;
    double wall_ratio;
    std::vector<TruncationRow> rows;
};

/// Box eigenvalues of the exact and truncated potentials on one grid, with the
/// exact levels' wall-position sensitivity attached.
TruncationReport truncation_error_report(const RindlerFrame& frame, Sector sector, const Grid& grid,
                                         std::size_t k);

/// Window centred on x = 0 where |a_max x| <= 1/2, the neighbourhood in which
/// z(x) is expanded.
Grid expansion_window(double a_max, std::size_t interior_points = 2000);

struct TruncationSweep
{
    std::vector<double> accelerations;  // decreasing
    std::vector<TruncationReport> reports;
    /// monotone[level]: the gap shrinks at every step of the sweep.
    std::vector<bool> monotone;

    bool all_monotone() const;
};

/// Orders reports by decreasing acceleration and sets the monotonicity flags.
/// Throws std::invalid_argument if a report has fewer than k rows.
TruncationSweep assemble_sweep(std::vector<TruncationReport> reports, std::size_t k);

/// Truncation reports over a sweep of accelerations on one shared grid.
TruncationSweep truncation_sweep(std::vector<double> accelerations, double mass, Sector sector,
                                 const Grid& grid, std::size_t k);

struct WavefunctionLevel
{
    int n = 0;
    double energy = 0.0;
    std::vector<double> lower;  // g
    std::vector<double> upper;  // f
    double lower_norm_constant = 0.0;
    double upper_norm_constant = 0.0;
    double norm = 0.0;
    int nodes = 0;
    double peak = 0.0;
    /// Outermost x on either side where |g| still exceeds 1e-6 of its peak.
    double decay_left_x = 0.0;
    double decay_right_x = 0.0;
    double decay_left_y = 0.0;
    double decay_right_y = 0.0;
    bool has_decay_markers = false;
};

struct WavefunctionDataset
{
    RindlerFrame frame;
    Grid grid;
    std::vector<double> x;
    std::vector<double> xi;
    std::vector<double> y;
    std::vector<WavefunctionLevel> levels;
};

/// Analytic spinors for the listed levels sampled on the grid.
WavefunctionDataset wavefunction_dataset(const RindlerFrame& frame, const Grid& grid, std::span<const int> levels);

struct Fig1Point
{
    double acceleration;
    double mass;
    int n;
    Sector sector;
    double energy;
};

struct FigureData
{
    std::vector<Fig1Point> spectrum;           // both sectors, +-eps
    std::vector<WavefunctionDataset> lower_components;  // n = 0..3 per frame
};

FigureData figure_datasets(std::span<const RindlerFrame> frames, int n_max);

/// Multiset of energies equals its negation, compared exactly.
bool is_sign_symmetric(std::span<const double> energies);

/// max_n | |eps|(n+1, lower) - |eps|(n, upper) | over n = 0..n_max, closed form.
double susy_closed_form_gap(const RindlerFrame& frame, int n_max);

}  // namespace rindler
