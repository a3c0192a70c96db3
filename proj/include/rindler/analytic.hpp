#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rindler/geometry.hpp"
#include "rindler/grid.hpp"
#include "rindler/reduction.hpp"

namespace rindler {

/// Physicists' Hermite polynomial H_n(y).
///
/// Coefficients are built from H_{n+1} = 2y H_n - 2n H_{n-1} in exact integer
/// arithmetic up to degree 20 and evaluated by Horner's rule there. Higher
/// degrees evaluate through the three-term recurrence directly, since the
/// monomial form loses everything to cancellation.
class HermitePolynomial
{
public:
    static constexpr int kExactDegreeLimit = 20;

    explicit HermitePolynomial(int degree);

    int degree() const noexcept { return degree_; }

    /// Monomial coefficients c_0 .. c_n; exact for degree <= 20.
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    /// Integer coefficients, available for degree <= 20.
    std::optional<std::vector<std::int64_t>> exact_coefficients() const;

    double operator()(double y) const;

private:
    int degree_;
    std::vector<double> coefficients_;
    std::vector<std::int64_t> exact_;
};

HermitePolynomial hermite(int n);

/// H_n(y) by the three-term recurrence, any n >= 0.
double hermite_value(int n, double y);

/// Power-series solution h(y) = sum a_j y^j of h'' - 2y h' + (eta - s - 1) h = 0,
/// i.e. F = e^{-y^2/2} h solves F'' + (eta - y^2 - s) F = 0.
struct SeriesSolution
{
    std::vector<double> coefficients;
    /// Degree at which every seeded parity chain stops, if it does.
    std::optional<int> termination_index;

    bool terminates() const noexcept { return termination_index.has_value(); }
};

/// a_{j+2} = (2j + 1 - (eta - s)) a_j / ((j+2)(j+1)) from seeds (a_0, a_1), j_max >= 2.
/// A chain is declared terminated when its numerator vanishes to within 1e-12 relative.
SeriesSolution series_coefficients(double eta, Sector sector, double a0, double a1, int j_max);

/// One bound level of the truncated problem, eps^2 = a m (n + (1+s)/2).
struct AnalyticLevel
{
    int n = 0;
    Sector sector = Sector::lower;
    double acceleration = 0.0;
    double mass = 0.0;
    double magnitude = 0.0;  // |eps|

    double eps_plus() const noexcept { return magnitude; }
    double eps_minus() const noexcept { return magnitude == 0.0 ? 0.0 : -magnitude; }
    double energy_squared() const noexcept { return magnitude * magnitude; }
    bool is_zero_mode() const noexcept { return magnitude == 0.0; }
};

/// Throws std::invalid_argument for n < 0.
AnalyticLevel energy(int n, Sector sector, const RindlerFrame& frame);

/// Two-component solution of the truncated coupled system for the level whose
/// lower component has Hermite degree n:
///   g = B2 e^{-y^2/2} H_n(y),   f = B1 e^{-y^2/2} H_{n-1}(y)  (f = 0 for n = 0),
/// with f = (g' + z g) / eps and the pair normalized to int (f^2 + g^2) dx = 1.
struct AnalyticSpinor
{
    int n = 0;
    double energy = 0.0;  // signed
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> upper;
    std::vector<double> lower;
    double upper_norm_constant = 0.0;  // B1
    double lower_norm_constant = 0.0;  // B2
    /// Fraction of the analytic norm lying outside the sampled window.
    double tail_fraction = 0.0;

    SpinorPair pair() const { return SpinorPair{x, upper, lower, energy}; }
};

/// Samples the level-n spinor on every node of the grid; energy_sign picks the
/// particle (+1) or antiparticle (-1) branch. Throws std::invalid_argument if the
/// grid does not cover |y| <= 6 or more than 1e-8 of the norm lies outside it.
AnalyticSpinor spinor(int n, const RindlerFrame& frame, const Grid& grid, int energy_sign = +1);

/// One signed entry of a spectrum: frame parameters, level and eps.
struct SignedLevel
{
    double acceleration;
    double mass;
    int n;
    Sector sector;
    double energy;
};

/// All levels +-eps for n = 0..n_max of every frame, sorted by |eps| (stable on
/// frame order, then n, then sign). The zero mode appears twice as +0.
std::vector<SignedLevel> spectrum_table(std::span<const RindlerFrame> frames, int n_max, Sector sector);

/// Interior sign changes of a sampled function, ignoring samples below
/// relative_floor * max|v| so that underflowed tails do not count.
int count_sign_changes(std::span<const double> values, double relative_floor = 1e-9);

}  // namespace rindler
