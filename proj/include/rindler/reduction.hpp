#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rindler/geometry.hpp"

namespace rindler {

/// Decoupled second-order sector: F = f for the upper sector (s = +1),
/// F = g for the lower sector (s = -1).
enum class Sector : int { upper = +1, lower = -1 };

constexpr int sign(Sector s) noexcept { return static_cast<int>(s); }

/// Throws std::invalid_argument for anything other than +1 or -1.
Sector sector_from_int(int s);

std::string_view to_string(Sector s);

enum class PotentialKind { exact, harmonic_truncation };

std::string_view to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(std::string_view name);

/// Position-dependent mass z(x) entering the coupled system.
///   exact:               z = m e^{sigma/2} = m e^{a x}
///   harmonic_truncation: z = m (1 + a x / 2)
class MassFunction
{
public:
    MassFunction(const RindlerFrame& frame, PotentialKind kind) : frame_(frame), kind_(kind) {}

    double operator()(double x) const;
    double derivative(double x) const;

    const RindlerFrame& frame() const noexcept { return frame_; }
    PotentialKind kind() const noexcept { return kind_; }

private:
    RindlerFrame frame_;
    PotentialKind kind_;
};

MassFunction build_mass_function(const RindlerFrame& frame, PotentialKind kind);

/// V_s(x) = z(x)^2 + s z'(x), so that F'' + (eps^2 - V_s) F = 0.
class EffectivePotential
{
public:
    EffectivePotential(MassFunction mass, Sector sector) : mass_(mass), sector_(sector) {}

    double operator()(double x) const;

    const MassFunction& mass() const noexcept { return mass_; }
    Sector sector() const noexcept { return sector_; }
    PotentialKind kind() const noexcept { return mass_.kind(); }
    const RindlerFrame& frame() const noexcept { return mass_.frame(); }

private:
    MassFunction mass_;
    Sector sector_;
};

EffectivePotential effective_potential(const MassFunction& mass, Sector sector);
/// Integer-sector overload; rejects values other than +1 and -1.
EffectivePotential effective_potential(const MassFunction& mass, int sector);

/// The shifted-oscillator form of the truncated problem:
///   y = sqrt(am/2) (x + 2/a),  eta = 2 eps^2 / (am),  V_ef(y) = y^2 + s.
class OscillatorForm
{
public:
    OscillatorForm(const RindlerFrame& frame, Sector sector);

    double scale() const noexcept { return scale_; }
    double to_y(double x) const noexcept;
    double to_x(double y) const noexcept;
    double eta(double energy) const noexcept;
    /// Inverse of eta(): eps^2 for a given dimensionless eigenvalue.
    double energy_squared(double eta) const noexcept;
    double potential(double y) const noexcept;

    Sector sector() const noexcept { return sector_; }
    const RindlerFrame& frame() const noexcept { return frame_; }

private:
    RindlerFrame frame_;
    Sector sector_;
    double scale_;
};

OscillatorForm to_oscillator_form(const RindlerFrame& frame, Sector sector);

/// Two real components sampled on a common uniform set of x values.
struct SpinorPair
{
    std::vector<double> x;
    std::vector<double> upper;  // f
    std::vector<double> lower;  // g
    double energy = 0.0;

    /// Throws std::invalid_argument if the three sample vectors disagree in size.
    void check_consistent() const;
    /// sup-norm over both components
    double sup_norm() const;
};

enum class RescaleDirection { forward, inverse };

/// U(x) = e^{sigma(x)/4} = e^{a x / 2} applied componentwise: forward maps the
/// barred pair to (g, f), inverse maps back.
SpinorPair apply_rescaling(const SpinorPair& pair, const ConformalFactor& factor,
                           RescaleDirection direction);
SpinorPair apply_rescaling(const SpinorPair& pair, const RindlerFrame& frame,
                           RescaleDirection direction);

struct FirstOrderResidual
{
    double lower_equation;  // sup |g' + z g - eps f|
    double upper_equation;  // sup |-f' + z f - eps g|
};

/// Residuals of (d/dx + z) g = eps f and (-d/dx + z) f = eps g with second-order
/// central differences; the two endpoints are excluded from the sup-norm.
/// Throws std::invalid_argument for fewer than 3 samples or non-uniform spacing.
FirstOrderResidual first_order_residual(const SpinorPair& pair, const MassFunction& mass);

/// Upper component from the lower one, f = (g' + z g) / eps.
/// Throws std::domain_error for eps = 0: the zero mode has no normalizable partner.
std::vector<double> partner_component(std::span<const double> x, std::span<const double> lower,
                                      double energy, const MassFunction& mass);

/// Second-order central-difference derivative at interior samples; one-sided
/// second-order stencils at the two ends.
std::vector<double> central_derivative(std::span<const double> values, double spacing);

}  // namespace rindler
