#include "rindler/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rindler {

Sector sector_from_int(int s)
{
    if (s == 1) return Sector::upper;
    if (s == -1) return Sector::lower;
    throw std::invalid_argument("sector must be +1 or -1, got " + std::to_string(s));
}

std::string_view to_string(Sector s) { return s == Sector::upper ? "+1" : "-1"; }

std::string_view to_string(PotentialKind kind)
{
    return kind == PotentialKind::exact ? "exact" : "truncated";
}

PotentialKind potential_kind_from_string(std::string_view name)
{
    if (name == "exact") return PotentialKind::exact;
    if (name == "truncated" || name == "harmonic" || name == "harmonic_truncation")
        return PotentialKind::harmonic_truncation;
    throw std::invalid_argument("unknown potential kind '" + std::string(name) + "'");
}

double MassFunction::operator()(double x) const
{
    const double a = frame_.acceleration();
    const double m = frame_.mass();
    if (kind_ == PotentialKind::exact) return m * std::exp(a * x);
    return m * (1.0 + 0.5 * a * x);
}

double MassFunction::derivative(double x) const
{
    const double a = frame_.acceleration();
    const double m = frame_.mass();
    if (kind_ == PotentialKind::exact) return a * m * std::exp(a * x);
    return 0.5 * m * a;
}

MassFunction build_mass_function(const RindlerFrame& frame, PotentialKind kind)
{
    return MassFunction(frame, kind);
}

double EffectivePotential::operator()(double x) const
{
    const double z = mass_(x);
    return z * z + sign(sector_) * mass_.derivative(x);
}

EffectivePotential effective_potential(const MassFunction& mass, Sector sector)
{
    return EffectivePotential(mass, sector);
}

EffectivePotential effective_potential(const MassFunction& mass, int sector)
{
    return EffectivePotential(mass, sector_from_int(sector));
}

OscillatorForm::OscillatorForm(const RindlerFrame& frame, Sector sector)
    : frame_(frame), sector_(sector), scale_(std::sqrt(frame.acceleration() * frame.mass() / 2.0))
{
}

double OscillatorForm::to_y(double x) const noexcept { return scale_ * (x + 2.0 / frame_.acceleration()); }

double OscillatorForm::to_x(double y) const noexcept { return y / scale_ - 2.0 / frame_.acceleration(); }

double OscillatorForm::eta(double energy) const noexcept
{
    return 2.0 * energy * energy / (frame_.acceleration() * frame_.mass());
}

double OscillatorForm::energy_squared(double eta) const noexcept
{
    return 0.5 * eta * frame_.acceleration() * frame_.mass();
}

double OscillatorForm::potential(double y) const noexcept { return y * y + sign(sector_); }

OscillatorForm to_oscillator_form(const RindlerFrame& frame, Sector sector)
{
    return OscillatorForm(frame, sector);
}

void SpinorPair::check_consistent() const
{
    if (upper.size() != x.size() || lower.size() != x.size())
        throw std::invalid_argument("spinor components are not sampled on a common grid");
}

double SpinorPair::sup_norm() const
{
    double s = 0.0;
    for (double v : upper) s = std::max(s, std::abs(v));
    for (double v : lower) s = std::max(s, std::abs(v));
    return s;
}

SpinorPair apply_rescaling(const SpinorPair& pair, const ConformalFactor& factor, RescaleDirection direction)
{
    pair.check_consistent();
    SpinorPair out = pair;
    const double sgn = direction == RescaleDirection::forward ? 1.0 : -1.0;
    for (std::size_t i = 0; i < pair.x.size(); ++i) {
        const double u = std::exp(sgn * 0.25 * factor.sigma(pair.x[i]));
        out.upper[i] *= u;
        out.lower[i] *= u;
    }
    return out;
}

SpinorPair apply_rescaling(const SpinorPair& pair, const RindlerFrame& frame, RescaleDirection direction)
{
    return apply_rescaling(pair, ConformalFactor(frame), direction);
}

namespace {

double uniform_spacing(std::span<const double> x)
{
    if (x.size() < 3) throw std::invalid_argument("central differences need at least 3 samples");
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (!(h > 0.0)) throw std::invalid_argument("sample positions must be increasing");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs((x[i] - x[i - 1]) - h) > 1e-8 * h)
            throw std::invalid_argument("sample positions are not uniformly spaced");
    return h;
}

}  // namespace

std::vector<double> central_derivative(std::span<const double> values, double spacing)
{
    const std::size_t n = values.size();
    if (n < 3) throw std::invalid_argument("central differences need at least 3 samples");
    std::vector<double> d(n);
    const double inv2h = 0.5 / spacing;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (values[i + 1] - values[i - 1]) * inv2h;
    d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) * inv2h;
    d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) * inv2h;
    return d;
}

FirstOrderResidual first_order_residual(const SpinorPair& pair, const MassFunction& mass)
{
    pair.check_consistent();
    const double h = uniform_spacing(pair.x);
    const auto dg = central_derivative(pair.lower, h);
    const auto df = central_derivative(pair.upper, h);
    FirstOrderResidual r{0.0, 0.0};
    const double eps = pair.energy;
    for (std::size_t i = 1; i + 1 < pair.x.size(); ++i) {
        const double z = mass(pair.x[i]);
        r.lower_equation = std::max(r.lower_equation, std::abs(dg[i] + z * pair.lower[i] - eps * pair.upper[i]));
        r.upper_equation = std::max(r.upper_equation, std::abs(-df[i] + z * pair.upper[i] - eps * pair.lower[i]));
    }
    return r;
}

std::vector<double> partner_component(std::span<const double> x, std::span<const double> lower, double energy,
                                      const MassFunction& mass)
{
    if (energy == 0.0)
        throw std::domain_error("partner component undefined at eps = 0 (unpaired zero mode)");
    if (x.size() != lower.size()) throw std::invalid_argument("partner_component: size mismatch");
    const double h = uniform_spacing(x);
    const auto dg = central_derivative(lower, h);
    std::vector<double> f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) f[i] = (dg[i] + mass(x[i]) * lower[i]) / energy;
    return f;
}

}  // namespace rindler
