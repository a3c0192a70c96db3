#include "rindler/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rindler {

namespace {

template <typename T>
double max_abs_diff_impl(const Mat2<T>& a, const Mat2<T>& b)
{
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

}  // namespace

double max_abs_difference(const ComplexMat2& a, const ComplexMat2& b) { return max_abs_diff_impl(a, b); }
double max_abs_difference(const RealMat2& a, const RealMat2& b) { return max_abs_diff_impl(a, b); }

ComplexMat2 to_complex(const RealMat2& a)
{
    ComplexMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j);
    return r;
}

RindlerFrame::RindlerFrame(double acceleration, double mass) : a_(acceleration), m_(mass)
{
    if (!(std::isfinite(acceleration) && acceleration > 0.0))
        throw std::invalid_argument("acceleration must be positive and finite, got " +
                                    std::to_string(acceleration));
    if (!(std::isfinite(mass) && mass > 0.0))
        throw std::invalid_argument("mass must be positive and finite, got " + std::to_string(mass));
}

ConformalFactor::ConformalFactor(double acceleration) : a_(acceleration)
{
    if (!(std::isfinite(acceleration) && acceleration >= 0.0))
        throw std::invalid_argument("conformal factor needs a finite non-negative acceleration");
}

GammaPair GammaPair::standard()
{
    const Complex i{0.0, 1.0};
    GammaPair g;
    g.time = {{{{0.0, 1.0}, {1.0, 0.0}}}};
    g.space = {{{{i, 0.0}, {0.0, -i}}}};
    return g;
}

RealMat2 minkowski() { return RealMat2::diagonal(1.0, -1.0); }

RealMat2 Tetrad::forward(double x) const
{
    const double e = std::exp(0.5 * factor_.sigma(x));
    return RealMat2::diagonal(e, e);
}

RealMat2 Tetrad::inverse(double x) const
{
    const double e = std::exp(-0.5 * factor_.sigma(x));
    return RealMat2::diagonal(e, e);
}

RealMat2 Tetrad::reconstruct_metric(double x) const
{
    const RealMat2 e = forward(x);
    const RealMat2 eta = minkowski();
    RealMat2 g;
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) sum += e(a, mu) * e(b, nu) * eta(a, b);
            g(mu, nu) = sum;
        }
    return g;
}

std::array<ComplexMat2, 2> Tetrad::curved_gammas(double x, const GammaPair& gammas) const
{
    const RealMat2 inv = inverse(x);
    const std::array<ComplexMat2, 2> local{gammas.time, gammas.space};
    std::array<ComplexMat2, 2> out{};
    for (int mu = 0; mu < 2; ++mu)
        for (int a = 0; a < 2; ++a) out[mu] = out[mu] + Complex(inv(a, mu)) * local[a];
    return out;
}

double proper_to_conformal(double xi, const RindlerFrame& frame)
{
    const double a = frame.acceleration();
    // 1 + a xi is the distance to the horizon in units of 1/a.
    const double gap = 1.0 + a * xi;
    if (!std::isfinite(xi) || gap <= a * kHorizonTolerance)
        throw std::domain_error("proper coordinate " + std::to_string(xi) +
                                " lies at or beyond the Rindler horizon");
    return std::log1p(a * xi) / a;
}

double conformal_to_proper(double x, const RindlerFrame& frame)
{
    const double a = frame.acceleration();
    return std::expm1(a * x) / a;
}

RealMat2 metric_tensor(double x, const RindlerFrame& frame)
{
    const double w = std::exp(2.0 * frame.acceleration() * x);
    return RealMat2::diagonal(w, -w);
}

RealMat2 inverse_metric_tensor(double x, const RindlerFrame& frame)
{
    const double w = std::exp(-2.0 * frame.acceleration() * x);
    return RealMat2::diagonal(w, -w);
}

ComplexMat2 spin_connection(double x, const ConformalFactor& factor, const GammaPair& gammas)
{
    const Complex coeff = Complex(0.0, 0.25) * factor.derivative(x);
    return coeff * (gammas.time * gammas.space);
}

ComplexMat2 spin_connection(double x, const RindlerFrame& frame, const GammaPair& gammas)
{
    return spin_connection(x, ConformalFactor(frame), gammas);
}

ComplexMat2 connection_term(double x, const ConformalFactor& factor, const GammaPair& gammas)
{
    return gammas.time * spin_connection(x, factor, gammas);
}

}  // namespace rindler
