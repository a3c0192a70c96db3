#include "rindler/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "rindler/geometry.hpp"

namespace rindler {

Grid::Grid(double x_min, double x_max, std::size_t interior_points)
    : x_min_(x_min), x_max_(x_max), n_(interior_points)
{
    if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max))
        throw std::invalid_argument("grid bounds must be finite with x_min < x_max");
    if (interior_points < 3) throw std::invalid_argument("grid needs at least 3 interior points");
    h_ = (x_max_ - x_min_) / static_cast<double>(n_ + 1);
}

std::vector<double> Grid::nodes() const
{
    std::vector<double> out(node_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = node(i);
    out.back() = x_max_;
    return out;
}

std::vector<double> Grid::interior() const
{
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = node(i + 1);
    return out;
}

Grid Grid::refined() const { return Grid(x_min_, x_max_, 2 * n_ + 1); }

std::vector<double> Grid::embed(std::span<const double> interior_values) const
{
    if (interior_values.size() != n_) throw std::invalid_argument("embed: size does not match grid");
    std::vector<double> out(node_count(), 0.0);
    for (std::size_t i = 0; i < n_; ++i) out[i + 1] = interior_values[i];
    return out;
}

Grid Grid::oscillator_box(const RindlerFrame& frame, double half_width_y, std::size_t interior_points)
{
    if (!(half_width_y > 0.0)) throw std::invalid_argument("oscillator box half width must be positive");
    const double a = frame.acceleration();
    const double scale = std::sqrt(a * frame.mass() / 2.0);
    const double centre = -2.0 / a;
    const double half = half_width_y / scale;
    return Grid(centre - half, centre + half, interior_points);
}

double trapezoid(std::span<const double> values, double spacing)
{
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * spacing;
}

}  // namespace rindler
