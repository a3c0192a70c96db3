#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rindler {

class RindlerFrame;

/// Uniform grid on [x_min, x_max] with N interior points.
/// Nodes are x_i = x_min + i h for i = 0 .. N+1, h = (x_max - x_min) / (N + 1);
/// nodes 0 and N+1 are the Dirichlet boundaries.
class Grid
{
public:
    /// Throws std::invalid_argument unless x_min < x_max and N >= 3.
    Grid(double x_min, double x_max, std::size_t interior_points);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t interior_points() const noexcept { return n_; }
    std::size_t node_count() const noexcept { return n_ + 2; }
    double spacing() const noexcept { return h_; }
    double length() const noexcept { return x_max_ - x_min_; }

    double node(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i) * h_; }

    /// All N+2 nodes, boundaries included.
    std::vector<double> nodes() const;
    /// The N interior nodes.
    std::vector<double> interior() const;

    /// Same interval with the spacing halved (N -> 2N + 1).
    Grid refined() const;

    /// Pads interior samples with the two zero boundary values.
    std::vector<double> embed(std::span<const double> interior_values) const;

    /// Default box for the truncated problem: |y| <= half_width_y in oscillator
    /// units around the well minimum x = -2/a.
    static Grid oscillator_box(const RindlerFrame& frame, double half_width_y = 10.0,
                               std::size_t interior_points = 4000);

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double h_;
};

/// Trapezoidal rule over uniformly spaced samples.
double trapezoid(std::span<const double> values, double spacing);

}  // namespace rindler
