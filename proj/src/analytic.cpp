#include "rindler/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rindler {

HermitePolynomial::HermitePolynomial(int degree) : degree_(degree)
{
    if (degree < 0) throw std::invalid_argument("Hermite degree must be non-negative");

    if (degree <= kExactDegreeLimit) {
        std::vector<std::int64_t> prev{1};
        std::vector<std::int64_t> cur{1};
        if (degree >= 1) cur = {0, 2};
        for (int k = 1; k < degree; ++k) {
            std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 2, 0);
            for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
            for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2 * k * prev[j];
            prev = std::move(cur);
            cur = std::move(next);
        }
        exact_ = cur;
        coefficients_.assign(exact_.begin(), exact_.end());
        return;
    }

    std::vector<long double> prev{1.0L};
    std::vector<long double> cur{0.0L, 2.0L};
    for (int k = 1; k < degree; ++k) {
        std::vector<long double> next(static_cast<std::size_t>(k) + 2, 0.0L);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0L * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0L * k * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    coefficients_.assign(cur.begin(), cur.end());
}

std::optional<std::vector<std::int64_t>> HermitePolynomial::exact_coefficients() const
{
    if (degree_ > kExactDegreeLimit) return std::nullopt;
    return exact_;
}

double HermitePolynomial::operator()(double y) const
{
    if (degree_ > kExactDegreeLimit) return hermite_value(degree_, y);
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

HermitePolynomial hermite(int n) { return HermitePolynomial(n); }

double hermite_value(int n, double y)
{
    if (n < 0) throw std::invalid_argument("Hermite degree must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * y;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * y * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SeriesSolution series_coefficients(double eta, Sector sector, double a0, double a1, int j_max)
{
    if (j_max < 2) throw std::invalid_argument("series needs j_max >= 2");
    const double shifted = eta - sign(sector);
    const double tol = 1e-12 * std::max(1.0, std::abs(shifted));

    SeriesSolution out;
    out.coefficients.assign(static_cast<std::size_t>(j_max) + 1, 0.0);
    out.coefficients[0] = a0;
    out.coefficients[1] = a1;

    // Termination degree per parity chain; nullopt while the chain keeps going.
    std::optional<int> stop[2];
    bool seeded[2] = {a0 != 0.0, a1 != 0.0};

    for (int j = 0; j + 2 <= j_max; ++j) {
        const int parity = j % 2;
        const double numerator = 2.0 * j + 1.0 - shifted;
        if (stop[parity]) continue;
        if (std::abs(numerator) <= tol) {
            stop[parity] = j;
            continue;
        }
        out.coefficients[j + 2] = numerator * out.coefficients[j] / ((j + 2.0) * (j + 1.0));
    }

    int degree = -1;
    for (int p = 0; p < 2; ++p) {
        if (!seeded[p]) continue;
        if (!stop[p]) return out;
        degree = std::max(degree, *stop[p]);
    }
    if (degree >= 0) out.termination_index = degree;
    return out;
}

AnalyticLevel energy(int n, Sector sector, const RindlerFrame& frame)
{
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    AnalyticLevel level;
    level.n = n;
    level.sector = sector;
    level.acceleration = frame.acceleration();
    level.mass = frame.mass();
    const double occupation = n + (1 + sign(sector)) / 2;
    level.magnitude = std::sqrt(frame.acceleration() * frame.mass() * occupation);
    return level;
}

namespace {

// int_{lo}^{hi} (H_n^2 + 2n H_{n-1}^2) e^{-y^2} dy by composite Simpson.
double pair_density_integral(int n, double lo, double hi)
{
    if (!(hi > lo)) return 0.0;
    const int panels = std::max(2, 2 * static_cast<int>(std::ceil((hi - lo) / 2e-3)));
    const double step = (hi - lo) / panels;
    auto density = [n](double y) {
        const double g = hermite_value(n, y);
        const double f = n > 0 ? hermite_value(n - 1, y) : 0.0;
        return (g * g + 2.0 * n * f * f) * std::exp(-y * y);
    };
    double sum = density(lo) + density(hi);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * density(lo + i * step);
    return sum * step / 3.0;
}

}  // namespace

AnalyticSpinor spinor(int n, const RindlerFrame& frame, const Grid& grid, int energy_sign)
{
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    if (energy_sign != 1 && energy_sign != -1) throw std::invalid_argument("energy sign must be +1 or -1");

    const OscillatorForm osc(frame, Sector::lower);
    const double y_lo = osc.to_y(grid.x_min());
    const double y_hi = osc.to_y(grid.x_max());
    if (y_lo > -6.0 || y_hi < 6.0)
        throw std::invalid_argument("grid must span at least |y| <= 6 in oscillator units");

    // Total of the unnormalized pair density in y: sqrt(pi) 2^n n! per nonzero component.
    const double log_norm = 0.5 * std::log(std::numbers::pi) + n * std::numbers::ln2 + std::lgamma(n + 1.0);
    const double total = std::exp(log_norm) * (n > 0 ? 2.0 : 1.0);
    const double tail = pair_density_integral(n, y_hi, y_hi + 15.0) + pair_density_integral(n, y_lo - 15.0, y_lo);
    const double tail_fraction = tail / total;
    if (tail_fraction > 1e-8)
        throw std::invalid_argument("grid too narrow: tail fraction " + std::to_string(tail_fraction));

    AnalyticSpinor s;
    s.n = n;
    s.energy = energy_sign * energy(n, Sector::lower, frame).magnitude;
    s.tail_fraction = tail_fraction;
    s.x = grid.nodes();
    s.y.resize(s.x.size());
    s.lower.resize(s.x.size());
    s.upper.assign(s.x.size(), 0.0);

    // f = (g' + z g)/eps with z = scale * y reduces to sign * sqrt(2n) e^{-y^2/2} H_{n-1}.
    const double upper_ratio = n > 0 ? energy_sign * std::sqrt(2.0 * n) : 0.0;
    std::vector<double> density(s.x.size());
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double y = osc.to_y(s.x[i]);
        const double gauss = std::exp(-0.5 * y * y);
        s.y[i] = y;
        s.lower[i] = gauss * hermite_value(n, y);
        if (n > 0) s.upper[i] = upper_ratio * gauss * hermite_value(n - 1, y);
        density[i] = s.lower[i] * s.lower[i] + s.upper[i] * s.upper[i];
    }
    const double k = 1.0 / std::sqrt(trapezoid(density, grid.spacing()));
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        s.lower[i] *= k;
        s.upper[i] *= k;
    }
    s.lower_norm_constant = k;
    s.upper_norm_constant = upper_ratio * k;
    return s;
}

std::vector<SignedLevel> spectrum_table(std::span<const RindlerFrame> frames, int n_max, Sector sector)
{
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    std::vector<SignedLevel> out;
    out.reserve(frames.size() * static_cast<std::size_t>(n_max + 1) * 2);
    for (const auto& frame : frames)
        for (int n = 0; n <= n_max; ++n) {
            const auto level = energy(n, sector, frame);
            out.push_back({frame.acceleration(), frame.mass(), n, sector, level.eps_minus()});
            out.push_back({frame.acceleration(), frame.mass(), n, sector, level.eps_plus()});
        }
    std::stable_sort(out.begin(), out.end(),
                     [](const SignedLevel& l, const SignedLevel& r) { return std::abs(l.energy) < std::abs(r.energy); });
    return out;
}

int count_sign_changes(std::span<const double> values, double relative_floor)
{
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0;
    const double floor = relative_floor * peak;
    int changes = 0;
    int last = 0;
    for (double v : values) {
        if (std::abs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace rindler
