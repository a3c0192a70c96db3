#include "rindler/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "rindler/analytic.hpp"

namespace rindler {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kBisectionCap = 400;
constexpr double kRenormalizeAbove = 1e100;

double operator_norm(const TridiagonalOperator& op)
{
    const auto [lo, hi] = op.spectral_bounds();
    return std::max(std::abs(lo), std::abs(hi));
}

// Pivot floor for the Sturm recurrence.
double pivot_floor(const TridiagonalOperator& op)
{
    return std::max(std::numeric_limits<double>::min(), kEps * kEps * std::max(1.0, operator_norm(op)));
}

std::size_t sturm_count(const TridiagonalOperator& op, double lambda, double floor)
{
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < op.diagonal.size(); ++i) {
        const double coupling = i == 0 ? 0.0 : op.off_diagonal[i - 1] * op.off_diagonal[i - 1] / q;
        q = op.diagonal[i] - lambda - coupling;
        if (std::abs(q) < floor) q = -floor;
        if (q < 0.0) ++count;
    }
    return count;
}

// LU with partial pivoting for a general tridiagonal matrix (LAPACK gttrf/gtts2 layout).
class TridiagonalLU
{
public:
    TridiagonalLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> super, double tiny)
        : dl_(std::move(sub)), d_(std::move(diag)), du_(std::move(super))
    {
        const std::size_t n = d_.size();
        du2_.assign(n > 2 ? n - 2 : 0, 0.0);
        swapped_.assign(n > 1 ? n - 1 : 0, false);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0) d_[i] = tiny;
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            } else {
                const double fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const double temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                swapped_[i] = true;
            }
        }
        if (n > 0 && d_[n - 1] == 0.0) d_[n - 1] = tiny;
    }

    void solve(std::vector<double>& b) const
    {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (!swapped_[i]) {
                b[i + 1] -= dl_[i] * b[i];
            } else {
                const double old = b[i];
                b[i] = b[i + 1];
                b[i + 1] = old - dl_[i] * b[i];
            }
        }
        b[n - 1] /= d_[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
        for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;)
            b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }

private:
    std::vector<double> dl_, d_, du_, du2_;
    std::vector<bool> swapped_;
};

void normalize_and_orient(std::vector<double>& v, double spacing)
{
    double sum = 0.0;
    double peak = 0.0;
    for (double x : v) {
        sum += x * x;
        peak = std::max(peak, std::abs(x));
    }
    if (sum == 0.0) return;
    double scale = 1.0 / std::sqrt(sum * spacing);
    for (double x : v)
        if (std::abs(x) > 1e-9 * peak) {
            if (x < 0.0) scale = -scale;
            break;
        }
    for (double& x : v) x *= scale;
}

/// Per-level brackets refined by every Sturm count, so probes made while
/// isolating one level also narrow the ones above it.
class SturmBrackets
{
public:
    SturmBrackets(const TridiagonalOperator& op, std::size_t k)
        : op_(op), floor_(pivot_floor(op)), abs_floor_(kEps * std::max(1.0, operator_norm(op))), lo_(k), hi_(k)
    {
        auto [lo, hi] = op.spectral_bounds();
        const double pad = kEps * std::max(1.0, operator_norm(op)) * 4.0;
        std::fill(lo_.begin(), lo_.end(), lo - pad);
        std::fill(hi_.begin(), hi_.end(), hi + pad);
    }

    std::size_t probe(double lambda)
    {
        const std::size_t count = sturm_count(op_, lambda, floor_);
        for (std::size_t i = 0; i < lo_.size(); ++i) {
            if (i < count)
                hi_[i] = std::min(hi_[i], lambda);
            else
                lo_[i] = std::max(lo_[i], lambda);
        }
        return count;
    }

    /// Tries to shrink level j's bracket to [hint - d, hint + d] for growing d.
    void seed(std::size_t j, double hint)
    {
        double d = 1e-7 * std::max(1.0, std::abs(hint));
        for (int attempt = 0; attempt < 12 && hint - d > lo_[j] && hint + d < hi_[j]; ++attempt, d *= 8.0) {
            const bool below = probe(hint - d) <= j;
            const bool above = probe(hint + d) > j;
            if (below && above) return;
        }
    }

    double bisect(std::size_t j, double& width)
    {
        for (int it = 0; it < kBisectionCap; ++it) {
            const double lo = lo_[j];
            const double hi = hi_[j];
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= 2.0 * kEps * (std::abs(lo) + std::abs(hi)) + abs_floor_ || mid == lo || mid == hi) {
                width = hi - lo;
                return mid;
            }
            probe(mid);
        }
        throw std::runtime_error("Sturm bisection did not converge for eigenvalue " + std::to_string(j));
    }

private:
    const TridiagonalOperator& op_;
    double floor_;
    double abs_floor_;
    std::vector<double> lo_, hi_;
};

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, std::size_t k, std::vector<double>* widths,
                                       std::span<const double> hints = {})
{
    if (k > op.size()) throw std::invalid_argument("requested more eigenvalues than the matrix dimension");
    SturmBrackets brackets(op, k);
    std::vector<double> values(k);
    if (widths) widths->assign(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        if (j < hints.size()) brackets.seed(j, hints[j]);
        double width = 0.0;
        values[j] = brackets.bisect(j, width);
        if (widths) (*widths)[j] = width;
    }
    return values;
}

std::vector<double> inverse_iteration(const TridiagonalOperator& op, double lambda, std::mt19937_64& rng)
{
    const std::size_t n = op.size();
    std::vector<double> diag(op.diagonal);
    for (double& d : diag) d -= lambda;
    const double tiny = kEps * std::max(1.0, operator_norm(op));
    const TridiagonalLU lu(op.off_diagonal, std::move(diag), op.off_diagonal, tiny);

    std::uniform_real_distribution<double> dist(0.5, 1.5);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    for (int iter = 0; iter < 3; ++iter) {
        lu.solve(v);
        double peak = 0.0;
        for (double x : v) peak = std::max(peak, std::abs(x));
        if (!(peak > 0.0) || !std::isfinite(peak)) throw std::runtime_error("inverse iteration broke down");
        for (double& x : v) x /= peak;
    }
    return v;
}

}  // namespace

TridiagonalOperator TridiagonalOperator::shifted(double shift) const
{
    TridiagonalOperator out = *this;
    for (double& d : out.diagonal) d += shift;
    return out;
}

std::size_t TridiagonalOperator::count_below(double lambda) const
{
    return sturm_count(*this, lambda, pivot_floor(*this));
}

std::pair<double, double> TridiagonalOperator::spectral_bounds() const
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = diagonal.size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(off_diagonal[i]);
        lo = std::min(lo, diagonal[i] - radius);
        hi = std::max(hi, diagonal[i] + radius);
    }
    return {lo, hi};
}

TridiagonalOperator discretize(const PotentialFn& potential, const Grid& grid)
{
    const std::size_t n = grid.interior_points();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    TridiagonalOperator op;
    op.spacing = h;
    op.diagonal.resize(n);
    op.off_diagonal.assign(n - 1, -inv_h2);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.node(i + 1);
        const double v = potential(x);
        if (!std::isfinite(v))
            throw std::domain_error("potential is not finite at x = " + std::to_string(x));
        op.diagonal[i] = 2.0 * inv_h2 + v;
    }
    return op;
}

TridiagonalOperator discretize(const EffectivePotential& potential, const Grid& grid)
{
    return discretize(PotentialFn([potential](double x) { return potential(x); }), grid);
}

std::vector<EigenSolution> eigen_lowest_k(const TridiagonalOperator& op, std::size_t k)
{
    std::vector<double> widths;
    const auto values = lowest_eigenvalues(op, k, &widths);
    std::mt19937_64 rng(0x5eed);
    std::vector<EigenSolution> out(k);
    for (std::size_t j = 0; j < k; ++j) {
        out[j].eigenvalue = values[j];
        out[j].convergence = widths[j];
        out[j].vector = inverse_iteration(op, values[j], rng);
        normalize_and_orient(out[j].vector, op.spacing);
        out[j].nodes = count_sign_changes(out[j].vector);
    }
    // Near-degenerate levels: order by node count.
    for (std::size_t j = 1; j < k; ++j) {
        const double a = out[j - 1].eigenvalue;
        const double b = out[j].eigenvalue;
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        if (std::abs(a - b) <= 1e-12 * scale && out[j].nodes < out[j - 1].nodes) std::swap(out[j - 1], out[j]);
    }
    return out;
}

namespace {

struct NumerovRun
{
    std::vector<double> left;   // w on nodes 0 .. m+1
    std::vector<double> right;  // w on nodes m .. N+1, stored at full-grid indices
    std::vector<double> weight; // 1 + h^2 k_i / 12, to recover psi = w / weight
    std::size_t match = 0;
};

NumerovRun numerov(const std::vector<double>& v, double h, double lambda)
{
    const std::size_t last = v.size() - 1;  // node N+1
    NumerovRun run;
    run.match = last / 2;
    const std::size_t m = run.match;
    const double h2 = h * h / 12.0;

    run.weight.resize(v.size());
    std::vector<double> c(v.size());
    for (std::size_t i = 0; i <= last; ++i) {
        const double k = lambda - v[i];
        run.weight[i] = 1.0 + h2 * k;
        c[i] = 2.0 * (1.0 - 5.0 * h2 * k) / run.weight[i];
    }

    auto rescale = [](std::vector<double>& w, std::size_t from, std::size_t to) {
        for (std::size_t j = from; j <= to; ++j) w[j] /= kRenormalizeAbove;
    };

    run.left.assign(v.size(), 0.0);
    run.left[1] = 1.0;
    for (std::size_t i = 1; i <= m; ++i) {
        run.left[i + 1] = c[i] * run.left[i] - run.left[i - 1];
        if (std::abs(run.left[i + 1]) > kRenormalizeAbove) rescale(run.left, 0, i + 1);
        if (!std::isfinite(run.left[i + 1])) throw std::runtime_error("Numerov integration overflow (left)");
    }

    run.right.assign(v.size(), 0.0);
    run.right[last - 1] = 1.0;
    for (std::size_t i = last - 1; i > m; --i) {
        run.right[i - 1] = c[i] * run.right[i] - run.right[i + 1];
        if (std::abs(run.right[i - 1]) > kRenormalizeAbove) rescale(run.right, i - 1, last);
        if (!std::isfinite(run.right[i - 1])) throw std::runtime_error("Numerov integration overflow (right)");
    }
    return run;
}

std::vector<double> sample_potential(const PotentialFn& potential, const Grid& grid)
{
    std::vector<double> v(grid.node_count());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = potential(grid.node(i));
        if (!std::isfinite(v[i])) throw std::domain_error("potential is not finite on the grid");
    }
    return v;
}

double defect_of(const NumerovRun& run)
{
    const std::size_t m = run.match;
    const double l0 = run.left[m], l1 = run.left[m + 1];
    const double r0 = run.right[m], r1 = run.right[m + 1];
    const double scale = std::hypot(l0, l1) * std::hypot(r0, r1);
    if (scale == 0.0) return 0.0;
    return (l1 * r0 - l0 * r1) / scale;
}

}  // namespace

double matching_defect(const PotentialFn& potential, const Grid& grid, double lambda)
{
    return defect_of(numerov(sample_potential(potential, grid), grid.spacing(), lambda));
}

EigenSolution shoot(const PotentialFn& potential, const Grid& grid, double lambda_lo, double lambda_hi)
{
    if (!(lambda_lo < lambda_hi)) throw std::invalid_argument("shooting bracket must satisfy lo < hi");
    const auto v = sample_potential(potential, grid);
    const double h = grid.spacing();

    double lo = lambda_lo, hi = lambda_hi;
    double d_lo = defect_of(numerov(v, h, lo));
    const double d_hi = defect_of(numerov(v, h, hi));
    if (d_lo * d_hi > 0.0)
        throw std::invalid_argument("shooting bracket contains no eigenvalue (matching defect keeps its sign)");

    for (int it = 0; it < kBisectionCap; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 2.0 * kEps * std::max({1e-3, std::abs(lo), std::abs(hi)}) || mid == lo || mid == hi) break;
        const double d_mid = defect_of(numerov(v, h, mid));
        if (d_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((d_mid > 0.0) == (d_lo > 0.0)) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }

    EigenSolution sol;
    sol.eigenvalue = 0.5 * (lo + hi);
    sol.convergence = hi - lo;

    const NumerovRun run = numerov(v, h, sol.eigenvalue);
    const std::size_t m = run.match;
    const std::size_t match_at = std::abs(run.right[m]) >= std::abs(run.right[m + 1]) ? m : m + 1;
    const double glue = run.right[match_at] != 0.0 ? run.left[match_at] / run.right[match_at] : 0.0;

    const std::size_t n = grid.interior_points();
    sol.vector.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double w = i <= match_at ? run.left[i] : glue * run.right[i];
        sol.vector[i - 1] = w / run.weight[i];
    }
    normalize_and_orient(sol.vector, h);
    sol.nodes = count_sign_changes(sol.vector);
    return sol;
}

ExactSpectrum solve_exact_rindler(const RindlerFrame& frame, Sector sector, const Grid& grid, std::size_t k,
                                  double drift_threshold)
{
    const auto potential = effective_potential(build_mass_function(frame, PotentialKind::exact), sector);
    const double h = grid.spacing();
    const auto steps = static_cast<std::size_t>(std::llround(1.2 * static_cast<double>(grid.interior_points() + 1)));
    const Grid shifted(grid.x_max() - static_cast<double>(steps) * h, grid.x_max(), steps - 1);

    auto base = eigen_lowest_k(discretize(potential, grid), k);
    std::vector<double> widths;
    const auto moved = lowest_eigenvalues(discretize(potential, shifted), k, &widths);

    ExactSpectrum out{{}, grid, shifted, drift_threshold, 0.0};
    const double floor = frame.acceleration() * frame.mass();
    double largest = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        BoxLevel level;
        level.solution = std::move(base[j]);
        level.shifted_eigenvalue = moved[j];
        level.drift = std::abs(moved[j] - level.solution.eigenvalue);
        level.relative_drift = level.drift / std::max(std::abs(level.solution.eigenvalue), floor);
        level.box_artifact = level.relative_drift > drift_threshold;
        largest = std::max(largest, std::abs(level.solution.eigenvalue));
        out.levels.push_back(std::move(level));
    }
    out.wall_ratio = largest > 0.0 ? potential(grid.x_max()) / largest : std::numeric_limits<double>::infinity();
    return out;
}

std::vector<Grid> refinement_sequence(const Grid& coarsest, std::size_t count)
{
    std::vector<Grid> grids{coarsest};
    while (grids.size() < count) grids.push_back(grids.back().refined());
    return grids;
}

std::vector<LevelConvergence> convergence_study(const PotentialFn& potential, std::size_t k,
                                                std::span<const Grid> grids, std::span<const double> hints)
{
    if (grids.size() < 3) throw std::invalid_argument("convergence study needs at least 3 grids");
    for (std::size_t i = 1; i < grids.size(); ++i) {
        const double ratio = grids[i - 1].spacing() / grids[i].spacing();
        if (std::abs(ratio - 2.0) > 1e-9 || grids[i].x_min() != grids[0].x_min() || grids[i].x_max() != grids[0].x_max())
            throw std::invalid_argument("convergence study needs ratio-2 refinements of one interval");
    }

    std::vector<LevelConvergence> out(k);
    std::vector<double> previous(hints.begin(), hints.end());
    for (const auto& grid : grids) {
        // each refinement moves a level only slightly, so the coarser values seed the search
        previous = lowest_eigenvalues(discretize(potential, grid), k, nullptr, previous);
        for (std::size_t j = 0; j < k; ++j) out[j].eigenvalues.push_back(previous[j]);
    }
    for (auto& level : out) {
        const auto& e = level.eigenvalues;
        const std::size_t n = e.size();
        for (std::size_t i = 2; i < n; ++i) {
            const double prev = e[i - 1] - e[i - 2];
            const double cur = e[i] - e[i - 1];
            if ((prev > 0.0) != (cur > 0.0) || std::abs(cur) >= std::abs(prev)) level.monotone = false;
        }
        const double d1 = e[n - 2] - e[n - 3];
        const double d2 = e[n - 1] - e[n - 2];
        level.observed_order = (d1 != 0.0 && d2 != 0.0) ? std::log2(std::abs(d1 / d2)) : 0.0;
        level.extrapolated = e[n - 1] + d2 / 3.0;
        level.error_bar = std::abs(level.extrapolated - e[n - 1]);
    }
    return out;
}

}  // namespace rindler
