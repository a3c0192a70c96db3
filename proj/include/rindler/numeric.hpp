#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rindler/grid.hpp"
#include "rindler/reduction.hpp"

namespace rindler {

using PotentialFn = std::function<double(double)>;

/// Symmetric tridiagonal matrix. For a discretized Sturm-Liouville operator
/// -F'' + V F the diagonal is 2/h^2 + V(x_i) and the off-diagonal -1/h^2.
struct TridiagonalOperator
{
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size N-1
    /// Quadrature weight used to L2-normalize eigenvectors (grid spacing; 1 for a bare matrix).
    double spacing = 1.0;

    std::size_t size() const noexcept { return diagonal.size(); }
    /// The same operator plus shift * identity.
    TridiagonalOperator shifted(double shift) const;
    /// Number of eigenvalues strictly below lambda (Sturm sequence count).
    std::size_t count_below(double lambda) const;
    /// Gershgorin bounds on the spectrum.
    std::pair<double, double> spectral_bounds() const;
};

/// Three-point Laplacian plus the diagonal potential with Dirichlet walls at the
/// two boundary nodes. Throws std::domain_error on a non-finite potential sample.
TridiagonalOperator discretize(const PotentialFn& potential, const Grid& grid);
TridiagonalOperator discretize(const EffectivePotential& potential, const Grid& grid);

struct EigenSolution
{
    double eigenvalue = 0.0;  // lambda = eps^2
    /// Interior samples, normalized so spacing * sum v^2 = 1, first significant entry positive.
    std::vector<double> vector;
    int nodes = 0;
    /// Width of the final bisection bracket.
    double convergence = 0.0;
};

/// The k smallest eigenvalues by Sturm-sequence bisection (relative tolerance
/// 1e-10, floored at machine precision times the matrix norm), eigenvectors by
/// inverse iteration. Levels closer than 1e-12 are ordered by node count.
/// Throws std::invalid_argument for k > N, std::runtime_error if bisection stalls.
std::vector<EigenSolution> eigen_lowest_k(const TridiagonalOperator& op, std::size_t k);

/// Numerov integration inward from both walls, bisecting on the Casoratian of the
/// two solutions at the midpoint. Independent of the matrix path.
/// Throws std::invalid_argument when the defect has the same sign at both ends
/// of the bracket, std::runtime_error if the integration overflows anyway.
EigenSolution shoot(const PotentialFn& potential, const Grid& grid, double lambda_lo, double lambda_hi);

/// Matching defect used by shoot(), normalized to lie in [-1, 1].
double matching_defect(const PotentialFn& potential, const Grid& grid, double lambda);

/// A level of the untruncated Morse-form potential computed in a Dirichlet box.
struct BoxLevel
{
    EigenSolution solution;
    /// Same level with x_min pushed out by 20% of the box length at fixed spacing.
    double shifted_eigenvalue = 0.0;
    double drift = 0.0;           // |shifted - original|
    double relative_drift = 0.0;  // drift / max(|lambda|, a m)
    bool box_artifact = false;
};

struct ExactSpectrum
{
    std::vector<BoxLevel> levels;
    Grid grid;
    Grid shifted_grid;
    double drift_threshold;
    /// V_exact(x_max) relative to the largest reported eigenvalue.
    double wall_ratio;
};

ExactSpectrum solve_exact_rindler(const RindlerFrame& frame, Sector sector, const Grid& grid, std::size_t k,
                                  double drift_threshold = 1e-4);

struct LevelConvergence
{
    std::vector<double> eigenvalues;  // one per grid, coarse to fine
    double observed_order = 0.0;
    double extrapolated = 0.0;  // Richardson with the scheme order 2
    double error_bar = 0.0;     // |extrapolated - finest|
    bool monotone = true;
};

/// Richardson study over grids that halve the spacing each step (>= 3 grids).
/// Optional hints (approximate eigenvalues on the first grid) only speed up the
/// bisection; results do not depend on them.
/// Throws std::invalid_argument if the sequence is too short or not ratio-2.
std::vector<LevelConvergence> convergence_study(const PotentialFn& potential, std::size_t k,
                                                std::span<const Grid> grids, std::span<const double> hints = {});

/// Helper for callers: grid, grid.refined(), grid.refined().refined(), ...
std::vector<Grid> refinement_sequence(const Grid& coarsest, std::size_t count);

}  // namespace rindler
