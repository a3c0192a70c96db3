#pragma once

#include <array>
#include <complex>

namespace rindler {

using Complex = std::complex<double>;

/// Dense 2x2 matrix, row-major. Used for tetrads, metrics and gamma matrices.
template <typename T>
struct Mat2
{
    std::array<std::array<T, 2>, 2> m{};

    static constexpr Mat2 identity() { return {{{{T(1), T(0)}, {T(0), T(1)}}}}; }
    static constexpr Mat2 diagonal(T d0, T d1) { return {{{{d0, T(0)}, {T(0), d1}}}}; }

    constexpr T& operator()(int r, int c) { return m[r][c]; }
    constexpr const T& operator()(int r, int c) const { return m[r][c]; }

    constexpr T trace() const { return m[0][0] + m[1][1]; }

    constexpr Mat2 transposed() const { return {{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}}; }

    friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b)
    {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        return r;
    }
    friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b)
    {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b)
    {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend constexpr Mat2 operator*(T s, const Mat2& a)
    {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
        return r;
    }
};

using RealMat2 = Mat2<double>;
using ComplexMat2 = Mat2<Complex>;

/// Largest absolute entry of the difference, for invariant checks.
double max_abs_difference(const ComplexMat2& a, const ComplexMat2& b);
double max_abs_difference(const RealMat2& a, const RealMat2& b);

ComplexMat2 to_complex(const RealMat2& a);

/// Uniformly accelerated frame in natural units (hbar = c = 1).
/// Both the acceleration and the mass carry units of inverse length.
class RindlerFrame
{
public:
    /// Throws std::invalid_argument unless a > 0 and m > 0 (both finite).
    RindlerFrame(double acceleration, double mass);

    double acceleration() const noexcept { return a_; }
    double mass() const noexcept { return m_; }

    /// Position of the Rindler horizon in the proper coordinate.
    double horizon() const noexcept { return -1.0 / a_; }

    friend bool operator==(const RindlerFrame&, const RindlerFrame&) = default;

private:
    double a_;
    double m_;
};

/// sigma(x) = 2 a x, the exponent of the conformal factor e^{sigma}.
/// Unlike RindlerFrame this accepts a = 0, the flat-space limit.
class ConformalFactor
{
public:
    explicit ConformalFactor(double acceleration);
    explicit ConformalFactor(const RindlerFrame& frame) : ConformalFactor(frame.acceleration()) {}

    double acceleration() const noexcept { return a_; }
    double sigma(double x) const noexcept { return 2.0 * a_ * x; }
    double derivative(double /*x*/) const noexcept { return 2.0 * a_; }

private:
    double a_;
};

/// The constant local gamma matrices gamma^(0), gamma^(1) of the 1+1 theory.
struct GammaPair
{
    ComplexMat2 time;
    ComplexMat2 space;

    /// gamma^(0) = [[0,1],[1,0]], gamma^(1) = [[i,0],[0,-i]].
    static GammaPair standard();
};

/// Minkowski tensor eta_(a)(b) = diag(1, -1).
RealMat2 minkowski();

/// Diagonal zweibein of the conformal line element e^{2ax}(dt^2 - dx^2).
/// forward(x)(a, mu) = e^{(a)}_mu, inverse(x)(a, mu) = e_{(a)}^mu.
class Tetrad
{
public:
    explicit Tetrad(ConformalFactor factor) : factor_(factor) {}

    RealMat2 forward(double x) const;
    RealMat2 inverse(double x) const;

    /// g_{mu nu} = e^{(a)}_mu e^{(b)}_nu eta_(a)(b)
    RealMat2 reconstruct_metric(double x) const;

    /// gamma^mu(x) = e_{(a)}^mu gamma^(a) for mu = 0, 1.
    std::array<ComplexMat2, 2> curved_gammas(double x, const GammaPair& gammas) const;

private:
    ConformalFactor factor_;
};

/// Horizon tolerance: proper coordinates within this distance of -1/a are rejected.
inline constexpr double kHorizonTolerance = 1e-12;

/// x = ln(1 + a xi) / a. Throws std::domain_error at or beyond the horizon.
double proper_to_conformal(double xi, const RindlerFrame& frame);

/// xi = (e^{a x} - 1) / a, always strictly above -1/a for finite x.
double conformal_to_proper(double x, const RindlerFrame& frame);

/// g_{mu nu}(x) = e^{2ax} diag(1, -1).
RealMat2 metric_tensor(double x, const RindlerFrame& frame);

/// g^{mu nu}(x) = e^{-2ax} diag(1, -1).
RealMat2 inverse_metric_tensor(double x, const RindlerFrame& frame);

/// Omega_0 = (i/4) sigma'(x) gamma^(0) gamma^(1); Omega_1 vanishes for this tetrad.
ComplexMat2 spin_connection(double x, const ConformalFactor& factor,
                            const GammaPair& gammas = GammaPair::standard());
ComplexMat2 spin_connection(double x, const RindlerFrame& frame,
                            const GammaPair& gammas = GammaPair::standard());

/// gamma^(0) Omega_0, the term the connection contributes to the Dirac operator
/// once the equation is multiplied through by e^{sigma/2}.
ComplexMat2 connection_term(double x, const ConformalFactor& factor,
                            const GammaPair& gammas = GammaPair::standard());

}  // namespace rindler
