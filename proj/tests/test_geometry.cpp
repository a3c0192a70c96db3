#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rindler/geometry.hpp"

using namespace rindler;

namespace {

ComplexMat2 anticommutator(const ComplexMat2& a, const ComplexMat2& b)
{
    return a * b + b * a;
}

}  // namespace

TEST_CASE("frame rejects non-positive or non-finite parameters")
{
    CHECK_THROWS_AS(RindlerFrame(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RindlerFrame(-0.01, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RindlerFrame(0.01, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(RindlerFrame(NAN, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RindlerFrame(0.01, INFINITY), std::invalid_argument);
    CHECK(RindlerFrame(0.02, 1.0).horizon() == doctest::Approx(-50.0));
    CHECK_THROWS_AS(ConformalFactor(-1.0), std::invalid_argument);
    CHECK_NOTHROW(ConformalFactor(0.0));
}

TEST_CASE("proper to conformal coordinates")
{
    CHECK(proper_to_conformal(0.0, RindlerFrame(0.01, 1.0)) == 0.0);

    const RindlerFrame f(0.02, 1.0);
    CHECK(proper_to_conformal((std::exp(1.0) - 1.0) / 0.02, f) == doctest::Approx(50.0).epsilon(1e-14));

    SUBCASE("horizon and beyond are rejected")
    {
        CHECK_THROWS_AS(proper_to_conformal(-50.0, f), std::domain_error);
        CHECK_THROWS_AS(proper_to_conformal(-60.0, f), std::domain_error);
        CHECK_THROWS_AS(proper_to_conformal(-50.0 + 1e-15, f), std::domain_error);
        CHECK_NOTHROW(proper_to_conformal(-50.0 + 1e-6, f));
    }
}

TEST_CASE("conformal to proper coordinates")
{
    const RindlerFrame f(0.02, 1.0);
    CHECK(conformal_to_proper(0.0, f) == 0.0);
    CHECK(conformal_to_proper(50.0, f) == doctest::Approx(85.9140914229523).epsilon(1e-13));
    // far from the origin the proper coordinate approaches -1/a from above; once
    // e^{ax} drops below the double spacing at 1/a the two are indistinguishable
    CHECK(conformal_to_proper(-500.0, f) == doctest::Approx(-50.0 + std::exp(-10.0) / 0.02).epsilon(1e-14));
    CHECK(conformal_to_proper(-500.0, f) > f.horizon());
    CHECK(conformal_to_proper(-5000.0, f) == f.horizon());
    CHECK(conformal_to_proper(-1.0, f) > f.horizon());
}

TEST_CASE("coordinate round trip on random points")
{
    std::mt19937_64 rng(7);
    for (double a : {0.01, 0.02, 0.03, 1.0}) {
        const RindlerFrame f(a, 1.0);
        std::uniform_real_distribution<double> xs(-5.0 / a, 5.0 / a);
        std::uniform_real_distribution<double> fraction(-0.999, 5.0);
        for (int i = 0; i < 200; ++i) {
            const double x = xs(rng);
            CHECK(std::abs(proper_to_conformal(conformal_to_proper(x, f), f) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
            const double xi = fraction(rng) / a;
            CHECK(std::abs(conformal_to_proper(proper_to_conformal(xi, f), f) - xi) <=
                  1e-12 * std::max(1.0, std::abs(xi)));
        }
    }
}

TEST_CASE("metric tensor")
{
    const RindlerFrame f(0.01, 1.0);
    CHECK(max_abs_difference(metric_tensor(0.0, f), minkowski()) == 0.0);
    const auto g = metric_tensor(10.0, f);
    CHECK(g(0, 0) == doctest::Approx(std::exp(0.2)).epsilon(1e-15));
    CHECK(g(1, 1) == doctest::Approx(-std::exp(0.2)).epsilon(1e-15));
    CHECK(g(0, 1) == 0.0);
    CHECK(max_abs_difference(metric_tensor(7.5, f) * inverse_metric_tensor(7.5, f), RealMat2::identity()) < 1e-15);
}

TEST_CASE("tetrad reproduces the metric and inverts")
{
    for (double a : {0.01, 0.03}) {
        const RindlerFrame f(a, 1.0);
        const Tetrad e{ConformalFactor(f)};
        for (int i = 0; i <= 100; ++i) {
            const double x = -4.0 / a + 6.0 / a * i / 100.0;
            const double scale = std::exp(2.0 * a * x);
            CHECK(max_abs_difference(e.reconstruct_metric(x), metric_tensor(x, f)) <= 1e-12 * scale);
            CHECK(max_abs_difference(e.forward(x) * e.inverse(x).transposed(), RealMat2::identity()) <= 1e-12);
        }
    }
}

TEST_CASE("gamma matrices satisfy the Clifford algebra")
{
    const auto g = GammaPair::standard();
    const Complex i{0.0, 1.0};
    CHECK(g.time(0, 1) == Complex(1.0));
    CHECK(g.space(0, 0) == i);
    CHECK(g.space(1, 1) == -i);

    CHECK(max_abs_difference(anticommutator(g.time, g.time), Complex(2.0) * ComplexMat2::identity()) == 0.0);
    CHECK(max_abs_difference(anticommutator(g.space, g.space), Complex(-2.0) * ComplexMat2::identity()) == 0.0);
    CHECK(max_abs_difference(anticommutator(g.time, g.space), ComplexMat2{}) == 0.0);

    const RindlerFrame f(0.02, 1.0);
    const Tetrad e{ConformalFactor(f)};
    for (int k = 0; k <= 100; ++k) {
        const double x = -150.0 + 2.0 * k;
        const auto curved = e.curved_gammas(x, g);
        const auto g_inv = to_complex(inverse_metric_tensor(x, f));
        const double scale = std::exp(-2.0 * 0.02 * x);
        for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu)
                CHECK(max_abs_difference(anticommutator(curved[mu], curved[nu]),
                                         Complex(2.0) * g_inv(mu, nu) * ComplexMat2::identity()) <= 1e-12 * scale);
    }
}

TEST_CASE("spin connection")
{
    const auto omega = spin_connection(3.0, RindlerFrame(0.02, 1.0));
    const ComplexMat2 expected{{{{Complex(0.0), Complex(0.01)}, {Complex(-0.01), Complex(0.0)}}}};
    CHECK(max_abs_difference(omega, expected) < 1e-17);
    CHECK(std::abs(omega.trace()) == 0.0);

    const auto flat = spin_connection(3.0, ConformalFactor(0.0));
    CHECK(max_abs_difference(flat, ComplexMat2{}) == 0.0);

    // independent of position for sigma = 2 a x
    CHECK(max_abs_difference(spin_connection(-40.0, RindlerFrame(0.02, 1.0)), expected) < 1e-17);

    // gamma^(0) Omega_0 = (a/2) gamma^(0) [[0,1],[-1,0]] = (a/2) diag(-1, 1)
    const auto term = connection_term(0.0, ConformalFactor(0.02));
    CHECK(max_abs_difference(term, ComplexMat2::diagonal(Complex(-0.01), Complex(0.01))) < 1e-17);
}
