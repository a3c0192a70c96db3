#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rindler/analytic.hpp"
#include "rindler/grid.hpp"
#include "rindler/numeric.hpp"
#include "rindler/reduction.hpp"

using namespace rindler;

TEST_CASE("mass function values")
{
    const RindlerFrame f(0.01, 1.0);
    const auto exact = build_mass_function(f, PotentialKind::exact);
    const auto trunc = build_mass_function(f, PotentialKind::harmonic_truncation);
    CHECK(exact(0.0) == 1.0);
    CHECK(trunc(0.0) == 1.0);
    CHECK(exact(10.0) == doctest::Approx(1.1051709180756477).epsilon(1e-15));
    CHECK(trunc(10.0) == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(trunc.derivative(-300.0) == doctest::Approx(0.005));
    CHECK(trunc.derivative(300.0) == doctest::Approx(0.005));

    // a x = 0.1: the truncated mass departs from the exponential at first order
    const double drift = std::abs(trunc(10.0) - exact(10.0)) / exact(10.0);
    CHECK(drift == doctest::Approx(0.049920711062242495).epsilon(1e-12));
}

TEST_CASE("exact mass is its own derivative up to a")
{
    for (double a : {0.01, 0.03, 0.5}) {
        const auto z = build_mass_function(RindlerFrame(a, 2.0), PotentialKind::exact);
        for (int i = -50; i <= 50; ++i) {
            const double x = i / (5.0 * a);
            CHECK(z.derivative(x) == doctest::Approx(a * z(x)).epsilon(1e-15));
        }
    }
}

TEST_CASE("sector parsing and names")
{
    CHECK(sector_from_int(1) == Sector::upper);
    CHECK(sector_from_int(-1) == Sector::lower);
    CHECK_THROWS_AS(sector_from_int(0), std::invalid_argument);
    CHECK_THROWS_AS(sector_from_int(2), std::invalid_argument);
    CHECK(potential_kind_from_string(to_string(PotentialKind::exact)) == PotentialKind::exact);
    CHECK(potential_kind_from_string(to_string(PotentialKind::harmonic_truncation)) ==
          PotentialKind::harmonic_truncation);
    CHECK_THROWS_AS(potential_kind_from_string("morse"), std::invalid_argument);
}

TEST_CASE("effective potential")
{
    const RindlerFrame f(0.01, 1.0);
    const auto trunc = build_mass_function(f, PotentialKind::harmonic_truncation);
    const auto exact = build_mass_function(f, PotentialKind::exact);

    CHECK(effective_potential(trunc, Sector::upper)(0.0) == doctest::Approx(1.005).epsilon(1e-15));
    CHECK(effective_potential(exact, Sector::lower)(-1e5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(effective_potential(trunc, 0), std::invalid_argument);
    CHECK(effective_potential(trunc, -1).sector() == Sector::lower);

    SUBCASE("partner identity on a grid, both kinds")
    {
        for (const auto& z : {trunc, exact}) {
            const auto up = effective_potential(z, Sector::upper);
            const auto down = effective_potential(z, Sector::lower);
            for (double x : Grid(-400.0, 100.0, 499).nodes())
                CHECK(std::abs(up(x) - down(x) - 2.0 * z.derivative(x)) <= 1e-12);
        }
    }

    SUBCASE("truncated potential equals the shifted parabola")
    {
        for (double a : {0.01, 0.02, 0.03}) {
            const double m = 1.3;
            const auto z = build_mass_function(RindlerFrame(a, m), PotentialKind::harmonic_truncation);
            for (int s : {+1, -1}) {
                const auto v = effective_potential(z, s);
                for (double x : Grid(-6.0 / a, 2.0 / a, 199).nodes()) {
                    const double parabola = a * a * m * m / 4.0 * (2.0 / a + x) * (2.0 / a + x) + s * m * a / 2.0;
                    CHECK(std::abs(v(x) - parabola) <= 1e-12 * std::max(1.0, std::abs(parabola)));
                }
            }
        }
    }

    SUBCASE("exact potential has the Morse form")
    {
        for (int s : {+1, -1}) {
            const auto v = effective_potential(exact, s);
            for (double x : {-200.0, -10.0, 0.0, 35.0}) {
                const double e = std::exp(0.01 * x);
                CHECK(v(x) == doctest::Approx(e * e + s * 0.01 * e).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("oscillator form")
{
    const RindlerFrame f(0.01, 1.0);
    const auto osc = to_oscillator_form(f, Sector::lower);
    CHECK(osc.to_y(-200.0) == 0.0);
    CHECK(osc.scale() == doctest::Approx(std::sqrt(0.005)));
    CHECK(osc.eta(0.1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(osc.energy_squared(2.0) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(osc.potential(0.0) == -1.0);
    CHECK(to_oscillator_form(f, Sector::upper).potential(0.0) == 1.0);
    CHECK(osc.to_y(-100.0) > osc.to_y(-150.0));
    for (double x : {-350.0, -200.0, -3.0, 40.0}) CHECK(osc.to_x(osc.to_y(x)) == doctest::Approx(x).epsilon(1e-13));
}

TEST_CASE("x-form and y-form give the same eta")
{
    for (double a : {0.01, 0.03}) {
        const RindlerFrame f(a, 1.0);
        for (Sector s : {Sector::upper, Sector::lower}) {
            const auto osc = to_oscillator_form(f, s);
            const auto v = effective_potential(build_mass_function(f, PotentialKind::harmonic_truncation), s);
            const Grid xgrid = Grid::oscillator_box(f, 10.0, 1500);
            const Grid ygrid(osc.to_y(xgrid.x_min()), osc.to_y(xgrid.x_max()), 1500);
            const auto in_x = eigen_lowest_k(discretize(v, xgrid), 4);
            const auto in_y = eigen_lowest_k(discretize([&](double y) { return osc.potential(y); }, ygrid), 4);
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(std::abs(2.0 * in_x[i].eigenvalue / a - in_y[i].eigenvalue) <=
                      1e-9 * std::max(1.0, std::abs(in_y[i].eigenvalue)));
        }
    }
}

TEST_CASE("unitary rescaling")
{
    SpinorPair ones{{0.0, 25.0, 50.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, 0.3};
    const auto scaled = apply_rescaling(ones, RindlerFrame(0.02, 1.0), RescaleDirection::forward);
    CHECK(scaled.upper[2] == doctest::Approx(1.6487212707001282).epsilon(1e-15));
    CHECK(scaled.lower[2] == doctest::Approx(1.6487212707001282).epsilon(1e-15));
    CHECK(scaled.upper[0] == 1.0);
    CHECK(scaled.energy == 0.3);

    const auto flat = apply_rescaling(ones, ConformalFactor(0.0), RescaleDirection::forward);
    CHECK(flat.upper == ones.upper);
    CHECK(flat.lower == ones.lower);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    SpinorPair random;
    for (int i = 0; i < 500; ++i) {
        random.x.push_back(-300.0 + i);
        random.upper.push_back(u(rng));
        random.lower.push_back(u(rng));
    }
    const RindlerFrame f(0.03, 1.0);
    const auto back = apply_rescaling(apply_rescaling(random, f, RescaleDirection::forward), f,
                                      RescaleDirection::inverse);
    for (std::size_t i = 0; i < random.x.size(); ++i) {
        CHECK(std::abs(back.upper[i] - random.upper[i]) <= 1e-14 * std::abs(random.upper[i]) + 1e-300);
        CHECK(std::abs(back.lower[i] - random.lower[i]) <= 1e-14 * std::abs(random.lower[i]) + 1e-300);
    }

    SpinorPair broken{{0.0, 1.0}, {1.0}, {1.0, 2.0}, 0.0};
    CHECK_THROWS_AS(broken.check_consistent(), std::invalid_argument);
}

TEST_CASE("first-order residual")
{
    const RindlerFrame f(0.01, 1.0);
    const auto z = build_mass_function(f, PotentialKind::harmonic_truncation);

    SUBCASE("zero spinor")
    {
        const SpinorPair zero{{0.0, 1.0, 2.0, 3.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, 0.7};
        const auto r = first_order_residual(zero, z);
        CHECK(r.lower_equation == 0.0);
        CHECK(r.upper_equation == 0.0);
    }

    SUBCASE("too few samples")
    {
        const SpinorPair tiny{{0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}, 0.7};
        CHECK_THROWS_AS(first_order_residual(tiny, z), std::invalid_argument);
    }

    SUBCASE("analytic levels converge at second order")
    {
        for (int n : {1, 2, 3}) {
            const auto coarse = spinor(n, f, Grid::oscillator_box(f, 10.0, 4003));
            const auto fine = spinor(n, f, Grid::oscillator_box(f, 10.0, 8007));
            const auto rc = first_order_residual(coarse.pair(), z);
            const auto rf = first_order_residual(fine.pair(), z);
            const double ratio = std::max(rc.lower_equation, rc.upper_equation) /
                                 std::max(rf.lower_equation, rf.upper_equation);
            CHECK(ratio == doctest::Approx(4.0).epsilon(0.02));
            CHECK(std::max(rf.lower_equation, rf.upper_equation) < 1e-6);
        }
    }

    SUBCASE("mismatched energy leaves a residual of order the mismatch")
    {
        auto level = spinor(2, f, Grid::oscillator_box(f, 10.0, 2000));
        auto pair = level.pair();
        pair.energy += 0.1;
        const auto r = first_order_residual(pair, z);
        CHECK(std::max(r.lower_equation, r.upper_equation) >= 0.09 * pair.sup_norm());
    }
}

TEST_CASE("partner component")
{
    const RindlerFrame f(0.02, 1.0);
    const auto z = build_mass_function(f, PotentialKind::harmonic_truncation);
    const Grid grid = Grid::oscillator_box(f, 10.0, 4000);

    // lower component of level n = 1 maps onto the upper component, a Gaussian
    const auto level = spinor(1, f, grid);
    const auto partner = partner_component(level.x, level.lower, level.energy, z);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 1; i + 1 < partner.size(); ++i) {
        err = std::max(err, std::abs(partner[i] - level.upper[i]));
        scale = std::max(scale, std::abs(level.upper[i]));
    }
    CHECK(err < 5e-5 * scale);
    const auto osc = to_oscillator_form(f, Sector::upper);
    for (std::size_t i = 0; i < partner.size(); i += 400) {
        const double y = osc.to_y(level.x[i]);
        CHECK(partner[i] == doctest::Approx(level.upper_norm_constant * std::exp(-y * y / 2.0)).epsilon(1e-4).scale(scale));
    }

    const std::vector<double> zeros(level.x.size(), 0.0);
    for (double v : partner_component(level.x, zeros, level.energy, z)) CHECK(v == 0.0);
    CHECK_THROWS_AS(partner_component(level.x, level.lower, 0.0, z), std::domain_error);
}
