#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "casimir/backreaction.hpp"
#include "casimir/oracle.hpp"
#include "casimir/planar_model.hpp"
#include "casimir/polylog.hpp"

using namespace casimir;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("generalized force: zero-T and high-T limits") {
    const ReflectivityPair refl = ReflectivityPair::uniform(0.6);  // rho = 0.36
    const double r_i = 0.6;
    const double rho = 0.36;

    const double phi_cold = generalized_force(refl, {1.0, 1e-3}, 1, Polarization::s);
    const double lim_cold = li_real(3, rho).value / (16.0 * pi * pi * r_i);
    CHECK(phi_cold == doctest::Approx(lim_cold).epsilon(1e-3));

    const double phi_hot = generalized_force(refl, {1.0, 10.0}, 2, Polarization::p);
    const double lim_hot = 10.0 * li_real(2, rho).value / (16.0 * pi * r_i);
    CHECK(phi_hot == doctest::Approx(lim_hot).epsilon(1e-12));
}

TEST_CASE("generalized force equals -dF/dr by central differencing") {
    for (double r : {0.1, 0.5, 0.95}) {
        for (double at : {0.01, 1.0, 10.0}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(r);
            const CavityState st{1.0, at};
            const double phi = generalized_force(refl, st, 1, Polarization::s);
            const double fd = -oracle::finite_difference(
                [&](double r1) {
                    ReflectivityPair p = refl;
                    p.r_s_1 = r1;
                    return free_energy_matsubara(p, st, 1e-18).value;
                },
                r, 1e-6, 1);
            CAPTURE(r);
            CAPTURE(at);
            CHECK(phi == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("generalized force survives r_i = 0 via the series form") {
    ReflectivityPair refl;  // all zero
    refl.r_s_2 = 0.7;
    const CavityState st{1.0, 1.0};
    const double phi = generalized_force(refl, st, 1, Polarization::s);
    // at rho = 0 the sum collapses to sum' e^{-2 zeta_m a} (2 a zeta_m + 1)
    const double ds = 4.0 * pi;
    double series = 0.5;
    for (int m = 1; m < 50; ++m) series += std::exp(-m * ds) * (m * ds + 1.0);
    CHECK(phi == doctest::Approx(0.7 * series / (8.0 * pi)).epsilon(1e-12));
    // no opposing mirror, no force
    CHECK(generalized_force(ReflectivityPair{}, st, 1, Polarization::s) == 0.0);
    CHECK_THROWS_AS(generalized_force(refl, {1.0, 0.0}, 1, Polarization::s), std::domain_error);
    CHECK_THROWS_AS(generalized_force(refl, st, 3, Polarization::s), std::invalid_argument);
}

TEST_CASE("sign law: positive reflectivities attract harder") {
    const CavityState st{1.0, 0.7};
    for (double r : {0.2, 0.6, 0.9}) {
        const ReflectivityPair refl = ReflectivityPair::uniform(r);
        for (int body : {1, 2}) {
            CHECK(generalized_force(refl, st, body, Polarization::s) > 0.0);
            CHECK(generalized_force(refl, st, body, Polarization::p) > 0.0);
        }
        CHECK(one_loop_correction(refl, st, {0.5}) < 0.0);
    }
    CHECK(one_loop_correction(ReflectivityPair::uniform(0.5), st, {0.0}) == 0.0);
    CHECK_THROWS_AS(one_loop_correction(ReflectivityPair::uniform(0.5), st, {-1.0}),
                    std::domain_error);
}

TEST_CASE("one-loop correction scaling exponents") {
    const ReflectivityPair refl = ReflectivityPair::uniform(0.5);
    const SusceptibilityScalar chi{1e-4};
    const std::vector<double> grid{1.0, 2.0, 4.0, 8.0, 10.5};

    std::vector<double> df(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        df[i] = one_loop_correction(refl, {grid[i], 1e-3}, chi);
    CHECK(fit_loglog_slope(grid, df).exponent == doctest::Approx(-6.0).epsilon(0.01));
    CHECK(pressure_correction_scaling(refl, {1.0, 1e-3}, chi, grid).exponent ==
          doctest::Approx(-7.0).epsilon(0.01));

    for (std::size_t i = 0; i < grid.size(); ++i)
        df[i] = one_loop_correction(refl, {grid[i], 10.0}, chi);
    CHECK(fit_loglog_slope(grid, df).exponent == doctest::Approx(-4.0).epsilon(0.01));
    CHECK(pressure_correction_scaling(refl, {1.0, 10.0}, chi, grid).exponent ==
          doctest::Approx(-5.0).epsilon(0.01));

    const std::vector<double> t_grid{10.0, 20.0, 40.0, 80.0, 105.0};
    std::vector<double> df_t(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        df_t[i] = one_loop_correction(refl, {1.0, t_grid[i]}, chi);
    CHECK(fit_loglog_slope(t_grid, df_t).exponent == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("pressure_correction_scaling input validation") {
    const ReflectivityPair refl = ReflectivityPair::uniform(0.5);
    const SusceptibilityScalar chi{1e-4};
    const std::vector<double> narrow{1.0, 2.0, 4.0};
    CHECK_THROWS_AS(pressure_correction_scaling(refl, {1.0, 1e-3}, chi, narrow),
                    std::invalid_argument);
    const std::vector<double> straddling{1.0, 10.0, 100.0, 1000.0};
    CHECK_THROWS_AS(pressure_correction_scaling(refl, {1.0, 0.05}, chi, straddling),
                    std::invalid_argument);
    const std::vector<double> grid{1.0, 2.0, 4.0, 10.5};
    CHECK_THROWS_AS(pressure_correction_scaling(refl, {1.0, 1e-3}, {0.0}, grid),
                    std::runtime_error);
}

TEST_CASE("reflectivity flow: fixed point, capping, monotonicity") {
    const CavityState st{1.0, 1.0};
    const ReflectivityPair init = ReflectivityPair::uniform(0.5);

    const FlowState still = reflectivity_flow(init, st, {0.0}, 1e-12, 10);
    CHECK(still.converged);
    CHECK(still.iteration == 1);
    CHECK(still.r_current.r_s_1 == 0.5);
    CHECK_FALSE(still.capped);

    const FlowState capped = reflectivity_flow(init, st, {100.0}, 1e-12, 50);
    CHECK(capped.converged);
    CHECK(capped.capped);
    CHECK(capped.r_current.r_s_1 == 1.0);
    CHECK(capped.r_current.r_p_2 == 1.0);
    // at the cap the cavity is ideal
    CHECK(free_energy_matsubara(capped.r_current, st).value ==
          doctest::Approx(free_energy_matsubara(ReflectivityPair::uniform(1.0), st).value));

    // per-iteration trace: |r| never decreases, F never increases
    double prev_r = 0.5;
    double prev_f = free_energy_matsubara(init, st).value;
    for (int n = 1; n <= 8; ++n) {
        const FlowState step = reflectivity_flow(init, st, {0.3}, 1e-14, n);
        CHECK(step.r_current.r_s_1 >= prev_r);
        CHECK(step.r_current.r_s_1 <= 1.0);
        const double f = free_energy_matsubara(step.r_current, st).value;
        CHECK(f <= prev_f + 1e-15);
        prev_r = step.r_current.r_s_1;
        prev_f = f;
    }

    const FlowState unfinished = reflectivity_flow(init, st, {0.3}, 1e-14, 3);
    CHECK_FALSE(unfinished.converged);
    CHECK(unfinished.iteration == 3);

    CHECK_THROWS_AS(reflectivity_flow(init, st, {0.3}, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(reflectivity_flow(init, st, {0.3}, 1e-10, 0), std::invalid_argument);
}

TEST_CASE("fit_loglog_slope recovers pure power laws") {
    std::vector<double> x{1.0, 2.0, 4.0, 8.0};
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -3.5 * std::pow(x[i], -2.25);
    const ScalingFit fit = fit_loglog_slope(x, y);
    CHECK(fit.exponent == doctest::Approx(-2.25).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);

    std::vector<double> zeros{0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(fit_loglog_slope(x, zeros), std::runtime_error);
    std::vector<double> mixed{1.0, -1.0, 1.0, -1.0};
    CHECK_THROWS_AS(fit_loglog_slope(x, mixed), std::runtime_error);
}
