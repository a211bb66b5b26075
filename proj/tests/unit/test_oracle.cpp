#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "casimir/oracle.hpp"
#include "casimir/planar_model.hpp"

using namespace casimir;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("quadrature reproduces the ideal Casimir limits") {
    const ReflectivityPair ideal = ReflectivityPair::uniform(1.0);
    oracle::QuadratureConfig cfg;
    CHECK(oracle::pressure_zero_t_quadrature(ideal, 1.0, cfg) ==
          doctest::Approx(-pi * pi / 240.0).epsilon(1e-6));
    CHECK(oracle::free_energy_zero_t_quadrature(ideal, 1.0, cfg) ==
          doctest::Approx(-pi * pi / 720.0).epsilon(1e-6));
}

TEST_CASE("quadrature agrees with the closed forms away from the ideal point") {
    oracle::QuadratureConfig cfg;
    for (double rho : {0.25, 0.81}) {
        const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
        for (double a : {0.7, 1.0}) {
            CAPTURE(rho);
            CAPTURE(a);
            CHECK(oracle::pressure_zero_t_quadrature(refl, a, cfg) ==
                  doctest::Approx(pressure_zero_t(refl, a)).epsilon(1e-8));
            CHECK(oracle::free_energy_zero_t_quadrature(refl, a, cfg) ==
                  doctest::Approx(free_energy_zero_t(refl, a)).epsilon(1e-8));
        }
    }
    CHECK(oracle::pressure_zero_t_quadrature(ReflectivityPair::uniform(0.0), 1.0, cfg) == 0.0);
    CHECK(oracle::free_energy_zero_t_quadrature(ReflectivityPair::uniform(0.0), 1.0, cfg) == 0.0);

    // relative accuracy must survive extreme separations (|P| ~ a^-4)
    const ReflectivityPair half = ReflectivityPair::uniform(std::sqrt(0.5));
    for (double a : {0.01, 100.0}) {
        CAPTURE(a);
        CHECK(oracle::pressure_zero_t_quadrature(half, a, cfg) ==
              doctest::Approx(pressure_zero_t(half, a)).epsilon(1e-8));
    }
}

TEST_CASE("quadrature self-consistency under tolerance halving") {
    const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(0.5));
    oracle::QuadratureConfig loose;
    loose.rel_tol = 2e-9;
    oracle::QuadratureConfig tight;
    tight.rel_tol = 1e-9;
    const double a = oracle::pressure_zero_t_quadrature(refl, 1.0, loose);
    const double b = oracle::pressure_zero_t_quadrature(refl, 1.0, tight);
    CHECK(std::abs(a - b) <= loose.rel_tol * std::abs(a));
}

TEST_CASE("order of integration and variable mapping are immaterial") {
    const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(0.5));
    oracle::QuadratureConfig cfg;
    const double base_p = oracle::pressure_zero_t_quadrature(refl, 1.0, cfg, false);
    const double swap_p = oracle::pressure_zero_t_quadrature(refl, 1.0, cfg, true);
    CHECK(swap_p == doctest::Approx(base_p).epsilon(1e-8));
    const double base_f = oracle::free_energy_zero_t_quadrature(refl, 1.0, cfg, false);
    const double swap_f = oracle::free_energy_zero_t_quadrature(refl, 1.0, cfg, true);
    CHECK(swap_f == doctest::Approx(base_f).epsilon(1e-8));

    oracle::QuadratureConfig rational;
    rational.mapping = oracle::Mapping::rational;
    CHECK(oracle::pressure_zero_t_quadrature(refl, 1.0, rational) ==
          doctest::Approx(base_p).epsilon(1e-8));
    CHECK(oracle::free_energy_zero_t_quadrature(refl, 1.0, rational) ==
          doctest::Approx(base_f).epsilon(1e-8));
}

TEST_CASE("per-mode quadrature of the thermal free energy") {
    oracle::QuadratureConfig cfg;
    const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(0.25));
    for (double at : {0.05, 0.5, 5.0}) {
        const CavityState st{1.0, at};
        CAPTURE(at);
        CHECK(oracle::free_energy_matsubara_quadrature(refl, st, cfg) ==
              doctest::Approx(free_energy_matsubara(refl, st, 1e-15).value).epsilon(1e-8));
    }
    // rho = 1: the m = 0 integrand has an integrable log singularity at kappa = 0
    const ReflectivityPair ideal = ReflectivityPair::uniform(1.0);
    const CavityState st{1.0, 1.0};
    const double quad = oracle::free_energy_matsubara_quadrature(ideal, st, cfg);
    CHECK(std::isfinite(quad));
    CHECK(quad == doctest::Approx(free_energy_geometric(ideal, st, 1e-15).value).epsilon(1e-8));
    CHECK(oracle::free_energy_matsubara_quadrature(ReflectivityPair::uniform(0.0), st, cfg) == 0.0);
    CHECK_THROWS_AS(oracle::free_energy_matsubara_quadrature(refl, {1.0, 0.0}, cfg),
                    std::domain_error);
}

TEST_CASE("quadrature gives up cleanly when the budget is too small") {
    oracle::QuadratureConfig starved;
    starved.rel_tol = 1e-14;
    starved.abs_tol = 1e-300;
    starved.max_subdivisions = 1;
    const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(0.99));
    CHECK_THROWS_AS(oracle::pressure_zero_t_quadrature(refl, 1.0, starved), std::runtime_error);
    oracle::QuadratureConfig bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(oracle::pressure_zero_t_quadrature(refl, 1.0, bad), std::domain_error);
}

TEST_CASE("finite differences") {
    CHECK(oracle::finite_difference([](double x) { return x * x; }, 3.0, 1e-4, 1) ==
          doctest::Approx(6.0).epsilon(1e-7));
    CHECK(oracle::finite_difference([](double) { return 2.5; }, 3.0, 1e-4, 1) == 0.0);
    CHECK(oracle::finite_difference([](double x) { return std::sin(x); }, 0.7, 1e-3, 2) ==
          doctest::Approx(-std::sin(0.7)).epsilon(1e-4));
    // cross-module identity: -dF/da is the pressure
    const ReflectivityPair refl = ReflectivityPair::uniform(0.5);
    const double fd = oracle::finite_difference(
        [&](double a) { return free_energy_zero_t(refl, a); }, 1.0, 1e-5, 1);
    CHECK(-fd == doctest::Approx(pressure_zero_t(refl, 1.0)).epsilon(1e-6));

    CHECK_THROWS_AS(oracle::finite_difference([](double x) { return x; }, 3.0, 1e-20, 1),
                    std::runtime_error);
    CHECK_THROWS_AS(oracle::finite_difference([](double x) { return x; }, 3.0, -1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::finite_difference([](double x) { return x; }, 3.0, 1e-4, 3),
                    std::invalid_argument);
}
