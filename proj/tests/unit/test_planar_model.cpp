#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "casimir/planar_model.hpp"
#include "casimir/polylog.hpp"

using namespace casimir;

namespace {

constexpr double pi = std::numbers::pi;
// long-double series value of Li_4(0.25), frozen as the zero-T oracle anchor
constexpr double kLi4Quarter = 0.25411619074634353;

const ReflectivityPair kIdeal = ReflectivityPair::uniform(1.0);
const ReflectivityPair kHalf = ReflectivityPair::uniform(0.5);          // rho = 0.25
const ReflectivityPair kRho05 = ReflectivityPair::uniform(std::sqrt(0.5));

} // namespace

TEST_CASE("zero-temperature closed forms: ideal limits and scaling") {
    CHECK(pressure_zero_t(kIdeal, 1.0) == doctest::Approx(-pi * pi / 240.0).epsilon(1e-12));
    CHECK(free_energy_zero_t(kIdeal, 1.0) == doctest::Approx(-pi * pi / 720.0).epsilon(1e-12));
    CHECK(pressure_zero_t(ReflectivityPair::uniform(0.0), 1.0) == 0.0);
    CHECK(free_energy_zero_t(ReflectivityPair::uniform(0.0), 1.0) == 0.0);

    CHECK(pressure_zero_t(kHalf, 1.0) ==
          doctest::Approx(-6.0 * kLi4Quarter / (16.0 * pi * pi)).epsilon(1e-11));
    CHECK(pressure_zero_t(kHalf, 1.0) / (-pi * pi / 240.0) ==
          doctest::Approx(kLi4Quarter / zeta_int(4)).epsilon(1e-11));
    CHECK(free_energy_zero_t(kHalf, 1.0) ==
          doctest::Approx(-2.0 * kLi4Quarter / (16.0 * pi * pi)).epsilon(1e-11));

    // power-of-two rescaling is exact in floating point
    CHECK(free_energy_zero_t(kRho05, 2.0) == free_energy_zero_t(kRho05, 1.0) / 8.0);
    CHECK(pressure_zero_t(kRho05, 2.0) == pressure_zero_t(kRho05, 1.0) / 16.0);
    const double lam = 1.7;
    CHECK(free_energy_zero_t(kRho05, lam) ==
          doctest::Approx(free_energy_zero_t(kRho05, 1.0) / (lam * lam * lam)).epsilon(1e-14));
    CHECK(pressure_zero_t(kRho05, lam) ==
          doctest::Approx(pressure_zero_t(kRho05, 1.0) / (lam * lam * lam * lam)).epsilon(1e-14));

    CHECK_THROWS_AS(pressure_zero_t(kIdeal, 0.0), std::domain_error);
    CHECK_THROWS_AS(pressure_zero_t(ReflectivityPair::uniform(1.1), 1.0), std::domain_error);
}

TEST_CASE("dual thermal representation agrees to 1e-10") {
    for (double rho : {0.1, 0.5, 0.9}) {
        const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
        for (double at : {0.01, 0.1, 1.0, 5.0}) {
            const CavityState st{1.0, at};
            const ThermalSeries fm = free_energy_matsubara(refl, st, 1e-15);
            const ThermalSeries fg = free_energy_geometric(refl, st, 1e-15);
            CAPTURE(rho);
            CAPTURE(at);
            CHECK(fm.value == doctest::Approx(fg.value).epsilon(1e-10));
            CHECK(fm.tail_bound >= 0.0);
            CHECK(fg.terms_used >= 5);
        }
    }
    // the geometric form stays valid at rho = 1
    const CavityState st{1.0, 0.3};
    CHECK(free_energy_matsubara(kIdeal, st, 1e-15).value ==
          doctest::Approx(free_energy_geometric(kIdeal, st, 1e-15).value).epsilon(1e-10));
}

TEST_CASE("thermal free energy: zero reflection, truncation bound, T=0 rejection") {
    CHECK(free_energy_matsubara(ReflectivityPair::uniform(0.0), {1.0, 0.5}).value == 0.0);
    CHECK(free_energy_geometric(ReflectivityPair::uniform(0.0), {1.0, 0.5}).value == 0.0);

    const ThermalSeries loose = free_energy_matsubara(kRho05, {1.0, 0.07}, 1e-6);
    const ThermalSeries tight = free_energy_matsubara(kRho05, {1.0, 0.07}, 1e-15);
    CHECK(std::abs(loose.value - tight.value) <= loose.tail_bound + 1e-15);
    CHECK(loose.terms_used <= tight.terms_used);

    CHECK_THROWS_AS(free_energy_matsubara(kRho05, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(free_energy_geometric(kRho05, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(free_energy_matsubara(kRho05, {1.0, 0.5}, 0.0), std::invalid_argument);
}

TEST_CASE("high-temperature law") {
    const CavityState st{1.0, 5.0};
    const Asymptote high = free_energy_high_t(kIdeal, st);
    CHECK(high.value == doctest::Approx(-zeta_int(3) * st.T / (8.0 * pi)).epsilon(1e-14));
    CHECK_FALSE(high.regime_warning);
    CHECK(free_energy_high_t(kRho05, {1.0, 0.4}).regime_warning);
    CHECK(free_energy_high_t(ReflectivityPair::uniform(0.0), st).value == 0.0);

    const double exact = free_energy_matsubara(kHalf, st, 1e-15).value;
    const double asym = free_energy_high_t(kHalf, st).value;
    CHECK(std::abs(exact / asym - 1.0) < std::exp(-4.0 * pi * st.aT()) + 1e-12);

    // the error of the asymptote decays like e^{-4 pi aT}; the omitted m = 1
    // mode carries a known aT (4 pi aT + 1) prefactor which is divided out
    auto err = [&](double at) {
        const CavityState s{1.0, at};
        return std::abs(free_energy_matsubara(kHalf, s, 1e-16).value -
                        free_energy_high_t(kHalf, s).value) /
               (at * (4.0 * pi * at + 1.0));
    };
    const double slope = std::log(err(1.2) / err(0.6)) / 0.6;
    CHECK(slope == doctest::Approx(-4.0 * pi).epsilon(0.01));
}

TEST_CASE("low-temperature law") {
    const CavityState cold{1.0, 0.01};
    const double exact = free_energy_matsubara(kHalf, cold, 1e-18).value;
    const double f0 = free_energy_zero_t(kHalf, 1.0);
    const double predicted = -(pi * pi * cold.T * cold.T * cold.T * cold.T / 45.0) *
                             (2.0 * 0.25 / 0.75);
    CHECK((exact - f0) == doctest::Approx(predicted).epsilon(0.01));
    CHECK(free_energy_low_t(kHalf, cold) == doctest::Approx(exact).epsilon(1e-9));

    // T = 0 collapses exactly onto the zero-temperature closed form
    CHECK(free_energy_low_t(kHalf, {1.0, 0.0}) == free_energy_zero_t(kHalf, 1.0));
    CHECK_THROWS_AS(free_energy_low_t(kIdeal, cold), std::domain_error);
}

TEST_CASE("thermal pressure is -dF/da") {
    for (double rho : {0.25, 0.81}) {
        const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
        for (double at : {0.1, 1.0}) {
            const CavityState st{1.0, at};
            const double p = pressure_thermal(refl, st, 1e-15).value;
            const double h = 1e-5;
            const double fd = -(free_energy_matsubara(refl, {1.0 + h, at}, 1e-18).value -
                                free_energy_matsubara(refl, {1.0 - h, at}, 1e-18).value) /
                              (2.0 * h);
            CAPTURE(rho);
            CAPTURE(at);
            CHECK(p == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    CHECK(pressure_thermal(ReflectivityPair::uniform(0.0), {1.0, 1.0}).value == 0.0);
    // m = 0 dominates at high aT; both polarizations give -zeta(3) T/(4 pi a^3)
    const CavityState hot{1.0, 5.0};
    CHECK(pressure_thermal(kIdeal, hot, 1e-15).value ==
          doctest::Approx(-zeta_int(3) * hot.T / (4.0 * pi)).epsilon(1e-12));
}

TEST_CASE("entropy: Nernst behaviour and positivity") {
    const CavityState st{1.0, 1e-3};
    const double expected = 4.0 * pi * pi * std::pow(st.T, 3) / 45.0 * (2.0 * 0.25 / 0.75);
    CHECK(entropy(kHalf, st) == doctest::Approx(expected).epsilon(0.05));

    const ReflectivityPair rho09 = ReflectivityPair::uniform(std::sqrt(0.9));
    const double expected09 = 4.0 * pi * pi * std::pow(st.T, 3) / 45.0 * (2.0 * 0.9 / 0.1);
    CHECK(entropy(rho09, st) == doctest::Approx(expected09).epsilon(0.05));

    // below the differencing floor the expansion derivative takes over
    const CavityState tiny{1.0, 1e-5};
    const double pred_tiny = 4.0 * pi * pi * std::pow(tiny.T, 3) / 45.0 * (2.0 * 0.25 / 0.75);
    CHECK(entropy(kHalf, tiny) == doctest::Approx(pred_tiny).epsilon(1e-9));

    CHECK(entropy(ReflectivityPair::uniform(0.0), st) == 0.0);
    for (int j = 0; j <= 12; ++j) {
        const double at = 1e-3 * std::pow(10.0, j / 3.0);
        CAPTURE(at);
        CHECK(entropy(kRho05, {1.0, at}) >= 0.0);
    }
    // S -> 0 monotonically on a halving grid
    double prev = entropy(kRho05, {1.0, 1.0 / 64.0});
    for (int j = 7; j <= 12; ++j) {
        const double s = entropy(kRho05, {1.0, std::pow(2.0, -j)});
        CHECK(s < prev);
        prev = s;
    }
    CHECK(prev < 1e-10);
    CHECK_THROWS_AS(entropy(kHalf, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("free energy becomes more negative as reflectivity grows") {
    const CavityState st{1.0, 0.5};
    double prev_f0 = 0.0;
    double prev_ft = 0.0;
    for (double r : {0.2, 0.4, 0.6, 0.8, 0.95, 1.0}) {
        const ReflectivityPair refl = ReflectivityPair::uniform(r);
        const double f0 = free_energy_zero_t(refl, 1.0);
        const double ft = free_energy_matsubara(refl, st, 1e-14).value;
        CHECK(f0 < prev_f0);
        CHECK(ft < prev_ft);
        prev_f0 = f0;
        prev_ft = ft;
    }
    // raising a single coefficient also lowers F
    ReflectivityPair asym = ReflectivityPair::uniform(0.5);
    const double base = free_energy_matsubara(asym, st, 1e-14).value;
    asym.r_p_2 = 0.8;
    CHECK(free_energy_matsubara(asym, st, 1e-14).value < base);
}

TEST_CASE("matsubara free energy approaches the zero-T closed form as T -> 0") {
    const double f0 = free_energy_zero_t(kRho05, 1.0);
    double prev = std::abs(free_energy_matsubara(kRho05, {1.0, 1.0 / 8.0}, 1e-16).value - f0);
    for (int j = 4; j <= 10; ++j) {
        const double gap =
            std::abs(free_energy_matsubara(kRho05, {1.0, std::pow(2.0, -j)}, 1e-16).value - f0);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-11);
}

TEST_CASE("asymptotic temperature series") {
    const CavityState st{1.0, 0.02};
    const AsymptoticSeries series = asymptotic_series(kHalf, st, 8);
    REQUIRE(series.terms.size() == 9);
    // k = 0 reproduces F0, k = 1 vanishes identically
    CHECK(series.terms[0].value == doctest::Approx(free_energy_zero_t(kHalf, 1.0)).epsilon(1e-14));
    CHECK(series.terms[1].value == 0.0);
    // k = 2 equals the low-temperature T^4 coefficient
    const double t4 = -(pi * pi * st.T * st.T * st.T * st.T / 45.0) * (2.0 * 0.25 / 0.75);
    CHECK(series.terms[2].value == doctest::Approx(t4).epsilon(1e-12));
    // optimal truncation lands on the full sum up to the smallest term
    const double exact = free_energy_matsubara(kHalf, st, 1e-18).value;
    CHECK(std::abs(series.truncated_sum - exact) <= 1e-14);

    const AsymptoticSeries diverging =
        asymptotic_series(ReflectivityPair::uniform(std::sqrt(0.9)), {1.0, 0.2}, 20);
    CHECK(diverging.diverging);
    CHECK(diverging.truncation_order < 40);
    // once past the optimal cut the terms grow without bound
    CHECK(std::abs(diverging.terms.back().value) >
          1e10 * std::abs(diverging.terms[static_cast<std::size_t>(
                              diverging.truncation_order / 2)].value));

    const AsymptoticSeries early =
        asymptotic_series(ReflectivityPair::uniform(std::sqrt(0.9)), {1.0, 0.2}, 2);
    CHECK_FALSE(early.diverging);

    CHECK_THROWS_AS(asymptotic_series(kIdeal, st, 8), std::domain_error);
    CHECK_THROWS_AS(asymptotic_series(kHalf, st, 21), std::out_of_range);
}

TEST_CASE("ideal-conductor expansion") {
    CHECK(ideal_conductor_expansion({1.0, 0.0}).value ==
          doctest::Approx(-pi * pi / 720.0).epsilon(1e-15));
    const CavityState st{1.0, 0.05};
    const Asymptote exp = ideal_conductor_expansion(st);
    CHECK_FALSE(exp.regime_warning);
    CHECK(free_energy_geometric(kIdeal, st, 1e-18).value ==
          doctest::Approx(exp.value).epsilon(1e-8));
    CHECK(ideal_conductor_expansion({1.0, 0.4}).regime_warning);

    // fitting F(T)-F(0) over aT in [0.01, 0.1] recovers the cubic coefficient
    double s33 = 0.0, s34 = 0.0, s44 = 0.0, b3 = 0.0, b4 = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double at = 0.01 * std::pow(10.0, i / 24.0);
        const double df =
            free_energy_geometric(kIdeal, {1.0, at}, 1e-18).value - (-pi * pi / 720.0);
        const double t3 = at * at * at;
        const double t4 = t3 * at;
        s33 += t3 * t3;
        s34 += t3 * t4;
        s44 += t4 * t4;
        b3 += t3 * df;
        b4 += t4 * df;
    }
    const double det = s33 * s44 - s34 * s34;
    const double c3 = (b3 * s44 - b4 * s34) / det;
    const double c4 = (s33 * b4 - s34 * b3) / det;
    CHECK(c3 == doctest::Approx(-zeta_int(3) / (2.0 * pi)).epsilon(0.01));
    CHECK(c4 == doctest::Approx(pi * pi / 45.0).epsilon(0.02));
}

TEST_CASE("coth wronskian bracket") {
    CHECK(coth_wronskian(20.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(coth_wronskian(1e-4) == doctest::Approx(2.0 / 1e-4).epsilon(1e-7));
    // Laurent tail: W(x) - 2/x -> (2/45) x^3
    const double x = 0.05;
    CHECK(coth_wronskian(x) - 2.0 / x == doctest::Approx(2.0 * x * x * x / 45.0).epsilon(1e-3));
    CHECK_THROWS_AS(coth_wronskian(0.0), std::domain_error);
}

TEST_CASE("representations stay consistent across separation scales") {
    // tiny |F| at large a must not erode relative agreement
    ReflectivityPair pairs[3] = {
        ReflectivityPair::uniform(0.999),
        {0.3, 0.9, 0.8, 0.2},   // asymmetric bodies
        {-0.7, 0.5, 0.6, 0.5},  // repulsive-capable s channel
    };
    for (const ReflectivityPair& refl : pairs) {
        for (double a : {0.01, 1.0, 50.0}) {
            for (double at : {0.003, 0.4, 20.0}) {
                const CavityState st{a, at / a};
                const double fm = free_energy_matsubara(refl, st, 1e-16).value;
                const double fg = free_energy_geometric(refl, st, 1e-16).value;
                CAPTURE(a);
                CAPTURE(at);
                CHECK(fm == doctest::Approx(fg).epsilon(1e-10));
                const double p = pressure_thermal(refl, st, 1e-16).value;
                const double h = 1e-5 * a;
                const double fd = -(free_energy_matsubara(refl, {a + h, st.T}, 1e-18).value -
                                    free_energy_matsubara(refl, {a - h, st.T}, 1e-18).value) /
                                  (2.0 * h);
                CHECK(p == doctest::Approx(fd).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("negative rho (repulsive-capable) inputs are accepted") {
    ReflectivityPair mixed = ReflectivityPair::uniform(0.5);
    mixed.r_s_1 = -0.5;  // rho_s = -0.25
    CHECK(mixed.repulsive_capable());
    CHECK_FALSE(kHalf.repulsive_capable());
    const CavityState st{1.0, 0.3};
    const double fm = free_energy_matsubara(mixed, st, 1e-14).value;
    const double fg = free_energy_geometric(mixed, st, 1e-14).value;
    CHECK(fm == doctest::Approx(fg).epsilon(1e-10));
    CHECK(std::isfinite(pressure_thermal(mixed, st).value));
    CHECK(std::isfinite(free_energy_zero_t(mixed, 1.0)));
}
