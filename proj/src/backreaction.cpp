#include "casimir/backreaction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "casimir/polylog.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

// S_nu(x) = Li_nu(x)/x = sum_k x^{k-1}/k^nu, analytic at x = 0.
double li_over_x(int nu, double x) {
    if (x == 0.0) return 1.0;
    return li_real(nu, x, 1e-15).value / x;
}

double get_r(const ReflectivityPair& refl, int body, Polarization pol) {
    if (body == 1) return pol == Polarization::s ? refl.r_s_1 : refl.r_p_1;
    return pol == Polarization::s ? refl.r_s_2 : refl.r_p_2;
}

void set_r(ReflectivityPair& refl, int body, Polarization pol, double v) {
    if (body == 1)
        (pol == Polarization::s ? refl.r_s_1 : refl.r_p_1) = v;
    else
        (pol == Polarization::s ? refl.r_s_2 : refl.r_p_2) = v;
}

} // namespace

double generalized_force(const ReflectivityPair& refl, const CavityState& state, int body_index,
                         Polarization pol, double tol) {
    refl.validate();
    state.validate();
    if (body_index != 1 && body_index != 2)
        throw std::invalid_argument("generalized_force: body_index must be 1 or 2");
    if (!(state.T > 0.0)) throw std::domain_error("generalized_force: requires T > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("generalized_force: tol must be > 0");

    const double a = state.a;
    const double T = state.T;
    const double r_j = get_r(refl, body_index == 1 ? 2 : 1, pol);
    if (r_j == 0.0) return 0.0;  // no opposing mirror, no force on this channel
    const double rho = pol == Polarization::s ? refl.rho_s() : refl.rho_p();
    const double arho = std::abs(rho);
    const double pref = T / (8.0 * pi * a * a);
    const double ds = 4.0 * pi * a * T;  // step of s_m = 2 zeta_m a

    double sum = 0.0;
    for (long m = 0;; ++m) {
        const double s = m * ds;
        const double e = std::exp(-s);
        const double x = rho * e;
        // m = 0 carries no S_1 piece (coefficient 2 a zeta_0 = 0)
        const double bracket = (m == 0) ? li_over_x(2, x) : s * li_over_x(1, x) + li_over_x(2, x);
        sum += (m == 0 ? 0.5 : 1.0) * e * bracket;
        if (m >= 4) {
            const double s1 = (m + 1) * ds;
            const double e1 = std::exp(-s1);
            const double b1 = (s1 + 1.0) * e1 / (1.0 - arho * e1);
            const double r = (1.0 + ds / (s1 + 1.0)) * std::exp(-ds);
            const double tail = (r < 1.0) ? b1 / (1.0 - r) : std::numeric_limits<double>::infinity();
            if (pref * std::abs(r_j) * tail < tol && tail < 1e-13 * std::abs(sum)) break;
        }
        if (m > 10000000)
            throw std::runtime_error("generalized_force: Matsubara sum did not truncate");
    }
    return pref * r_j * sum;
}

double one_loop_correction(const ReflectivityPair& refl, const CavityState& state,
                           SusceptibilityScalar chi, double tol) {
    chi.validate();
    if (chi.chi == 0.0) return 0.0;
    double s = 0.0;
    for (int body : {1, 2}) {
        for (Polarization pol : {Polarization::s, Polarization::p}) {
            const double phi = generalized_force(refl, state, body, pol, tol);
            s += phi * phi;
        }
    }
    return -chi.chi * s;
}

FlowState reflectivity_flow(const ReflectivityPair& initial, const CavityState& state,
                            SusceptibilityScalar chi, double tol, int max_iter) {
    initial.validate();
    state.validate();
    chi.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("reflectivity_flow: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("reflectivity_flow: max_iter must be >= 1");

    FlowState flow;
    flow.r_current = initial;
    for (int iter = 1; iter <= max_iter; ++iter) {
        flow.iteration = iter;
        // simultaneous update of all four coefficients
        double phi[2][2];
        for (int body : {1, 2})
            for (Polarization pol : {Polarization::s, Polarization::p})
                phi[body - 1][static_cast<int>(pol)] =
                    generalized_force(flow.r_current, state, body, pol);
        double max_step = 0.0;
        ReflectivityPair next = flow.r_current;
        for (int body : {1, 2}) {
            for (Polarization pol : {Polarization::s, Polarization::p}) {
                const double r0 = get_r(flow.r_current, body, pol);
                double r1 = r0 + chi.chi * phi[body - 1][static_cast<int>(pol)];
                if (r1 > 1.0) {
                    r1 = 1.0;
                    flow.capped = true;
                } else if (r1 < -1.0) {
                    r1 = -1.0;
                    flow.capped = true;
                }
                max_step = std::max(max_step, std::abs(r1 - r0));
                set_r(next, body, pol, r1);
            }
        }
        flow.r_current = next;
        if (max_step < tol) {
            flow.converged = true;
            break;
        }
    }
    return flow;
}

ScalingFit fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching grids with >= 2 points");
    const double sign = y[0];
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) throw std::invalid_argument("fit_loglog_slope: x must be > 0");
        if (y[i] == 0.0 || (y[i] > 0.0) != (sign > 0.0))
            throw std::runtime_error("fit_loglog_slope: degenerate fit (zero or mixed-sign values)");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(std::abs(y[i]));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    ScalingFit fit;
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    for (std::size_t i = 0; i < lx.size(); ++i)
        fit.residual = std::max(fit.residual, std::abs(intercept + fit.exponent * lx[i] - ly[i]));
    return fit;
}

ScalingFit pressure_correction_scaling(const ReflectivityPair& refl, const CavityState& state,
                                       SusceptibilityScalar chi, std::span<const double> a_grid) {
    refl.validate();
    state.validate();
    chi.validate();
    if (a_grid.size() < 2)
        throw std::invalid_argument("pressure_correction_scaling: need >= 2 separations");
    double amin = a_grid[0], amax = a_grid[0];
    for (double a : a_grid) {
        if (!(a > 0.0)) throw std::invalid_argument("pressure_correction_scaling: a must be > 0");
        amin = std::min(amin, a);
        amax = std::max(amax, a);
    }
    if (amax / amin < 10.0 * (1.0 - 1e-12))
        throw std::invalid_argument("pressure_correction_scaling: grid must span >= 1 decade");
    const double at_min = amin * state.T;
    const double at_max = amax * state.T;
    if (!(at_max <= 0.2 || at_min >= 2.0))
        throw std::invalid_argument(
            "pressure_correction_scaling: grid straddles the aT regimes (need aT <= 0.2 or >= 2)");
    if (chi.chi == 0.0)
        throw std::runtime_error("pressure_correction_scaling: degenerate fit (chi = 0)");

    std::vector<double> dp(a_grid.size());
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        const double a = a_grid[i];
        const double h = 1e-5 * a;
        const double fp = one_loop_correction(refl, {a + h, state.T}, chi, 1e-16);
        const double fm = one_loop_correction(refl, {a - h, state.T}, chi, 1e-16);
        dp[i] = -(fp - fm) / (2.0 * h);
    }
    return fit_loglog_slope(a_grid, dp);
}

} // namespace casimir
