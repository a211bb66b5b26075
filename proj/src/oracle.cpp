#include "casimir/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/detail/gauss_kronrod.hpp"

namespace casimir::oracle {

namespace {

constexpr double pi = std::numbers::pi;

using detail::adaptive_gk15;

// int_zeta^inf dkappa kappa^2 rho e^{-2 kappa a} / (1 - rho e^{-2 kappa a}).
// Under the exponential map u = e^{-2a(kappa-zeta)} the overall factor
// e^{-2 zeta a} is pulled out analytically so nothing underflows.
double inner_pressure(double zeta, double a, double rho, const QuadratureConfig& cfg, double rel,
                      double abs) {
    const double big_e = std::exp(-2.0 * zeta * a);
    if (cfg.mapping == Mapping::exponential) {
        auto f = [=](double u) {
            const double kappa = zeta - std::log(u) / (2.0 * a);
            return kappa * kappa * rho / ((1.0 - rho * big_e * u) * 2.0 * a);
        };
        return big_e * adaptive_gk15(f, 0.0, 1.0, rel, abs / std::max(big_e, 1e-300),
                                     cfg.max_subdivisions);
    }
    auto f = [=](double t) {
        const double kappa = zeta + t / (1.0 - t);
        const double x = rho * std::exp(-2.0 * kappa * a);
        const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
        return kappa * kappa * x / (1.0 - x) * jac;
    };
    return adaptive_gk15(f, 0.0, 1.0, rel, abs, cfg.max_subdivisions);
}

// int_zeta^inf dkappa kappa ln(1 - rho e^{-2 kappa a})
double inner_log(double zeta, double a, double rho, const QuadratureConfig& cfg, double rel,
                 double abs) {
    const double big_e = std::exp(-2.0 * zeta * a);
    if (cfg.mapping == Mapping::exponential) {
        auto f = [=](double u) {
            const double kappa = zeta - std::log(u) / (2.0 * a);
            return kappa * std::log1p(-rho * big_e * u) / (2.0 * a * u);
        };
        return adaptive_gk15(f, 0.0, 1.0, rel, abs, cfg.max_subdivisions);
    }
    auto f = [=](double t) {
        const double kappa = zeta + t / (1.0 - t);
        const double x = rho * std::exp(-2.0 * kappa * a);
        const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
        return kappa * std::log1p(-x) * jac;
    };
    return adaptive_gk15(f, 0.0, 1.0, rel, abs, cfg.max_subdivisions);
}

// Outer integral over zeta in [0, inf) of a smooth, exponentially decaying
// inner value. Both mappings share the form zeta(w) with jacobian.
template <typename Inner>
double outer_integral(double a, const QuadratureConfig& cfg, const Inner& inner) {
    const double rel = 0.2 * cfg.rel_tol;
    const double abs = 0.2 * cfg.abs_tol;
    if (cfg.mapping == Mapping::exponential) {
        auto f = [&](double v) {
            const double zeta = -std::log(v) / (2.0 * a);
            return inner(zeta) / (2.0 * a * v);
        };
        return adaptive_gk15(f, 0.0, 1.0, rel, abs, cfg.max_subdivisions);
    }
    auto f = [&](double w) {
        const double zeta = w / (1.0 - w);
        return inner(zeta) / ((1.0 - w) * (1.0 - w));
    };
    return adaptive_gk15(f, 0.0, 1.0, rel, abs, cfg.max_subdivisions);
}

// Tail of sum_{m >= m1} (s_m + 1) amp e^{-s_m} / (1 - arho e^{-s_m}), s_m = m ds.
double mode_tail(int m1, double ds, double amp, double arho) {
    const double s1 = m1 * ds;
    const double e1 = std::exp(-s1);
    const double b1 = (s1 + 1.0) * amp * e1 / (1.0 - arho * e1);
    const double r = (1.0 + ds / (s1 + 1.0)) * std::exp(-ds);
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return b1 / (1.0 - r);
}

} // namespace

double pressure_zero_t_quadrature(const ReflectivityPair& refl, double a,
                                  const QuadratureConfig& cfg, bool swap_order) {
    refl.validate();
    cfg.validate();
    if (!(a > 0.0)) throw std::domain_error("pressure_zero_t_quadrature: a must be > 0");

    double total = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        double val;
        if (!swap_order) {
            val = outer_integral(a, cfg, [&](double zeta) {
                return inner_pressure(zeta, a, rho, cfg, 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol);
            });
        } else {
            // kappa outermost; the constant-reflection integrand is
            // zeta-independent, so the inner integral runs over [0, kappa]
            val = outer_integral(a, cfg, [&](double kappa) {
                const double x = rho * std::exp(-2.0 * kappa * a);
                auto g = [&](double) { return kappa * kappa * x / (1.0 - x); };
                if (kappa == 0.0) return 0.0;
                return adaptive_gk15(g, 0.0, kappa, 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol,
                                     cfg.max_subdivisions);
            });
        }
        total += val;
    }
    return -total / (2.0 * pi * pi);
}

double free_energy_zero_t_quadrature(const ReflectivityPair& refl, double a,
                                     const QuadratureConfig& cfg, bool swap_order) {
    refl.validate();
    cfg.validate();
    if (!(a > 0.0)) throw std::domain_error("free_energy_zero_t_quadrature: a must be > 0");

    double total = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        double val;
        if (!swap_order) {
            val = outer_integral(a, cfg, [&](double zeta) {
                return inner_log(zeta, a, rho, cfg, 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol);
            });
        } else {
            val = outer_integral(a, cfg, [&](double kappa) {
                const double x = rho * std::exp(-2.0 * kappa * a);
                auto g = [&](double) { return kappa * std::log1p(-x); };
                if (kappa == 0.0) return 0.0;
                return adaptive_gk15(g, 0.0, kappa, 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol,
                                     cfg.max_subdivisions);
            });
        }
        total += val;
    }
    return total / (4.0 * pi * pi);
}

double free_energy_matsubara_quadrature(const ReflectivityPair& refl, const CavityState& state,
                                        const QuadratureConfig& cfg) {
    refl.validate();
    state.validate();
    cfg.validate();
    if (!(state.T > 0.0)) throw std::domain_error("free_energy_matsubara_quadrature: requires T > 0");

    const double a = state.a;
    const double T = state.T;
    const double ds = 4.0 * pi * a * T;  // step of 2 zeta_m a

    double total = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        const double arho = std::abs(rho);
        double sum = 0.0;
        for (long m = 0;; ++m) {
            const double zeta_m = 2.0 * pi * m * T;
            const double im =
                inner_log(zeta_m, a, rho, cfg, 0.05 * cfg.rel_tol, 0.05 * cfg.abs_tol);
            sum += (m == 0 ? 0.5 : 1.0) * im;
            if (m >= 4) {
                // |kappa ln(1-x)| <= kappa |rho| e^{-2 kappa a} / (1 - arho e^{-2 zeta_m a})
                const double tail = mode_tail(static_cast<int>(m) + 1, ds, arho, arho) /
                                    (4.0 * a * a);
                if (tail < std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum))) break;
            }
            if (m > 10000000)
                throw std::runtime_error(
                    "free_energy_matsubara_quadrature: Matsubara sum did not truncate");
        }
        total += sum;
    }
    return T / (2.0 * pi) * total;
}

double finite_difference(const std::function<double(double)>& f, double x, double h, int order) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_difference: step must be > 0");
    if (order != 1 && order != 2) throw std::invalid_argument("finite_difference: order is 1 or 2");
    if (x + h == x || x - h == x)
        throw std::runtime_error("finite_difference: step too small to perturb x");

    const double fp = f(x + h);
    const double fm = f(x - h);
    if (order == 1) {
        const double diff = fp - fm;
        const double noise = 8e-16 * (std::abs(fp) + std::abs(fm));
        if (diff != 0.0 && std::abs(diff) < noise)
            throw std::runtime_error("finite_difference: difference below the rounding noise floor");
        return diff / (2.0 * h);
    }
    const double fc = f(x);
    const double diff = (fp - fc) + (fm - fc);
    const double noise = 8e-16 * (std::abs(fp) + std::abs(fm) + 2.0 * std::abs(fc));
    if (diff != 0.0 && std::abs(diff) < noise)
        throw std::runtime_error("finite_difference: difference below the rounding noise floor");
    return diff / (h * h);
}

} // namespace casimir::oracle
