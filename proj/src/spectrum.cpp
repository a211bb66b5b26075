#include "casimir/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/detail/gauss_kronrod.hpp"
#include "casimir/polylog.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

double density_one(double rho, double a, double xi) {
    if (rho == 0.0) return 0.0;
    const double im1 = li_unit_circle(1, rho, xi).value.imag();
    const double re2 = li_unit_circle(2, rho, xi).value.real();
    const double im3 = li_unit_circle(3, rho, xi).value.imag();
    const double bracket = -xi * xi * im1 - 2.0 * xi * re2 + 2.0 * im3;
    return -bracket / (16.0 * pi * pi * a * a * a);
}

void check_rho_range(const ReflectivityPair& refl) {
    for (double rho : {refl.rho_s(), refl.rho_p()})
        if (rho < 0.0 || rho > 1.0)
            throw std::domain_error("spectrum: requires 0 <= rho_sigma <= 1");
}

// int_X^inf e^{-eps xi} (b1 xi^2 + b2 xi + b3) dxi, closed form
double envelope_tail(double eps, double x, double b1, double b2, double b3) {
    const double inv = 1.0 / eps;
    return std::exp(-eps * x) *
           (b1 * (x * x * inv + 2.0 * x * inv * inv + 2.0 * inv * inv * inv) +
            b2 * (x * inv + inv * inv) + b3 * inv);
}

// Regulated integral (1/2a) int_0^inf e^{-eps xi} D_sigma(xi) dxi for one
// polarization, summed over period-aligned panels so the rho = 1 sawtooth
// jumps always sit on panel edges.
double regulated_integral(double rho, double a, double eps, double quad_tol) {
    if (rho == 0.0) return 0.0;
    const double b1 = (rho < 1.0) ? -std::log1p(-rho) : 0.5 * pi;
    const double b2 = 2.0 * li_real(2, rho, 1e-15).value;
    const double b3 = 2.0 * li_real(3, rho, 1e-15).value;
    const double scale = 1.0 / (16.0 * pi * pi * a * a * a);

    double acc = 0.0;
    for (long n = 0; n < 200000; ++n) {
        const double lo = two_pi * n;
        const double hi = two_pi * (n + 1);
        auto f = [&](double xi) { return std::exp(-eps * xi) * density_one(rho, a, xi); };
        acc += detail::adaptive_gk15(f, lo, hi, 0.05 * quad_tol, 1e-300, 4000);
        const double tail = envelope_tail(eps, hi, b1, b2, b3) * scale;
        if (n >= 2 && tail < 0.1 * quad_tol * std::abs(acc)) break;
        if (n + 1 == 200000)
            throw std::runtime_error("integrate_spectrum: panel sum did not converge");
    }
    return acc / (2.0 * a);
}

} // namespace

SpectrumSample spectral_density(const ReflectivityPair& refl, double a, double xi) {
    refl.validate();
    check_rho_range(refl);
    if (!(a > 0.0)) throw std::domain_error("spectral_density: a must be > 0");
    if (!(xi >= 0.0)) throw std::domain_error("spectral_density: xi must be >= 0");
    return {xi, density_one(refl.rho_s(), a, xi), density_one(refl.rho_p(), a, xi)};
}

SpectrumIntegral integrate_spectrum(const ReflectivityPair& refl, double a,
                                    std::span<const double> epsilons, double quad_tol) {
    refl.validate();
    check_rho_range(refl);
    if (!(a > 0.0)) throw std::domain_error("integrate_spectrum: a must be > 0");
    if (!(quad_tol > 0.0)) throw std::invalid_argument("integrate_spectrum: quad_tol must be > 0");
    if (epsilons.empty())
        throw std::invalid_argument("integrate_spectrum: regulator list must be nonempty");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0))
            throw std::invalid_argument("integrate_spectrum: regulators must be > 0");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw std::invalid_argument("integrate_spectrum: regulators must strictly decrease");
    }

    SpectrumIntegral out;
    out.regulated.reserve(epsilons.size());
    for (double eps : epsilons) {
        double v = 0.0;
        for (double rho : {refl.rho_s(), refl.rho_p()})
            v += regulated_integral(rho, a, eps, quad_tol);
        out.regulated.push_back(v);
    }

    // Neville extrapolation in eps^2 to eps = 0; the regulated integrals are
    // even functions of the regulator.
    const std::size_t n = epsilons.size();
    std::vector<double> x(n), t(out.regulated);
    for (std::size_t i = 0; i < n; ++i) x[i] = epsilons[i] * epsilons[i];
    double prev_diag = t[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            t[i] = t[i + 1] + (t[i] - t[i + 1]) * x[i + level] / (x[i + level] - x[i]);
        out.residuals.push_back(std::abs(t[0] - prev_diag));
        prev_diag = t[0];
    }
    out.pressure = t[0];
    out.converged = true;
    if (out.residuals.size() >= 2 &&
        out.residuals.back() > out.residuals.front() && out.residuals.back() > 1e-13) {
        out.converged = false;
        throw std::runtime_error("integrate_spectrum: extrapolation residuals did not decrease");
    }
    return out;
}

} // namespace casimir
