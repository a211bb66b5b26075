#pragma once

#include <span>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

/// Spectral density of the zero-temperature pressure per unit real frequency
/// omega, sampled at the dimensionless frequency xi = 2 omega a.
struct SpectrumSample {
    double xi = 0.0;
    double density_s = 0.0;
    double density_p = 0.0;
};

/// Per-polarization density
///   -(1/16 pi^2 a^3) [ -xi^2 Im Li_1(rho e^{i xi})
///                      - 2 xi Re Li_2(rho e^{i xi}) + 2 Im Li_3(rho e^{i xi}) ].
/// Smooth in xi for rho < 1; for rho = 1 it jumps at xi = 2 pi n (where the
/// evaluation throws, the jump being carried by the Im Li_1 sawtooth).
/// Requires 0 <= rho_sigma <= 1.
SpectrumSample spectral_density(const ReflectivityPair& refl, double a, double xi);

struct SpectrumIntegral {
    double pressure = 0.0;             // epsilon -> 0 extrapolation
    std::vector<double> regulated;     // integral value per regulator epsilon
    std::vector<double> residuals;     // successive extrapolation differences
    bool converged = false;
};

/// Integrates the spectrum over omega = xi/(2a) with the damping regulator
/// e^{-eps xi} for each eps in the (strictly decreasing) list, then removes
/// the regulator by Richardson extrapolation in eps^2. The bare integrand
/// oscillates with a polynomially growing envelope; the regulated integrals
/// are finite and even in eps, so the extrapolated limit reproduces the
/// closed-form pressure.
SpectrumIntegral integrate_spectrum(const ReflectivityPair& refl, double a,
                                    std::span<const double> epsilons, double quad_tol = 1e-10);

} // namespace casimir
