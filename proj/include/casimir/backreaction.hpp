#pragma once

#include <span>

#include "casimir/types.hpp"

namespace casimir {

enum class Polarization { s, p };

/// Constant generalized susceptibility: the (scalar) ability of a body to
/// raise its reflectivity in response to the generalized force. Non-negative
/// by convention; chi multiplies the aggregated force squared in the one-loop
/// correction, which fixes its normalization.
struct SusceptibilityScalar {
    double chi = 0.0;
    void validate() const {
        if (!(chi >= 0.0)) throw std::domain_error("SusceptibilityScalar: chi must be >= 0");
    }
};

struct FlowState {
    ReflectivityPair r_current;
    int iteration = 0;
    bool converged = false;
    bool capped = false;  // some |r| clamped at 1
};

struct ScalingFit {
    double exponent = 0.0;
    double residual = 0.0;  // max |fit - data| in log space
};

/// Generalized force conjugate to r_sigma^(i), Phi = -dF_sigma/dr^(i),
/// evaluated at finite temperature as
///   (T/8 pi a^2) r^(j) sum'_m e^{-2 zeta_m a} [2 a zeta_m S_1(x_m) + S_2(x_m)]
/// with S_nu(x) = Li_nu(x)/x, which is analytic at x = 0 so the formula
/// survives r^(i) -> 0. Reduces to Li_3(rho)/(16 pi^2 a^3 r^(i)) as T -> 0
/// and to T Li_2(rho)/(16 pi a^2 r^(i)) for aT >> 1.
double generalized_force(const ReflectivityPair& refl, const CavityState& state, int body_index,
                         Polarization pol, double tol = 1e-12);

/// One-loop free-energy correction from reflectivity back-reaction,
///   dF = -chi sum_sigma sum_i [Phi_sigma^(i)]^2  (always <= 0).
double one_loop_correction(const ReflectivityPair& refl, const CavityState& state,
                           SusceptibilityScalar chi, double tol = 1e-12);

/// Fixed-point iteration r^(i) <- min(1, r^(i) + chi Phi^(i)(r)) for both
/// bodies and polarizations. |r| stays bounded by 1 and, for positive
/// reflectivities, grows monotonically, so the iteration converges (possibly
/// onto the cap). Returns the last state with converged=false if max_iter is
/// exhausted first.
FlowState reflectivity_flow(const ReflectivityPair& initial, const CavityState& state,
                            SusceptibilityScalar chi, double tol, int max_iter);

/// Least-squares slope of ln|y| against ln x. Throws when any y vanishes or
/// the points mix signs (degenerate fit).
ScalingFit fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Log-log exponent of the pressure correction dP = -d(dF)/da over the given
/// separation grid, which must span at least a decade inside a single
/// temperature regime (aT <= 0.2 throughout, or aT >= 2 throughout).
/// Falls off as a^-7 for T -> 0 and as a^-5 for aT >> 1.
ScalingFit pressure_correction_scaling(const ReflectivityPair& refl, const CavityState& state,
                                       SusceptibilityScalar chi, std::span<const double> a_grid);

} // namespace casimir
