#pragma once

#include <functional>

#include "casimir/types.hpp"

namespace casimir::oracle {

/// Brute-force verification side. Everything in this namespace evaluates the
/// Lifshitz integrands directly with exp/log primitives and adaptive
/// Gauss-Kronrod quadrature; none of it may call the polylog or planar_model
/// closed forms, or the cross-validation would be circular.

enum class Mapping {
    exponential,  // kappa = zeta - ln(u)/(2a), u in (0, 1]
    rational,     // kappa = zeta + t/(1-t),    t in [0, 1)
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-280;  // effectively off: the integrals set their own scale
    int max_subdivisions = 20000;
    Mapping mapping = Mapping::exponential;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::domain_error("QuadratureConfig: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw std::domain_error("QuadratureConfig: max_subdivisions must be >= 1");
    }
};

/// Double quadrature of the zero-temperature Lifshitz pressure
///   P0 = -(1/2 pi^2) int_0^inf dzeta int_zeta^inf dkappa kappa^2
///        sum_sigma rho e^{-2 kappa a} / (1 - rho e^{-2 kappa a}).
/// With swap_order the triangular domain is integrated kappa-outermost.
double pressure_zero_t_quadrature(const ReflectivityPair& refl, double a,
                                  const QuadratureConfig& cfg = {}, bool swap_order = false);

/// Double quadrature of the zero-temperature free energy
///   F0 = (1/4 pi^2) int_0^inf dzeta int_zeta^inf dkappa kappa
///        sum_sigma ln[1 - rho e^{-2 kappa a}].
double free_energy_zero_t_quadrature(const ReflectivityPair& refl, double a,
                                     const QuadratureConfig& cfg = {}, bool swap_order = false);

/// Per-mode quadrature of the Matsubara free energy
///   F = (T/2 pi) sum'_m int_{zeta_m}^inf dkappa kappa ln(1 - rho e^{-2 kappa a}).
double free_energy_matsubara_quadrature(const ReflectivityPair& refl, const CavityState& state,
                                        const QuadratureConfig& cfg = {});

/// Central difference: order 1 gives f'(x), order 2 gives f''(x). Throws when
/// the step no longer moves x or the difference drowns in rounding noise.
double finite_difference(const std::function<double(double)>& f, double x, double h, int order);

} // namespace casimir::oracle
