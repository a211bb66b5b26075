#pragma once

#include <vector>

#include "casimir/types.hpp"

namespace casimir {

/// A truncated thermal sum: value, number of summand evaluations, and a
/// rigorous bound on the omitted (geometrically decaying) tail.
struct ThermalSeries {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

/// Value of an asymptotic formula plus a flag raised when it is being
/// evaluated outside the regime it was derived for.
struct Asymptote {
    double value = 0.0;
    bool regime_warning = false;
};

struct AsymptoticTerm {
    int order = 0;      // power of T (always even)
    double value = 0.0; // both polarizations summed
};

/// Terms of the zero-convergence-radius temperature expansion together with
/// its optimally truncated sum (cut at the smallest-magnitude term).
struct AsymptoticSeries {
    std::vector<AsymptoticTerm> terms;
    double truncated_sum = 0.0;
    int truncation_order = 0;
    bool diverging = false;
};

/// The bracket of the geometric thermal sum, x/sinh^2(x) + coth(x), which is
/// the Wronskian W(coth x, x). Tends to 2/x for small x and to 1 for large x.
double coth_wronskian(double x);

/// Zero-temperature Casimir pressure, -3/(16 pi^2 a^4) * sum_sigma Li_4(rho_sigma).
/// Reproduces -pi^2/(240 a^4) at rho = 1.
double pressure_zero_t(const ReflectivityPair& refl, double a);

/// Zero-temperature free energy per area, -1/(16 pi^2 a^3) * sum_sigma Li_4(rho_sigma).
double free_energy_zero_t(const ReflectivityPair& refl, double a);

/// Finite-temperature free energy per area as the Matsubara sum
///   -(T/8 pi a^2) sum'_m [2 a zeta_m Li_2(x_m) + Li_3(x_m)],
/// x_m = rho e^{-2 zeta_m a}, m = 0 at half weight. Requires T > 0; truncated
/// when the analytic tail bound drops below tol (at least m = 0..4 included).
ThermalSeries free_energy_matsubara(const ReflectivityPair& refl, const CavityState& state,
                                    double tol = 1e-12);

/// Same quantity resummed over round trips,
///   -(T/16 pi a^2) sum_sigma sum_k rho^k k^-3 W(coth x, x)|_{x = zeta_k a},
/// valid up to |rho| = 1. Evaluated as Li_3(rho) plus an exponentially
/// convergent correction sum in W - 1.
ThermalSeries free_energy_geometric(const ReflectivityPair& refl, const CavityState& state,
                                    double tol = 1e-12);

/// Thermal Casimir pressure, the analytic -dF/da of the Matsubara form:
///   -(T/4 pi a^3) sum_sigma sum'_m [Li_3(x_m) + 2 zeta_m a Li_2(x_m) + 2 (zeta_m a)^2 Li_1(x_m)].
ThermalSeries pressure_thermal(const ReflectivityPair& refl, const CavityState& state,
                               double tol = 1e-12);

/// Entropy per area S = -dF/dT by central differencing of the Matsubara sum
/// (step T * 1e-4). Below aT = 5e-4, where differencing hits the round-off
/// floor, the term-by-term derivative of the low-temperature expansion is
/// used instead. Vanishes as T -> 0 whenever |rho| < 1 (Nernst).
double entropy(const ReflectivityPair& refl, const CavityState& state);

/// High-temperature asymptote -(T/16 pi a^2) sum_sigma Li_3(rho_sigma),
/// trustworthy for 2 pi a T >> 1; warns when aT <= 1/2.
Asymptote free_energy_high_t(const ReflectivityPair& refl, const CavityState& state);

/// Two-term low-temperature expansion for |rho| < 1:
///   F0 - (pi^2 a T^4 / 45) sum_sigma rho/(1-rho) + O(T^6).
/// Rejects rho = 1, where the expansion changes character (see
/// ideal_conductor_expansion).
double free_energy_low_t(const ReflectivityPair& refl, const CavityState& state);

/// Full temperature expansion
///   F = (1/16 pi^2 a^3) sum_k ((k-1) B_2k / (2k)!) sum_sigma Li_{4-2k}(rho_sigma) (4 pi a T)^{2k}
/// up to k = max_order (max_order <= 20). The series has zero convergence
/// radius: `diverging` is set once term magnitudes start growing.
AsymptoticSeries asymptotic_series(const ReflectivityPair& refl, const CavityState& state,
                                   int max_order);

/// Ideal-conductor (rho = 1, both polarizations) low-temperature behaviour
///   -pi^2/(720 a^3) - zeta(3) T^3 / (2 pi) + pi^2 a T^4 / 45,
/// exact up to exponentially small corrections; warns above aT = 0.3.
Asymptote ideal_conductor_expansion(const CavityState& state);

} // namespace casimir
