#pragma once

#include <stdexcept>

namespace casimir {

/// Constant (frequency- and angle-independent) reflection coefficients for the
/// two bodies, one per polarization. On the imaginary frequency axis these are
/// real numbers with |r| <= 1; the force formulas only ever see the products
/// rho_sigma = r_sigma^(1) * r_sigma^(2).
struct ReflectivityPair {
    double r_s_1 = 0.0;
    double r_p_1 = 0.0;
    double r_s_2 = 0.0;
    double r_p_2 = 0.0;

    static ReflectivityPair uniform(double r) { return {r, r, r, r}; }

    double rho_s() const { return r_s_1 * r_s_2; }
    double rho_p() const { return r_p_1 * r_p_2; }

    /// True when either polarization product is negative (one mirror
    /// dielectric-like, the other magnetic-like); such cavities can repel.
    bool repulsive_capable() const { return rho_s() < 0.0 || rho_p() < 0.0; }

    void validate() const {
        auto ok = [](double r) { return r >= -1.0 && r <= 1.0; };
        if (!ok(r_s_1) || !ok(r_p_1) || !ok(r_s_2) || !ok(r_p_2))
            throw std::domain_error("ReflectivityPair: every |r| must be <= 1");
    }
};

/// Plate separation and temperature in natural units (hbar = k_B = c = 1).
/// Lengths carry the only dimension: a has units of L, T of 1/L, and the
/// dimensionless product a*T controls every regime decision.
struct CavityState {
    double a = 1.0;
    double T = 0.0;

    double aT() const { return a * T; }

    void validate() const {
        if (!(a > 0.0)) throw std::domain_error("CavityState: separation a must be > 0");
        if (!(T >= 0.0)) throw std::domain_error("CavityState: temperature T must be >= 0");
    }
};

} // namespace casimir
