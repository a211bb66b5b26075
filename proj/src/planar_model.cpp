#include "casimir/planar_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casimir/polylog.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

double li(int nu, double x) { return li_real(nu, x, 1e-15).value; }

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double li4_sum(const ReflectivityPair& refl) {
    double s = 0.0;
    if (refl.rho_s() != 0.0) s += li(4, refl.rho_s());
    if (refl.rho_p() != 0.0) s += li(4, refl.rho_p());
    return s;
}

// W(x) - 1, evaluated without cancellation; <= (4x+2) e^{-2x} / (1-e^{-2x})^2.
double wronskian_minus_one(double x) {
    if (x > 350.0) return 0.0;
    const double sh = std::sinh(x);
    return x / (sh * sh) + 2.0 / std::expm1(2.0 * x);
}

// Bound on the Matsubara bracket (s+1)-type tail starting at mode m1:
//   b(m) = (c1*s_m + 1) * amp * e^{-s_m} / (1 - arho * e^{-s_m}),  s_m = m * ds.
// The ratio of consecutive bounds is below (1 + ds/(s+1)) e^{-ds} < 1, so the
// full tail is b(m1) / (1 - r).
double linear_poly_tail(int m1, double ds, double amp, double arho) {
    const double s1 = m1 * ds;
    const double e1 = std::exp(-s1);
    const double b1 = (s1 + 1.0) * amp * e1 / (1.0 - arho * e1);
    const double r = (1.0 + ds / (s1 + 1.0)) * std::exp(-ds);
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return b1 / (1.0 - r);
}

} // namespace

double coth_wronskian(double x) {
    if (!(x > 0.0)) throw std::domain_error("coth_wronskian: x must be > 0");
    return 1.0 + wronskian_minus_one(x);
}

double pressure_zero_t(const ReflectivityPair& refl, double a) {
    refl.validate();
    if (!(a > 0.0)) throw std::domain_error("pressure_zero_t: a must be > 0");
    const double a2 = a * a;
    return -3.0 * li4_sum(refl) / (16.0 * pi * pi * a2 * a2);
}

double free_energy_zero_t(const ReflectivityPair& refl, double a) {
    refl.validate();
    if (!(a > 0.0)) throw std::domain_error("free_energy_zero_t: a must be > 0");
    return -li4_sum(refl) / (16.0 * pi * pi * a * a * a);
}

ThermalSeries free_energy_matsubara(const ReflectivityPair& refl, const CavityState& state,
                                    double tol) {
    refl.validate();
    state.validate();
    if (!(state.T > 0.0))
        throw std::domain_error("free_energy_matsubara: requires T > 0 (use free_energy_zero_t)");
    if (!(tol > 0.0)) throw std::invalid_argument("free_energy_matsubara: tol must be > 0");

    const double a = state.a;
    const double T = state.T;
    const double pref = T / (8.0 * pi * a * a);
    const double ds = 4.0 * pi * a * T;  // step of s_m = 2 zeta_m a

    ThermalSeries out;
    Kahan total;
    double tail = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        const double arho = std::abs(rho);
        const double li3_arho = li(3, arho);
        Kahan sum;
        for (long m = 0;; ++m) {
            const double s = m * ds;
            const double x = rho * std::exp(-s);
            const double bracket = (m == 0) ? li(3, x) : s * li(2, x) + li(3, x);
            sum.add((m == 0 ? 0.5 : 1.0) * bracket);
            ++out.terms_used;
            if (m >= 4) {
                const double t = linear_poly_tail(m + 1, ds, li3_arho, arho);
                // absolute target plus a relative floor so large separations
                // (tiny |F|) keep full relative accuracy
                if (t < 0.5 * tol / pref && t < 1e-13 * std::abs(sum.sum)) {
                    tail += t;
                    break;
                }
            }
            if (m > 10000000)
                throw std::runtime_error("free_energy_matsubara: Matsubara sum did not truncate");
        }
        total.add(sum.sum);
    }
    out.value = -pref * total.sum;
    out.tail_bound = pref * tail;
    return out;
}

ThermalSeries free_energy_geometric(const ReflectivityPair& refl, const CavityState& state,
                                    double tol) {
    refl.validate();
    state.validate();
    if (!(state.T > 0.0)) throw std::domain_error("free_energy_geometric: requires T > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("free_energy_geometric: tol must be > 0");

    const double a = state.a;
    const double T = state.T;
    const double pref = T / (16.0 * pi * a * a);
    const double dx = 2.0 * pi * a * T;  // step of x_k = zeta_k a

    ThermalSeries out;
    Kahan total;
    double tail = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        const double arho = std::abs(rho);
        // sum_k rho^k k^-3 W(x_k) = Li_3(rho) + sum_k rho^k k^-3 (W(x_k) - 1);
        // the correction summand decays like e^{-2 x_k} and handles rho = 1.
        Kahan sum;
        sum.add(li(3, rho));
        double pk = 1.0;
        for (long k = 1;; ++k) {
            pk *= rho;
            const double x = k * dx;
            sum.add(pk * wronskian_minus_one(x) / (static_cast<double>(k) * k * k));
            ++out.terms_used;
            if (k >= 5) {
                const double x1 = (k + 1) * dx;
                const double e1 = std::exp(-2.0 * x1);
                const double k1 = static_cast<double>(k + 1);
                const double om = -std::expm1(-2.0 * x1);  // 1 - e^{-2 x1}
                const double b1 =
                    std::pow(arho, k1) * (4.0 * x1 + 2.0) * e1 / (k1 * k1 * k1 * om * om);
                const double r = arho * (1.0 + 4.0 * dx / (4.0 * x1 + 2.0)) * std::exp(-2.0 * dx);
                const double t = (r < 1.0) ? b1 / (1.0 - r) : std::numeric_limits<double>::infinity();
                if (t < 0.5 * tol / pref && t < 1e-13 * std::abs(sum.sum)) {
                    tail += t;
                    break;
                }
            }
            if (k > 10000000)
                throw std::runtime_error("free_energy_geometric: round-trip sum did not truncate");
        }
        total.add(sum.sum);
    }
    out.value = -pref * total.sum;
    out.tail_bound = pref * tail;
    return out;
}

ThermalSeries pressure_thermal(const ReflectivityPair& refl, const CavityState& state, double tol) {
    refl.validate();
    state.validate();
    if (!(state.T > 0.0)) throw std::domain_error("pressure_thermal: requires T > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("pressure_thermal: tol must be > 0");

    const double a = state.a;
    const double T = state.T;
    const double pref = T / (4.0 * pi * a * a * a);
    const double du = 2.0 * pi * a * T;  // step of u_m = zeta_m a

    ThermalSeries out;
    Kahan total;
    double tail = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho == 0.0) continue;
        const double arho = std::abs(rho);
        Kahan sum;
        for (long m = 0;; ++m) {
            const double u = m * du;
            const double x = rho * std::exp(-2.0 * u);
            // the Li_1 coefficient 2u^2 vanishes at m = 0, where x may reach 1
            const double bracket =
                (m == 0) ? li(3, x) : li(3, x) + 2.0 * u * (li(2, x) + u * li(1, x));
            sum.add((m == 0 ? 0.5 : 1.0) * bracket);
            ++out.terms_used;
            if (m >= 4) {
                const double u1 = (m + 1) * du;
                const double e1 = std::exp(-2.0 * u1);
                const double p2 = 1.0 + 2.0 * u1 + 2.0 * u1 * u1;
                const double b1 = p2 * arho * e1 / (1.0 - arho * e1);
                const double r =
                    (1.0 + 2.0 * du * (1.0 + 2.0 * u1 + du) / p2) * std::exp(-2.0 * du);
                const double t = (r < 1.0) ? b1 / (1.0 - r) : std::numeric_limits<double>::infinity();
                if (t < 0.5 * tol / pref && t < 1e-13 * std::abs(sum.sum)) {
                    tail += t;
                    break;
                }
            }
            if (m > 10000000)
                throw std::runtime_error("pressure_thermal: Matsubara sum did not truncate");
        }
        total.add(sum.sum);
    }
    out.value = -pref * total.sum;
    out.tail_bound = pref * tail;
    return out;
}

double entropy(const ReflectivityPair& refl, const CavityState& state) {
    refl.validate();
    state.validate();
    if (!(state.T > 0.0)) throw std::domain_error("entropy: requires T > 0");

    const double a = state.a;
    const double T = state.T;
    if (state.aT() < 5e-4) {
        // central differencing of F would sit below the round-off floor here;
        // use the term-by-term T-derivative of the low-temperature expansions
        double s = 0.0;
        for (double rho : {refl.rho_s(), refl.rho_p()}) {
            if (rho == 0.0) continue;
            if (std::abs(rho) == 1.0)
                s += 3.0 * zeta_int(3) * T * T / (4.0 * pi) - 2.0 * pi * pi * a * T * T * T / 45.0;
            else
                s += 4.0 * pi * pi * a * T * T * T / 45.0 * rho / (1.0 - rho);
        }
        return s;
    }
    const double h = T * 1e-4;
    const double fp = free_energy_matsubara(refl, {a, T + h}, 1e-18).value;
    const double fm = free_energy_matsubara(refl, {a, T - h}, 1e-18).value;
    return -(fp - fm) / (2.0 * h);
}

Asymptote free_energy_high_t(const ReflectivityPair& refl, const CavityState& state) {
    refl.validate();
    state.validate();
    double s = 0.0;
    if (refl.rho_s() != 0.0) s += li(3, refl.rho_s());
    if (refl.rho_p() != 0.0) s += li(3, refl.rho_p());
    return {-state.T / (16.0 * pi * state.a * state.a) * s, state.aT() <= 0.5};
}

double free_energy_low_t(const ReflectivityPair& refl, const CavityState& state) {
    refl.validate();
    state.validate();
    double geom = 0.0;
    for (double rho : {refl.rho_s(), refl.rho_p()}) {
        if (rho >= 1.0)
            throw std::domain_error("free_energy_low_t: expansion invalid at rho = 1 "
                                    "(see ideal_conductor_expansion)");
        geom += rho / (1.0 - rho);
    }
    const double T = state.T;
    const double corr = pi * pi * state.a * T * T * T * T / 45.0 * geom;
    return free_energy_zero_t(refl, state.a) - corr;
}

AsymptoticSeries asymptotic_series(const ReflectivityPair& refl, const CavityState& state,
                                   int max_order) {
    refl.validate();
    state.validate();
    if (max_order < 0 || max_order > 20)
        throw std::out_of_range("asymptotic_series: max_order must lie in [0, 20]");
    for (double rho : {refl.rho_s(), refl.rho_p()})
        if (std::abs(rho) >= 1.0)
            throw std::domain_error("asymptotic_series: requires |rho| < 1 for every polarization");

    const double a = state.a;
    const double pref = 1.0 / (16.0 * pi * pi * a * a * a);
    const double y = 4.0 * pi * a * state.T;

    AsymptoticSeries out;
    double fact = 1.0;  // (2k)!
    double yp = 1.0;    // y^{2k}
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            yp *= y * y;
        }
        double li_sum = 0.0;
        for (double rho : {refl.rho_s(), refl.rho_p()})
            if (rho != 0.0) li_sum += li_real(4 - 2 * k, rho, 1e-15).value;
        const double term = pref * (k - 1) * bernoulli(2 * k).to_double() / fact * li_sum * yp;
        out.terms.push_back({2 * k, term});
    }

    // optimal truncation: cut at the smallest nonzero term past the T^2 slot
    int k_min = static_cast<int>(out.terms.size()) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 2; k < out.terms.size(); ++k) {
        const double m = std::abs(out.terms[k].value);
        if (m > 0.0 && m < best) {
            best = m;
            k_min = static_cast<int>(k);
        }
    }
    Kahan sum;
    for (int k = 0; k <= k_min; ++k) sum.add(out.terms[static_cast<std::size_t>(k)].value);
    out.truncated_sum = sum.sum;
    out.truncation_order = 2 * k_min;
    for (std::size_t k = static_cast<std::size_t>(k_min) + 1; k < out.terms.size(); ++k)
        if (std::abs(out.terms[k].value) > best) out.diverging = true;
    return out;
}

Asymptote ideal_conductor_expansion(const CavityState& state) {
    state.validate();
    const double a = state.a;
    const double T = state.T;
    const double value = -pi * pi / (720.0 * a * a * a) - zeta_int(3) * T * T * T / (2.0 * pi) +
                         pi * pi * a * T * T * T * T / 45.0;
    return {value, state.aT() > 0.3};
}

} // namespace casimir
