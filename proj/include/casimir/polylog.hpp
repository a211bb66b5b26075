#pragma once

#include <complex>

#include "casimir/rational.hpp"

namespace casimir {

/// Default absolute tolerance for polylogarithm evaluation. Four digits of
/// headroom over the 1e-8 cross-validation thresholds used downstream.
inline constexpr double kPolylogTol = 1e-12;

/// Value plus a bound on the truncation error of the method that produced it.
/// For real arguments in (-1, 1) and order >= 1 the value is real.
struct PolylogResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

struct ComplexPolylogResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error_bound = 0.0;
};

/// Riemann zeta at integer argument. n >= 2 by series with Euler-Maclaurin
/// tail (even n <= 40 via the exact Bernoulli relation), zeta(0) = -1/2,
/// zeta(-2k) = 0, zeta(1-2k) = -B_2k/(2k). Throws at the pole n = 1 and for
/// negative odd arguments below the Bernoulli table (n < -39).
double zeta_int(int n);

/// Exact Bernoulli number B_k for even k in [0, 40].
Rational bernoulli(int k);

/// Li_nu(x) for integer order nu in [-60, 6] and real |x| <= 1.
/// Negative orders use the exact rational closed forms (|x| < 1 required,
/// pole at x = 1); nu = 1 is -log(1-x); nu >= 2 sums the defining series with
/// a rigorous geometric tail bound, switching to the Robinson expansion when
/// x is within 1e-2 of the branch point. Li_nu(1) = zeta(nu) for nu >= 2.
PolylogResult li_real(int nu, double x, double tol = kPolylogTol);

/// Li_nu(r2 * e^{i*xi}) for nu in [1, 6], 0 <= r2 <= 1, any real phase xi.
/// nu = 1 is the closed form -log(1-z) (singular at z = 1). Higher orders sum
/// the series for r2 <= 0.995 and otherwise reduce the phase to [0, pi] and
/// evaluate the Robinson expansion with complex argument tau = -ln r2 - i*xi.
ComplexPolylogResult li_unit_circle(int nu, double r2, double xi, double tol = kPolylogTol);

/// Robinson's small-argument expansion of Li_n(e^{-tau}) truncated at the
/// given power of tau (the logarithmic term sits at power n-1). Requires
/// n in [1, 6], 0 < tau < 2*pi and n-1 <= order <= 38. The reported bound is
/// the magnitude of the first omitted term.
PolylogResult robinson_expansion(int n, double tau, int order);

} // namespace casimir
