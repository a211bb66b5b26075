#include "casimir/polylog.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Even-index Bernoulli numbers B_0, B_2, ..., B_40 as reduced rationals.
// The numerators of B_36 and B_40 exceed 64 bits, hence the decimal strings.
struct BernoulliEntry {
    const char* num;
    long long den;
};
constexpr std::array<BernoulliEntry, 21> kBernoulliTable{{
    {"1", 1},
    {"1", 6},
    {"-1", 30},
    {"1", 42},
    {"-1", 30},
    {"5", 66},
    {"-691", 2730},
    {"7", 6},
    {"-3617", 510},
    {"43867", 798},
    {"-174611", 330},
    {"854513", 138},
    {"-236364091", 2730},
    {"8553103", 6},
    {"-23749461029", 870},
    {"8615841276005", 14322},
    {"-7709321041217", 510},
    {"2577687858367", 6},
    {"-26315271553053477373", 1919190},
    {"2929993913841559", 6},
    {"-261082718496449122051", 13530},
}};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// zeta(n) for n >= 2 by direct summation plus Euler-Maclaurin tail.
double zeta_euler_maclaurin(int n) {
    if (n >= 64) return 1.0 + std::pow(2.0, -n) + std::pow(3.0, -n);
    const int K = 24;
    double s = 0.0;
    for (int k = K - 1; k >= 1; --k) s += std::pow(static_cast<double>(k), -n);
    s += std::pow(static_cast<double>(K), 1 - n) / (n - 1);
    s += 0.5 * std::pow(static_cast<double>(K), -n);
    // correction terms B_2j/(2j)! * n(n+1)...(n+2j-2) * K^{-(n+2j-1)}
    double rising = n;
    for (int j = 1; j <= 8; ++j) {
        s += bernoulli(2 * j).to_double() / factorial(2 * j) * rising *
             std::pow(static_cast<double>(K), -(n + 2 * j - 1));
        rising *= static_cast<double>(n + 2 * j - 1) * static_cast<double>(n + 2 * j);
    }
    return s;
}

// Eulerian number triangle A(m, k), rows m = 1..60, used by the closed forms
// for negative-order polylogarithms. Entries are positive and the recurrence
// only adds, so the double-precision rows stay accurate to ~1 ulp per level.
const std::vector<std::vector<double>>& eulerian_rows() {
    static const std::vector<std::vector<double>> rows = [] {
        std::vector<std::vector<double>> r;
        r.reserve(61);
        r.push_back({});      // m = 0 unused
        r.push_back({1.0});   // A(1,0) = 1
        for (int m = 2; m <= 60; ++m) {
            std::vector<double> row(m, 0.0);
            const std::vector<double>& prev = r.back();
            for (int k = 0; k < m; ++k) {
                double a = (k < m - 1) ? (k + 1) * prev[k] : 0.0;
                double b = (k > 0) ? (m - k) * prev[k - 1] : 0.0;
                row[k] = a + b;
            }
            r.push_back(std::move(row));
        }
        return r;
    }();
    return rows;
}

// Li_{-m}(x) = sum_k A(m,k) x^{m-k} / (1-x)^{m+1}, exact rational form.
double li_negative_order(int m, double x) {
    if (m == 0) return x / (1.0 - x);
    const std::vector<double>& row = eulerian_rows()[m];
    // Horner in x: P(x) = sum_{j=1}^{m} A(m, m-j) x^j
    double p = 0.0;
    for (int j = m; j >= 1; --j) p = (p + row[m - j]) * x;
    return p / std::pow(1.0 - x, m + 1);
}

struct SeriesSum {
    double re = 0.0;
    double im = 0.0;
    double bound = 0.0;
};

// Defining series for |z| < 1, Kahan-compensated, with the geometric tail
// bound |z|^{K+1} / ((1-|z|) (K+1)^nu).
SeriesSum li_series(int nu, double zre, double zim, double tol) {
    const double mag = std::hypot(zre, zim);
    double sre = 0.0, sim = 0.0, cre = 0.0, cim = 0.0;
    double pre = 1.0, pim = 0.0;  // z^k
    double magk = 1.0;
    const long max_terms = 2000000;
    double bound = 0.0;
    for (long k = 1; k <= max_terms; ++k) {
        double t = pre * zre - pim * zim;
        pim = pre * zim + pim * zre;
        pre = t;
        magk *= mag;
        const double scale = std::pow(static_cast<double>(k), -nu);
        // Kahan step, both components
        double yre = pre * scale - cre;
        double tre = sre + yre;
        cre = (tre - sre) - yre;
        sre = tre;
        double yim = pim * scale - cim;
        double tim = sim + yim;
        cim = (tim - sim) - yim;
        sim = tim;
        bound = magk * mag / ((1.0 - mag) * std::pow(static_cast<double>(k + 1), nu));
        if (bound <= tol || magk == 0.0) break;
    }
    return {sre, sim, bound + 4.0 * 1e-16 * std::hypot(sre, sim)};
}

struct RobinsonEval {
    std::complex<double> value;
    double bound;
};

// Robinson expansion of Li_n(e^{-tau}) for complex tau, |tau| < 2*pi:
//   (-tau)^{n-1}/(n-1)! [H_{n-1} - ln tau] + sum_{k>=0, k!=n-1} zeta(n-k) (-tau)^k / k!
// Terms decay geometrically in pairs with ratio (|tau|/2pi)^2 once k passes n.
RobinsonEval robinson_sum(int n, std::complex<double> tau, double tol) {
    if (std::abs(tau) == 0.0) {
        if (n >= 2) return {{zeta_int(n), 0.0}, 0.0};
        throw std::domain_error("li: logarithmic singularity at z = 1");
    }
    const double q = std::norm(tau) / (two_pi * two_pi);
    if (!(q < 1.0)) throw std::domain_error("robinson: |tau| must be below 2*pi");

    double harmonic = 0.0;
    for (int k = 1; k <= n - 1; ++k) harmonic += 1.0 / k;

    std::complex<double> mtau = -tau;
    std::complex<double> mtau_pow{1.0, 0.0};  // (-tau)^{n-1}
    for (int k = 0; k < n - 1; ++k) mtau_pow *= mtau;
    std::complex<double> value = mtau_pow / factorial(n - 1) * (harmonic - std::log(tau));

    const int k_cap = n + 39;  // keeps zeta_int(n-k) inside the Bernoulli table
    std::complex<double> pw{1.0, 0.0};  // (-tau)^k / k!
    double absum = std::abs(value);
    double last_nonzero = 0.0;
    int small_streak = 0;
    int k = 0;
    for (; k <= k_cap; ++k) {
        if (k > 0) pw *= mtau / static_cast<double>(k);
        if (k == n - 1) continue;
        const double z = zeta_int(n - k);
        if (z != 0.0) {
            std::complex<double> term = z * pw;
            value += term;
            absum += std::abs(term);
            last_nonzero = std::abs(term);
            small_streak = (last_nonzero < 0.25 * tol) ? small_streak + 1 : 0;
            if (k > n + 2 && small_streak >= 2) break;
        }
    }
    double bound = 2.0 * last_nonzero * q / (1.0 - q) + 8e-16 * absum;
    if (k > k_cap && last_nonzero >= 0.25 * tol) bound = 2.0 * last_nonzero / (1.0 - q) + 8e-16 * absum;
    return {value, bound};
}

void check_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("polylog: tolerance must be > 0");
}

} // namespace

Rational bernoulli(int k) {
    if (k < 0 || k > 40 || k % 2 != 0)
        throw std::out_of_range("bernoulli: need even k in [0, 40]");
    const BernoulliEntry& e = kBernoulliTable[static_cast<std::size_t>(k / 2)];
    return Rational(std::string(e.num), e.den);
}

double zeta_int(int n) {
    if (n == 1) throw std::domain_error("zeta_int: pole at n = 1");
    if (n >= 2) {
        if (n % 2 == 0 && n <= 40) {
            // zeta(2k) = |B_2k| (2*pi)^{2k} / (2 (2k)!)
            double b = std::abs(bernoulli(n).to_double());
            return b * std::pow(two_pi, n) / (2.0 * factorial(n));
        }
        return zeta_euler_maclaurin(n);
    }
    if (n == 0) return -0.5;
    if ((-n) % 2 == 0) return 0.0;  // trivial zeros
    const int twok = 1 - n;
    if (twok > 40) throw std::out_of_range("zeta_int: argument below the Bernoulli table");
    return -bernoulli(twok).to_double() / twok;
}

PolylogResult li_real(int nu, double x, double tol) {
    check_tol(tol);
    if (nu < -60 || nu > 6) throw std::out_of_range("li_real: order must lie in [-60, 6]");
    if (std::abs(x) > 1.0) throw std::domain_error("li_real: |x| must be <= 1");

    if (nu <= 0) {
        if (std::abs(x) >= 1.0)
            throw std::domain_error("li_real: closed forms for nu <= 0 require |x| < 1");
        double v = li_negative_order(-nu, x);
        return {v, 4e-16 * std::abs(v)};
    }
    if (nu == 1) {
        if (x == 1.0) throw std::domain_error("li_real: Li_1 diverges at x = 1");
        double v = -std::log1p(-x);
        return {v, 4e-16 * std::abs(v)};
    }

    // nu >= 2
    if (x == 1.0) return {zeta_int(nu), 0.0};
    if (x == -1.0) {
        double v = -(1.0 - std::pow(2.0, 1 - nu)) * zeta_int(nu);
        return {v, 4e-16 * std::abs(v)};
    }
    if (x > 0.99) {
        RobinsonEval r = robinson_sum(nu, {-std::log(x), 0.0}, tol);
        return {r.value.real(), r.bound};
    }
    if (x < -0.99) {
        // Li_nu(x) = 2^{1-nu} Li_nu(x^2) - Li_nu(-x), both arguments near 1
        RobinsonEval rs = robinson_sum(nu, {-std::log(x * x), 0.0}, 0.5 * tol);
        RobinsonEval rm = robinson_sum(nu, {-std::log(-x), 0.0}, 0.5 * tol);
        double v = std::pow(2.0, 1 - nu) * rs.value.real() - rm.value.real();
        return {v, rs.bound + rm.bound};
    }
    SeriesSum s = li_series(nu, x, 0.0, tol);
    return {s.re, s.bound};
}

ComplexPolylogResult li_unit_circle(int nu, double r2, double xi, double tol) {
    check_tol(tol);
    if (nu < 1 || nu > 6) throw std::out_of_range("li_unit_circle: order must lie in [1, 6]");
    if (!(r2 >= 0.0 && r2 <= 1.0))
        throw std::domain_error("li_unit_circle: modulus r2 must lie in [0, 1]");
    if (r2 == 0.0) return {{0.0, 0.0}, 0.0};

    if (nu == 1) {
        if (r2 == 1.0 && std::remainder(xi, two_pi) == 0.0)
            throw std::domain_error("li_unit_circle: Li_1 singular at z = 1 (xi = 2 pi n)");
        // -log(1-z); 1 - r2*cos(xi) = (1-r2) + 2 r2 sin^2(xi/2) avoids cancellation
        const double s_half = std::sin(0.5 * xi);
        const double wre = (1.0 - r2) + 2.0 * r2 * s_half * s_half;
        const double wim = -r2 * std::sin(xi);
        if (wre == 0.0 && wim == 0.0)
            throw std::domain_error("li_unit_circle: Li_1 singular at z = 1");
        std::complex<double> v{-0.5 * std::log(wre * wre + wim * wim), -std::atan2(wim, wre)};
        return {v, 8e-16 * std::abs(v)};
    }

    if (r2 <= 0.995) {
        SeriesSum s = li_series(nu, r2 * std::cos(xi), r2 * std::sin(xi), tol);
        return {{s.re, s.im}, s.bound};
    }

    // close to the unit circle: reduce the phase to [0, pi] and use Robinson
    double xr = std::remainder(xi, two_pi);
    const bool conjugate = xr < 0.0;
    xr = std::abs(xr);
    if (r2 == 1.0 && xr == 0.0) return {{zeta_int(nu), 0.0}, 0.0};
    RobinsonEval r = robinson_sum(nu, {-std::log(r2), -xr}, tol);
    std::complex<double> v = conjugate ? std::conj(r.value) : r.value;
    return {v, r.bound};
}

PolylogResult robinson_expansion(int n, double tau, int order) {
    if (n < 1 || n > 6) throw std::out_of_range("robinson_expansion: order n must lie in [1, 6]");
    if (!(tau > 0.0 && tau < two_pi))
        throw std::domain_error("robinson_expansion: tau must lie in (0, 2*pi)");
    if (order < n - 1 || order > 38)
        throw std::out_of_range("robinson_expansion: truncation order must lie in [n-1, 38]");

    double harmonic = 0.0;
    for (int k = 1; k <= n - 1; ++k) harmonic += 1.0 / k;

    double value = std::pow(-tau, n - 1) / factorial(n - 1) * (harmonic - std::log(tau));
    double absum = std::abs(value);
    double pw = 1.0;  // (-tau)^k / k!
    for (int k = 0; k <= order; ++k) {
        if (k > 0) pw *= -tau / k;
        if (k == n - 1) continue;
        const double term = zeta_int(n - k) * pw;
        value += term;
        absum += std::abs(term);
    }
    // first omitted term (skip the trivial zeros of zeta), plus rounding slop
    double bound = 8e-16 * absum;
    double pw_next = pw;
    for (int k = order + 1; k <= order + 3 && k <= n + 39; ++k) {
        pw_next *= -tau / k;
        if (k == n - 1) continue;
        double z = zeta_int(n - k);
        if (z != 0.0) {
            bound += std::abs(z * pw_next);
            break;
        }
    }
    return {value, bound};
}

} // namespace casimir
