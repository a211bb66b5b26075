#include "casimir/verification.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/oracle.hpp"
#include "casimir/planar_model.hpp"
#include "casimir/spectrum.hpp"

namespace casimir::cli {

namespace {

constexpr double pi = std::numbers::pi;

double rel_dev(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got / want - 1.0);
}

struct Runner {
    const VerifyOptions& opt;
    VerifyReport report;

    bool wanted(const std::string& name) const {
        return opt.only.empty() || name.rfind(opt.only, 0) == 0;
    }

    void add(const std::string& name, double dev, double default_threshold) {
        if (!wanted(name)) return;
        CheckResult c;
        c.name = name;
        c.max_rel_dev = dev;
        c.threshold = opt.tol_override > 0.0 ? opt.tol_override : default_threshold;
        c.pass = dev <= c.threshold;
        report.all_pass = report.all_pass && c.pass;
        report.checks.push_back(c);
    }
};

} // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
    Runner run{opt, {}};
    oracle::QuadratureConfig cfg;
    cfg.rel_tol = opt.quad_rel_tol;

    // closed forms vs direct double quadrature of the zero-T Lifshitz integrals
    if (run.wanted("closed-form")) {
        double worst_p = 0.0, worst_f = 0.0;
        for (double rho : {0.1, 0.25, 0.5, 0.81, 0.99}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
            for (double a : {0.5, 1.0, 2.0}) {
                worst_p = std::max(worst_p, rel_dev(oracle::pressure_zero_t_quadrature(refl, a, cfg),
                                                    pressure_zero_t(refl, a)));
                worst_f = std::max(worst_f,
                                   rel_dev(oracle::free_energy_zero_t_quadrature(refl, a, cfg),
                                           free_energy_zero_t(refl, a)));
            }
        }
        run.add("closed-form/pressure", worst_p, 1e-8);
        run.add("closed-form/free-energy", worst_f, 1e-8);
    }

    // Matsubara sum vs round-trip sum vs per-mode quadrature
    if (run.wanted("dual-representation")) {
        double worst_dual = 0.0, worst_quad = 0.0;
        for (double rho : {0.1, 0.5, 0.9}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
            for (double at : {0.01, 0.1, 1.0, 5.0}) {
                const CavityState st{1.0, at};
                const double fm = free_energy_matsubara(refl, st, 1e-15).value;
                const double fg = free_energy_geometric(refl, st, 1e-15).value;
                worst_dual = std::max(worst_dual, rel_dev(fm, fg));
                worst_quad = std::max(
                    worst_quad, rel_dev(oracle::free_energy_matsubara_quadrature(refl, st, cfg), fm));
            }
        }
        run.add("dual-representation/matsubara-vs-geometric", worst_dual, 1e-10);
        run.add("dual-representation/vs-quadrature", worst_quad, 1e-8);
    }

    if (run.wanted("thermodynamics")) {
        // analytic thermal pressure against -dF/da
        double worst_p = 0.0;
        for (double rho : {0.25, 0.81}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
            for (double at : {0.05, 0.5, 2.0}) {
                const CavityState st{1.0, at};
                const double p = pressure_thermal(refl, st, 1e-15).value;
                const double fd = -oracle::finite_difference(
                    [&](double a) {
                        return free_energy_matsubara(refl, {a, at}, 1e-18).value;
                    },
                    1.0, 1e-5, 1);
                worst_p = std::max(worst_p, rel_dev(p, fd));
            }
        }
        run.add("thermodynamics/pressure-derivative", worst_p, 1e-6);

        // entropy stays positive on the scan grid ...
        double most_negative = 0.0;
        double scale = 0.0;
        for (double rho : {0.25, 0.5, 0.9}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
            for (int j = 0; j <= 16; ++j) {
                const double at = 1e-3 * std::pow(10.0, j / 4.0);
                const double s = entropy(refl, {1.0, at});
                most_negative = std::min(most_negative, s);
                scale = std::max(scale, std::abs(s));
            }
        }
        run.add("thermodynamics/entropy-positivity", scale > 0.0 ? -most_negative / scale : 0.0,
                1e-9);

        // ... and vanishes toward T = 0 no faster than Nernst allows
        double worst_nernst = 0.0;
        for (double rho : {0.25, 0.9}) {
            const ReflectivityPair refl = ReflectivityPair::uniform(std::sqrt(rho));
            const double t3 = 1e-9;
            const double pred = 4.0 * pi * pi * t3 / 45.0 * 2.0 * rho / (1.0 - rho);
            worst_nernst = std::max(worst_nernst, std::abs(entropy(refl, {1.0, 1e-3})) / (10.0 * pred));
        }
        run.add("thermodynamics/nernst", worst_nernst, 1.0);
    }

    if (run.wanted("spectrum")) {
        const ReflectivityPair ideal = ReflectivityPair::uniform(1.0);
        run.add("spectrum/density-at-pi",
                rel_dev(spectral_density(ideal, 1.0, pi).density_s, -pi / 96.0), 1e-10);

        const double delta = 1e-7;
        const double jump = spectral_density(ideal, 1.0, 2.0 * pi + delta).density_s -
                            spectral_density(ideal, 1.0, 2.0 * pi - delta).density_s;
        run.add("spectrum/jump-at-2pi", rel_dev(jump, pi / 4.0), 1e-6);

        const ReflectivityPair half = ReflectivityPair::uniform(std::sqrt(0.5));
        const std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
        const double integrated = integrate_spectrum(half, 1.0, eps).pressure;
        run.add("spectrum/integral", rel_dev(integrated, pressure_zero_t(half, 1.0)), 1e-4);
    }

    return run.report;
}

std::string verify_report_text(const VerifyReport& report) {
    std::string s;
    for (const CheckResult& c : report.checks) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-48s max rel dev %11.3e  threshold %.1e  %s\n",
                      c.name.c_str(), c.max_rel_dev, c.threshold, c.pass ? "PASS" : "FAIL");
        s += buf;
    }
    s += report.all_pass ? "verification: all checks passed\n" : "verification: FAILURES present\n";
    return s;
}

} // namespace casimir::cli
