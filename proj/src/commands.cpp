#include "casimir/commands.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "casimir/backreaction.hpp"
#include "casimir/planar_model.hpp"
#include "casimir/polylog.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

namespace {

constexpr double pi = std::numbers::pi;

// hbar * c in J m; the library is unit-agnostic, SI appears only on output
constexpr double hbar_c_joule_metre = 3.1615267734966903e-26;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

/// Evaluate row(i) for i in [0, n) on `threads` threads; results land in a
/// preallocated vector so output order never depends on scheduling.
void parallel_rows(int n, int threads, const std::function<std::vector<double>(int)>& row,
                   std::vector<std::vector<double>>& rows) {
    rows.assign(static_cast<std::size_t>(n), {});
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = row(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) rows[static_cast<std::size_t>(i)] = row(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

std::vector<std::string> common_meta(const std::string& command, double tol) {
    return {
        std::string("model: ") + kModelVersion,
        "command: " + command,
        "tol: " + out::format_g17(tol),
        "units: natural (hbar = k_B = c = 1); a in L, T in 1/L, F in 1/L^3, P in 1/L^4",
    };
}

} // namespace

out::OutputTable cmd_point(const PointOptions& opt) {
    opt.refl.validate();
    CavityState state{opt.a, opt.T};
    state.validate();

    double f, p, s;
    if (opt.T == 0.0) {
        f = free_energy_zero_t(opt.refl, opt.a);
        p = pressure_zero_t(opt.refl, opt.a);
        s = 0.0;
    } else {
        f = free_energy_matsubara(opt.refl, state, opt.tol).value;
        p = pressure_thermal(opt.refl, state, opt.tol).value;
        s = entropy(opt.refl, state);
    }
    const double a = opt.a;
    const double f_ideal = -pi * pi / (720.0 * a * a * a);
    const double p_ideal = -pi * pi / (240.0 * a * a * a * a);

    out::OutputTable t;
    t.meta = common_meta("point", opt.tol);
    t.meta.push_back(std::string("repulsive_capable: ") +
                     (opt.refl.repulsive_capable() ? "true" : "false"));
    t.columns = {"a",        "T",        "r_s_1",   "r_p_1",
                 "r_s_2",    "r_p_2",    "free_energy", "pressure",
                 "entropy",  "free_energy_ideal_ratio", "pressure_ideal_ratio"};
    std::vector<double> row{opt.a,        opt.T,        opt.refl.r_s_1, opt.refl.r_p_1,
                            opt.refl.r_s_2, opt.refl.r_p_2, f,          p,
                            s,            f / f_ideal,  p / p_ideal};
    if (opt.si_length > 0.0) {
        const double l = opt.si_length;
        t.meta.push_back("si_length_m: " + out::format_g17(l));
        t.columns.push_back("pressure_si_pa");
        t.columns.push_back("free_energy_si_j_m2");
        row.push_back(p * hbar_c_joule_metre / (l * l * l * l));
        row.push_back(f * hbar_c_joule_metre / (l * l * l));
    }
    t.rows.push_back(std::move(row));
    return t;
}

out::OutputTable cmd_fig1(const Fig1Options& opt) {
    SweepSpec spec;
    spec.variable = SweepVariable::reflectivity;
    spec.start = 0.0;
    spec.stop = 1.0;
    spec.count = opt.count;
    const std::vector<double> grid = spec.grid();

    out::OutputTable t;
    t.meta = common_meta("fig1", opt.tol);
    t.meta.push_back("normalization: pressure over ideal-conductor pressure, Li_4(r^2)/zeta(4)");
    t.columns = {"r2", "pressure_ratio"};
    const double z4 = zeta_int(4);
    parallel_rows(
        opt.count, opt.threads,
        [&](int i) {
            const double r2 = grid[static_cast<std::size_t>(i)];
            return std::vector<double>{r2, li_real(4, r2, opt.tol).value / z4};
        },
        t.rows);
    return t;
}

out::OutputTable cmd_fig2(const Fig2Options& opt) {
    if (opt.count < 2) throw std::domain_error("fig2: count must be >= 2");
    const double xi_max = opt.xi_max > 0.0 ? opt.xi_max : 8.0 * pi;
    const double step = xi_max / opt.count;
    bool has_ideal = false;
    for (double r : opt.r_values) {
        if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("fig2: need 0 <= r <= 1");
        if (r == 1.0) has_ideal = true;
    }

    out::OutputTable t;
    t.meta = common_meta("fig2", opt.tol);
    t.meta.push_back("a: " + out::format_g17(opt.a));
    t.meta.push_back("grid: midpoints of " + std::to_string(opt.count) +
                     " uniform bins on [0, " + out::format_g17(xi_max) + "]");
    if (has_ideal) {
        std::string marks = "ideal_discontinuities_xi:";
        for (int n = 1; 2.0 * pi * n < xi_max; ++n)
            marks += " " + out::format_g17(2.0 * pi * n);
        t.meta.push_back(marks);
    }
    t.columns = {"xi"};
    for (double r : opt.r_values) t.columns.push_back("a3_density_r" + fmt("%g", r));
    if (has_ideal) t.columns.push_back("ideal_jump_ahead");

    const double a3 = opt.a * opt.a * opt.a;
    parallel_rows(
        opt.count, opt.threads,
        [&](int i) {
            const double xi = (i + 0.5) * step;
            std::vector<double> row{xi};
            for (double r : opt.r_values) {
                const ReflectivityPair refl = ReflectivityPair::uniform(r);
                row.push_back(a3 * spectral_density(refl, opt.a, xi).density_s);
            }
            if (has_ideal) {
                const double next = xi + step;
                const bool jump =
                    std::floor(next / (2.0 * pi)) > std::floor(xi / (2.0 * pi)) && next <= xi_max + step;
                row.push_back(jump ? 1.0 : 0.0);
            }
            return row;
        },
        t.rows);
    return t;
}

out::OutputTable cmd_fig3(const Fig3Options& opt) {
    SweepSpec spec;
    spec.variable = SweepVariable::temperature;
    spec.start = opt.at_min;
    spec.stop = opt.at_max;
    spec.count = opt.count;
    spec.spacing = Spacing::log;
    const std::vector<double> grid = spec.grid();
    const ReflectivityPair refl = ReflectivityPair::uniform(opt.r);
    refl.validate();

    out::OutputTable t;
    t.meta = common_meta("fig3", opt.tol);
    t.meta.push_back("r: " + out::format_g17(opt.r));
    t.meta.push_back("a: " + out::format_g17(opt.a));
    t.columns = {"aT", "a3_free_energy", "a3_high_t_asymptote", "a3_low_t_expansion"};
    const double a3 = opt.a * opt.a * opt.a;
    parallel_rows(
        opt.count, opt.threads,
        [&](int i) {
            const double at = grid[static_cast<std::size_t>(i)];
            const CavityState st{opt.a, at / opt.a};
            return std::vector<double>{at, a3 * free_energy_geometric(refl, st, opt.tol).value,
                                       a3 * free_energy_high_t(refl, st).value,
                                       a3 * free_energy_low_t(refl, st)};
        },
        t.rows);
    // first grid point where the high-T asymptote beats the low-T expansion
    double crossover = grid.back();
    for (const std::vector<double>& row : t.rows) {
        if (std::abs(row[2] - row[1]) <= std::abs(row[3] - row[1])) {
            crossover = row[0];
            break;
        }
    }
    t.meta.push_back("crossover_aT: " + out::format_g17(crossover));
    return t;
}

out::OutputTable cmd_backreaction(const BackreactionOptions& opt) {
    SusceptibilityScalar chi{opt.chi};
    chi.validate();
    std::vector<double> a_grid = opt.a_grid;
    if (a_grid.empty()) {
        SweepSpec spec;
        spec.variable = SweepVariable::separation;
        spec.start = 1.0;
        spec.stop = 16.0;
        spec.count = 9;
        spec.spacing = Spacing::log;
        a_grid = spec.grid();
    }
    const ReflectivityPair refl = ReflectivityPair::uniform(opt.r);
    refl.validate();

    out::OutputTable t;
    t.meta = common_meta("backreaction", opt.tol);
    t.meta.push_back("chi: " + out::format_g17(opt.chi));
    t.meta.push_back("r: " + out::format_g17(opt.r));
    t.meta.push_back("T: " + out::format_g17(opt.T));
    t.columns = {"a",          "T",          "phi_s_1",        "phi_p_1",       "delta_f",
                 "flow_r_s_1", "flow_r_p_1", "flow_iterations", "flow_converged", "flow_capped"};

    std::vector<double> delta_f(a_grid.size());
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        const CavityState st{a_grid[i], opt.T};
        const double phi_s = generalized_force(refl, st, 1, Polarization::s, opt.tol);
        const double phi_p = generalized_force(refl, st, 1, Polarization::p, opt.tol);
        delta_f[i] = one_loop_correction(refl, st, chi, opt.tol);
        const FlowState flow = reflectivity_flow(refl, st, chi, opt.flow_tol, opt.flow_max_iter);
        t.rows.push_back({a_grid[i], opt.T, phi_s, phi_p, delta_f[i], flow.r_current.r_s_1,
                          flow.r_current.r_p_1, static_cast<double>(flow.iteration),
                          flow.converged ? 1.0 : 0.0, flow.capped ? 1.0 : 0.0});
    }

    if (opt.chi > 0.0) {
        const ScalingFit f_fit = fit_loglog_slope(a_grid, delta_f);
        t.meta.push_back("fit_delta_f_exponent_vs_a: " + out::format_g17(f_fit.exponent));
        const ScalingFit p_fit =
            pressure_correction_scaling(refl, {a_grid.front(), opt.T}, chi, a_grid);
        t.meta.push_back("fit_delta_p_exponent_vs_a: " + out::format_g17(p_fit.exponent));
        std::vector<double> t_grid{opt.T, 2.0 * opt.T, 4.0 * opt.T, 8.0 * opt.T};
        std::vector<double> df_t(t_grid.size());
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            df_t[i] = one_loop_correction(refl, {a_grid.front(), t_grid[i]}, chi, opt.tol);
        t.meta.push_back("fit_delta_f_exponent_vs_t: " +
                         out::format_g17(fit_loglog_slope(t_grid, df_t).exponent));
    } else {
        t.meta.push_back("fit: skipped (chi = 0, all corrections vanish)");
    }
    return t;
}

} // namespace casimir::cli
