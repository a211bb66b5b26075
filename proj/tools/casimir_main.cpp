#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/commands.hpp"
#include "casimir/output.hpp"
#include "casimir/verification.hpp"

namespace {

// exit codes: 0 ok, 2 usage, 3 domain error, 4 verification failure
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct GlobalOptions {
    double tol = 1e-12;
    std::string format = "csv";
    std::string out_path;
    int threads = 1;
};

void emit(const casimir::out::OutputTable& table, const GlobalOptions& g) {
    const std::string text =
        g.format == "json" ? casimir::out::to_json(table) : casimir::out::to_csv(table);
    if (g.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + g.out_path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir-Lifshitz pressure, free energy, spectrum and back-reaction\n"
                 "for parallel plates with constant reflection coefficients"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--tol", g.tol, "absolute evaluation tolerance")->capture_default_str();
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write output to this path (default stdout)");
    app.add_option("--threads", g.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // point
    casimir::cli::PointOptions point;
    double point_r = std::nan("");
    CLI::App* sp = app.add_subcommand("point", "evaluate F, P, S at one (a, T, r) point");
    sp->add_option("--a", point.a, "plate separation")->capture_default_str();
    sp->add_option("--temp", point.T, "temperature")->capture_default_str();
    sp->add_option("--r", point_r, "set all four reflection coefficients");
    sp->add_option("--rs1", point.refl.r_s_1, "r_s of body 1");
    sp->add_option("--rp1", point.refl.r_p_1, "r_p of body 1");
    sp->add_option("--rs2", point.refl.r_s_2, "r_s of body 2");
    sp->add_option("--rp2", point.refl.r_p_2, "r_p of body 2");
    sp->add_option("--si-length", point.si_length,
                   "metres per length unit; adds SI pressure/energy columns");

    // fig1
    casimir::cli::Fig1Options fig1;
    CLI::App* s1 = app.add_subcommand("fig1", "pressure vs squared reflection coefficient");
    s1->add_option("--count", fig1.count, "sweep points")->capture_default_str();

    // fig2
    casimir::cli::Fig2Options fig2;
    CLI::App* s2 = app.add_subcommand("fig2", "real-frequency spectral density sweep");
    s2->add_option("--a", fig2.a, "plate separation")->capture_default_str();
    s2->add_option("--count", fig2.count, "samples on [0, xi-max]")->capture_default_str();
    s2->add_option("--xi-max", fig2.xi_max, "upper xi (default 8*pi)");
    s2->add_option("--r-list", fig2.r_values, "reflection coefficients to sweep")
        ->delimiter(',')
        ->capture_default_str();

    // fig3
    casimir::cli::Fig3Options fig3;
    CLI::App* s3 = app.add_subcommand("fig3", "free energy vs aT with both asymptotes");
    s3->add_option("--a", fig3.a, "plate separation")->capture_default_str();
    s3->add_option("--r", fig3.r, "reflection coefficient")->capture_default_str();
    s3->add_option("--at-min", fig3.at_min, "lowest aT")->capture_default_str();
    s3->add_option("--at-max", fig3.at_max, "highest aT")->capture_default_str();
    s3->add_option("--count", fig3.count, "log-grid points")->capture_default_str();

    // backreaction
    casimir::cli::BackreactionOptions back;
    CLI::App* sb = app.add_subcommand("backreaction",
                                      "generalized force, one-loop correction, reflectivity flow");
    sb->add_option("--chi", back.chi, "constant susceptibility")->capture_default_str();
    sb->add_option("--r", back.r, "initial reflection coefficient")->capture_default_str();
    sb->add_option("--temp", back.T, "temperature")->capture_default_str();
    sb->add_option("--a-grid", back.a_grid, "separation grid (default log 1..16, 9 pts)")
        ->delimiter(',');
    sb->add_option("--flow-tol", back.flow_tol, "flow convergence tolerance")
        ->capture_default_str();
    sb->add_option("--flow-max-iter", back.flow_max_iter, "flow iteration cap")
        ->capture_default_str();

    // verify
    casimir::cli::VerifyOptions verify;
    CLI::App* sv = app.add_subcommand("verify", "run the brute-force cross-validation suite");
    sv->add_option("--only", verify.only, "run only checks with this name prefix");
    double verify_tol = 0.0;
    sv->add_option("--check-tol", verify_tol,
                   "override every pass threshold (0 keeps per-check defaults)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        point.tol = fig1.tol = fig2.tol = fig3.tol = back.tol = g.tol;
        fig1.threads = fig2.threads = fig3.threads = g.threads;
        if (sp->parsed()) {
            if (!std::isnan(point_r)) point.refl = casimir::ReflectivityPair::uniform(point_r);
            emit(casimir::cli::cmd_point(point), g);
        } else if (s1->parsed()) {
            emit(casimir::cli::cmd_fig1(fig1), g);
        } else if (s2->parsed()) {
            emit(casimir::cli::cmd_fig2(fig2), g);
        } else if (s3->parsed()) {
            emit(casimir::cli::cmd_fig3(fig3), g);
        } else if (sb->parsed()) {
            emit(casimir::cli::cmd_backreaction(back), g);
        } else if (sv->parsed()) {
            verify.tol_override = verify_tol;
            const casimir::cli::VerifyReport report = casimir::cli::run_verification(verify);
            const std::string text = casimir::cli::verify_report_text(report);
            std::fwrite(text.data(), 1, text.size(), stdout);
            return report.all_pass ? 0 : kExitVerify;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
