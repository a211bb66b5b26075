#pragma once

#include <string>
#include <vector>

#include "casimir/output.hpp"
#include "casimir/types.hpp"

namespace casimir::cli {

inline constexpr const char* kModelVersion = "casimir-lifshitz 1.0.0";

struct PointOptions {
    double a = 1.0;
    double T = 0.0;
    ReflectivityPair refl = ReflectivityPair::uniform(1.0);
    double tol = 1e-12;
    double si_length = 0.0;  // meters per length unit; 0 disables SI columns
};

struct Fig1Options {
    int count = 101;
    double tol = 1e-12;
    int threads = 1;
};

struct Fig2Options {
    double a = 1.0;
    std::vector<double> r_values = {0.5, 0.7, 0.9, 1.0};
    int count = 2000;
    double xi_max = 0.0;  // 0 -> default 8*pi
    double tol = 1e-12;
    int threads = 1;
};

struct Fig3Options {
    double a = 1.0;
    double r = 0.5;
    double at_min = 0.01;
    double at_max = 10.0;
    int count = 121;
    double tol = 1e-12;
    int threads = 1;
};

struct BackreactionOptions {
    double chi = 1e-4;
    double r = 0.5;
    double T = 1e-3;
    std::vector<double> a_grid;  // empty -> log grid 1..16, 9 points
    double flow_tol = 1e-10;
    int flow_max_iter = 1000;
    double tol = 1e-12;
};

/// Single-point evaluation: F, P, S plus ratios to the ideal-conductor
/// zero-temperature values.
out::OutputTable cmd_point(const PointOptions& opt);

/// Pressure relative to the ideal conductor as a function of the squared
/// reflection coefficient: rows (r2, Li_4(r2)/zeta(4)), endpoints exactly 0, 1.
out::OutputTable cmd_fig1(const Fig1Options& opt);

/// Real-frequency spectral density sweep over xi for several reflection
/// coefficients. Samples sit at midpoints of a uniform grid on [0, xi_max] so
/// the ideal curve is never evaluated exactly on its xi = 2 pi n jumps; the
/// `ideal_jump_ahead` column marks rows directly before a jump.
out::OutputTable cmd_fig2(const Fig2Options& opt);

/// Free energy against aT (log grid) together with the high-temperature
/// asymptote and the low-temperature expansion; the crossover aT is reported
/// in the metadata.
out::OutputTable cmd_fig3(const Fig3Options& opt);

/// Generalized force, one-loop correction and reflectivity flow over a
/// separation grid, with fitted scaling exponents in the metadata.
out::OutputTable cmd_backreaction(const BackreactionOptions& opt);

} // namespace casimir::cli
