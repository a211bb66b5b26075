#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace casimir::detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15 nodes).
inline constexpr double kGk15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
inline constexpr double kGk15WeightsK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278,
};
inline constexpr double kGk15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct PanelEstimate {
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
PanelEstimate gk15(const F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double kron = kGk15WeightsK[7] * fc;
    double gauss = kGk15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGk15Nodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kGk15WeightsK[i] * fsum;
        if (i % 2 == 1) gauss += kGk15WeightsG[i / 2] * fsum;
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

/// Globally adaptive bisection on [lo, hi], worst interval first, until
/// sum(errors) <= max(abs_tol, rel_tol * |sum(values)|) or the subdivision
/// budget is exhausted (which throws).
template <typename F>
double adaptive_gk15(const F& f, double lo, double hi, double rel_tol, double abs_tol,
                     int max_subdivisions) {
    struct Interval {
        double lo, hi, value, error;
        bool operator<(const Interval& o) const { return error < o.error; }
    };
    std::priority_queue<Interval> heap;
    PanelEstimate first = gk15(f, lo, hi);
    heap.push({lo, hi, first.value, first.error});
    double total = first.value;
    double err = first.error;
    for (int n = 0; n < max_subdivisions; ++n) {
        if (err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            double v = 0.0;
            std::vector<double> parts;
            parts.reserve(heap.size());
            while (!heap.empty()) {
                parts.push_back(heap.top().value);
                heap.pop();
            }
            std::sort(parts.begin(), parts.end(),
                      [](double x, double y) { return std::abs(x) < std::abs(y); });
            for (double p : parts) v += p;
            return v;
        }
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw std::runtime_error("adaptive_gk15: interval underflow before convergence");
        PanelEstimate left = gk15(f, worst.lo, mid);
        PanelEstimate right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push({worst.lo, mid, left.value, left.error});
        heap.push({mid, worst.hi, right.value, right.error});
    }
    throw std::runtime_error("adaptive_gk15: max_subdivisions exhausted before convergence");
}

} // namespace casimir::detail
