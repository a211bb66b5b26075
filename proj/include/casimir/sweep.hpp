#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

enum class SweepVariable { reflectivity, temperature, xi, separation };
enum class Spacing { linear, log };

/// One swept variable over [start, stop] with everything else held fixed.
struct SweepSpec {
    SweepVariable variable = SweepVariable::reflectivity;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    Spacing spacing = Spacing::linear;
    CavityState fixed_state;
    ReflectivityPair fixed_refl;

    void validate() const {
        if (count < 2) throw std::domain_error("SweepSpec: count must be >= 2");
        if (!(start < stop)) throw std::domain_error("SweepSpec: start must be < stop");
        if (spacing == Spacing::log && !(start > 0.0))
            throw std::domain_error("SweepSpec: log spacing requires start > 0");
    }

    std::vector<double> grid() const {
        validate();
        std::vector<double> g(static_cast<std::size_t>(count));
        if (spacing == Spacing::linear) {
            for (int i = 0; i < count; ++i)
                g[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
        } else {
            const double l0 = std::log(start);
            const double l1 = std::log(stop);
            for (int i = 0; i < count; ++i)
                g[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (count - 1));
        }
        g.front() = start;
        g.back() = stop;
        return g;
    }
};

} // namespace casimir
