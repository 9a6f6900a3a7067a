#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracfield {

/// Uniformly spaced samples of a function of one variable.
/// The first sample sits at `origin`, the last at origin + (size-1)*h.
struct SampledLine {
    std::vector<double> values;
    double h = 1.0;
    double origin = 0.0;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return origin + static_cast<double>(i) * h; }
    double back_x() const { return x(values.size() - 1); }

    void validate() const {
        if (!(h > 0.0)) throw std::domain_error("sample spacing must be positive");
        if (values.size() < 2)
            throw std::invalid_argument("a sampled line needs at least 2 samples");
    }
};

} // namespace fracfield
