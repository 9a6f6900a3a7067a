#pragma once

#include <stdexcept>
#include <vector>

namespace fracfield {

/// Grunwald-Letnikov binomial weights w[j] = (-1)^j * binom(alpha, j).
struct GLWeights {
    double alpha = 0.0;
    std::vector<double> w;
};

namespace detail {

inline void check_order(double order, const char* what) {
    if (!(order > 0.0) || !(order <= 1.0))
        throw std::domain_error(std::string(what) + " must lie in (0, 1]");
}

} // namespace detail

/// Weights w[0..n] for the GL sum of a derivative of the given order.
///
/// Computed by the multiplicative recurrence w[j] = w[j-1]*(j-1-alpha)/j,
/// which stays finite for any n (no gamma-function ratios).
inline GLWeights gl_weights(double alpha, int n) {
    detail::check_order(alpha, "gl order");
    if (n < 0) throw std::domain_error("gl weight count must be nonnegative");
    GLWeights out;
    out.alpha = alpha;
    out.w.resize(static_cast<std::size_t>(n) + 1);
    out.w[0] = 1.0;
    for (int j = 1; j <= n; ++j)
        out.w[j] = out.w[j - 1] * ((j - 1 - alpha) / j);
    return out;
}

} // namespace fracfield
