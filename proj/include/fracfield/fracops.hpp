#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fracfield/gamma.hpp"
#include "fracfield/gl_weights.hpp"
#include "fracfield/grid.hpp"
#include "fracfield/parallel.hpp"
#include "fracfield/sampled_line.hpp"
#include "fracfield/scheme.hpp"

namespace fracfield {

namespace detail {

// Left GL sum on a raw line: out[i] = h^-alpha * sum_{j<=i} w[j] in[i-j].
// Samples outside [a, b] are treated as zero, so only available samples
// enter the sum.
inline void gl_left_line(const double* in, double* out, std::size_t n,
                         const std::vector<double>& w, double scale) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) acc += w[j] * in[i - j];
        out[i] = scale * acc;
    }
}

// Right GL sum: out[i] = h^-beta * sum_{j<=n-1-i} w[j] in[i+j]. The sign
// convention of the right derivative (the (-1)^n factor of the continuum
// definition) is built into the weights; at order 1 this is minus the
// forward difference.
inline void gl_right_line(const double* in, double* out, std::size_t n,
                          const std::vector<double>& w, double scale) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const std::size_t m = n - 1 - i;
        for (std::size_t j = 0; j <= m; ++j) acc += w[j] * in[i + j];
        out[i] = scale * acc;
    }
}

} // namespace detail

/// Left Riemann-Liouville derivative of order alpha in (0,1], discretized
/// by the unshifted Grunwald-Letnikov sum with the line origin as the
/// lower terminal. At alpha = 1 this is the backward difference.
inline SampledLine left_rl_deriv(const SampledLine& f, double alpha) {
    detail::check_order(alpha, "alpha");
    f.validate();
    SampledLine out = f;
    const auto w = gl_weights(alpha, static_cast<int>(f.size()) - 1);
    detail::gl_left_line(f.values.data(), out.values.data(), f.size(), w.w,
                         std::pow(f.h, -alpha));
    return out;
}

/// Right Riemann-Liouville derivative of order beta in (0,1]; the last
/// sample is the upper terminal. At beta = 1 this is minus the forward
/// difference.
inline SampledLine right_rl_deriv(const SampledLine& f, double beta) {
    detail::check_order(beta, "beta");
    f.validate();
    SampledLine out = f;
    const auto w = gl_weights(beta, static_cast<int>(f.size()) - 1);
    detail::gl_right_line(f.values.data(), out.values.data(), f.size(), w.w,
                          std::pow(f.h, -beta));
    return out;
}

/// Left-right operator: half the difference of the left (order alpha) and
/// right (order beta) derivatives. Reduces to the central difference at
/// alpha = beta = 1 and to a Riesz-type derivative whenever alpha = beta.
inline SampledLine lr_op(const SampledLine& f, double alpha, double beta) {
    const SampledLine l = left_rl_deriv(f, alpha);
    const SampledLine r = right_rl_deriv(f, beta);
    SampledLine out = f;
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = 0.5 * (l.values[i] - r.values[i]);
    return out;
}

namespace detail {

enum class LineOp { left, right, left_right };

// Apply a 1-D GL kernel along `axis` to every line of the field.
inline ScalarField apply_along_axis(const ScalarField& f, int axis,
                                    LineOp op, double alpha, double beta) {
    if (axis < 0 || axis > 3) throw std::invalid_argument("axis out of range");
    const Grid& g = f.grid;
    const std::size_t n = static_cast<std::size_t>(g.n[axis]);
    const std::size_t stride = g.stride(axis);
    const std::size_t lines = g.size() / n;
    const double h = g.spacing(axis);

    std::vector<double> wl, wr;
    double sl = 0.0, sr = 0.0;
    if (op != LineOp::right) {
        wl = gl_weights(alpha, static_cast<int>(n) - 1).w;
        sl = std::pow(h, -alpha);
    }
    if (op != LineOp::left) {
        wr = gl_weights(beta, static_cast<int>(n) - 1).w;
        sr = std::pow(h, -beta);
    }

    ScalarField out(g);
    parallel_for(lines, n * n, [&](std::size_t line) {
        // Decompose the line id into the base offset of its first sample:
        // `inner` counts points below the axis stride, `outer` blocks above.
        const std::size_t inner = line % stride;
        const std::size_t outer = line / stride;
        const std::size_t base = outer * stride * n + inner;

        std::vector<double> buf(n), dl(n), dr(n);
        for (std::size_t t = 0; t < n; ++t) buf[t] = f.data[base + t * stride];
        switch (op) {
        case LineOp::left:
            gl_left_line(buf.data(), dl.data(), n, wl, sl);
            for (std::size_t t = 0; t < n; ++t) out.data[base + t * stride] = dl[t];
            break;
        case LineOp::right:
            gl_right_line(buf.data(), dr.data(), n, wr, sr);
            for (std::size_t t = 0; t < n; ++t) out.data[base + t * stride] = dr[t];
            break;
        case LineOp::left_right:
            gl_left_line(buf.data(), dl.data(), n, wl, sl);
            gl_right_line(buf.data(), dr.data(), n, wr, sr);
            for (std::size_t t = 0; t < n; ++t)
                out.data[base + t * stride] = 0.5 * (dl[t] - dr[t]);
            break;
        }
    });
    return out;
}

} // namespace detail

/// Left-right partial derivative along one axis of a grid field, every
/// other coordinate held fixed. Orders and terminals come from the scheme.
inline ScalarField partial_lr(const ScalarField& f, int axis, const FracScheme& scheme) {
    if (axis < 0 || axis > 3) throw std::invalid_argument("axis out of range");
    scheme.validate();
    require_grid_scheme_match(f.grid, scheme);
    return detail::apply_along_axis(f, axis, detail::LineOp::left_right,
                                    scheme.alpha[axis], scheme.beta[axis]);
}

/// One-sided partials used by the asymmetric theory.
inline ScalarField partial_left(const ScalarField& f, int axis, double alpha) {
    detail::check_order(alpha, "alpha");
    return detail::apply_along_axis(f, axis, detail::LineOp::left, alpha, alpha);
}

inline ScalarField partial_right(const ScalarField& f, int axis, double beta) {
    detail::check_order(beta, "beta");
    return detail::apply_along_axis(f, axis, detail::LineOp::right, beta, beta);
}

/// Closed-form left RL derivative of (x-a)^p:
///   gamma(p+1)/gamma(p+1-alpha) * (x-a)^(p-alpha).
/// Test oracle for the GL discretization.
inline double rl_power_analytic(double p, double alpha, double x, double a) {
    detail::check_order(alpha, "alpha");
    if (!(p > -1.0)) throw std::domain_error("power-law exponent must exceed -1");
    if (!(x > a)) throw std::domain_error("evaluation point must lie right of the terminal");
    const double coeff = gamma(p + 1.0) / gamma(p + 1.0 - alpha);
    return coeff * std::pow(x - a, p - alpha);
}

/// Fourier symbol of the whole-line symmetric operator (alpha = beta,
/// infinite terminals) acting on exp(ikx):
///   i * sgn(k) * |k|^alpha * sin(alpha pi / 2).
inline std::complex<double> riesz_symbol(double k, double alpha) {
    detail::check_order(alpha, "alpha");
    if (k == 0.0) return {0.0, 0.0};
    const double sgn = k > 0.0 ? 1.0 : -1.0;
    const double mag = std::pow(std::fabs(k), alpha) * std::sin(alpha * M_PI / 2.0);
    return {0.0, sgn * mag};
}

} // namespace fracfield
