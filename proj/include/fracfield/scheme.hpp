#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "fracfield/gl_weights.hpp"

namespace fracfield {

/// Differentiation convention for the whole theory: per-axis left order
/// alpha_mu, right order beta_mu, and terminals [a_mu, b_mu].
///
/// Axis 0 is time (x_0 = c t), axes 1..3 are space.
struct FracScheme {
    std::array<double, 4> alpha{1.0, 1.0, 1.0, 1.0};
    std::array<double, 4> beta{1.0, 1.0, 1.0, 1.0};
    std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};
    std::array<double, 4> b{1.0, 1.0, 1.0, 1.0};

    void validate() const {
        for (int mu = 0; mu < 4; ++mu) {
            detail::check_order(alpha[mu], "alpha");
            detail::check_order(beta[mu], "beta");
            if (!(a[mu] < b[mu]))
                throw std::domain_error("scheme requires a_mu < b_mu on every axis");
        }
    }

    /// Same terminals, alpha and beta exchanged. The equations of motion
    /// use this swapped convention on their derivative slots.
    FracScheme swapped() const {
        FracScheme s = *this;
        std::swap(s.alpha, s.beta);
        return s;
    }

    /// Spatial-symmetry predicate: alpha_mu = beta_mu and b_mu = -a_mu
    /// on every axis (the Riesz reduction).
    bool symmetric() const {
        for (int mu = 0; mu < 4; ++mu)
            if (alpha[mu] != beta[mu] || b[mu] != -a[mu]) return false;
        return true;
    }

    /// Causal case: integer-order time axis, Riesz-type space axes.
    bool symmetric_causal() const {
        if (alpha[0] != 1.0 || beta[0] != 1.0) return false;
        for (int i = 1; i < 4; ++i)
            if (alpha[i] != beta[i]) return false;
        return true;
    }

    static FracScheme uniform(double alpha, double beta,
                              const std::array<double, 4>& a,
                              const std::array<double, 4>& b) {
        FracScheme s;
        s.alpha.fill(alpha);
        s.beta.fill(beta);
        s.a = a;
        s.b = b;
        s.validate();
        return s;
    }
};

} // namespace fracfield
