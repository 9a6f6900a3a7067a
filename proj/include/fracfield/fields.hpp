#pragma once

#include <array>
#include <stdexcept>

#include "fracfield/fracops.hpp"
#include "fracfield/grid.hpp"

namespace fracfield {

/// Covariant 4-potential A_mu = (psi, -A). Component 0 is the scalar
/// potential; components 1..3 store minus the vector potential.
struct FourPotential {
    Grid grid;
    std::array<ScalarField, 4> comp;

    FourPotential() = default;
    explicit FourPotential(const Grid& g) : grid(g) {
        for (auto& c : comp) c = ScalarField(g);
    }

    const ScalarField& psi() const { return comp[0]; }

    /// Vector-potential component i in {0,1,2} (sign-flipped storage).
    ScalarField a_vec(int i) const { return -1.0 * comp[1 + i]; }

    FourPotential& operator+=(const FourPotential& o) {
        for (int mu = 0; mu < 4; ++mu) comp[mu] += o.comp[mu];
        return *this;
    }
    FourPotential& operator-=(const FourPotential& o) {
        for (int mu = 0; mu < 4; ++mu) comp[mu] -= o.comp[mu];
        return *this;
    }
    FourPotential& operator*=(double s) {
        for (auto& c : comp) c *= s;
        return *this;
    }
    friend FourPotential operator+(FourPotential x, const FourPotential& y) { return x += y; }
    friend FourPotential operator-(FourPotential x, const FourPotential& y) { return x -= y; }
    friend FourPotential operator*(double s, FourPotential x) { return x *= s; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp) m = std::max(m, c.max_abs());
        return m;
    }
};

/// Charge/current sources: j^mu = (c rho, j).
struct CurrentDensity {
    Grid grid;
    ScalarField rho, j_x, j_y, j_z;

    CurrentDensity() = default;
    explicit CurrentDensity(const Grid& g)
        : grid(g), rho(g), j_x(g), j_y(g), j_z(g) {}

    const ScalarField& j(int i) const {
        return i == 0 ? j_x : (i == 1 ? j_y : j_z);
    }
};

/// Antisymmetric field-strength tensor stored as its six independent
/// components. The index view follows
///   F_01 = E_x, F_02 = E_y, F_03 = E_z,
///   F_12 = -B_z, F_13 = B_y, F_23 = -B_x,
/// with antisymmetry supplied by construction.
struct FieldTensor {
    Grid grid;
    std::array<ScalarField, 3> E, B;

    FieldTensor() = default;
    explicit FieldTensor(const Grid& g) : grid(g) {
        for (auto& c : E) c = ScalarField(g);
        for (auto& c : B) c = ScalarField(g);
    }

    /// Signed copy of F_{mu nu}. The diagonal is identically zero.
    ScalarField component(int mu, int nu) const {
        if (mu == nu) return ScalarField(grid);
        if (mu > nu) {
            ScalarField f = component(nu, mu);
            f *= -1.0;
            return f;
        }
        if (mu == 0) return E[nu - 1];
        if (mu == 1 && nu == 2) return -1.0 * B[2];
        if (mu == 1 && nu == 3) return B[1];
        return -1.0 * B[0]; // mu == 2, nu == 3
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : E) m = std::max(m, c.max_abs());
        for (const auto& c : B) m = std::max(m, c.max_abs());
        return m;
    }
};

inline double max_abs_diff(const FieldTensor& x, const FieldTensor& y) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
        m = std::max(m, max_abs_diff(x.E[i], y.E[i]));
        m = std::max(m, max_abs_diff(x.B[i], y.B[i]));
    }
    return m;
}

namespace detail {

// Pack F_{mu nu} = d_mu A_nu - d_nu A_mu into the six components, given
// the already-computed partials d[mu][nu] = (D_mu A_nu).
inline FieldTensor pack_tensor(const Grid& g,
                               const std::array<std::array<ScalarField, 4>, 4>& d) {
    FieldTensor F(g);
    for (int i = 0; i < 3; ++i) F.E[i] = d[0][1 + i] - d[1 + i][0];
    F.B[2] = d[2][1] - d[1][2]; // -F_12
    F.B[1] = d[1][3] - d[3][1]; //  F_13
    F.B[0] = d[3][2] - d[2][3]; // -F_23
    return F;
}

} // namespace detail

/// Field-strength tensor built from left-right partials:
///   F_{mu nu} = d^{ab}_mu A_nu - d^{ab}_nu A_mu.
inline FieldTensor field_strength_lr(const FourPotential& A, const FracScheme& scheme) {
    require_grid_scheme_match(A.grid, scheme);
    std::array<std::array<ScalarField, 4>, 4> d;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            if (mu != nu) d[mu][nu] = partial_lr(A.comp[nu], mu, scheme);
    return detail::pack_tensor(A.grid, d);
}

/// Right-sided tensor of the asymmetric theory: one order for all axes,
/// right terminals taken from the grid.
inline FieldTensor field_strength_right(const FourPotential& A, double alpha) {
    std::array<std::array<ScalarField, 4>, 4> d;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            if (mu != nu) d[mu][nu] = partial_right(A.comp[nu], mu, alpha);
    return detail::pack_tensor(A.grid, d);
}

/// A_mu -> A_mu + d^{ab}_mu phi. Leaves the field tensor unchanged.
inline FourPotential gauge_transform(const FourPotential& A, const ScalarField& phi,
                                     const FracScheme& scheme) {
    if (!A.grid.same_as(phi.grid))
        throw std::invalid_argument("gauge function lives on a different grid");
    FourPotential out = A;
    for (int mu = 0; mu < 4; ++mu) out.comp[mu] += partial_lr(phi, mu, scheme);
    return out;
}

/// Right-derivative gauge transformation of the asymmetric theory.
inline FourPotential gauge_transform_right(const FourPotential& A, const ScalarField& phi,
                                           double alpha) {
    if (!A.grid.same_as(phi.grid))
        throw std::invalid_argument("gauge function lives on a different grid");
    FourPotential out = A;
    for (int mu = 0; mu < 4; ++mu) out.comp[mu] += partial_right(phi, mu, alpha);
    return out;
}

struct EBFields {
    std::array<ScalarField, 3> E, B;
};

/// Unpack the six stored components. reconstruct_tensor inverts exactly.
inline EBFields extract_eb(const FieldTensor& F) { return {F.E, F.B}; }

inline FieldTensor reconstruct_tensor(const Grid& g, const EBFields& eb) {
    FieldTensor F(g);
    F.E = eb.E;
    F.B = eb.B;
    return F;
}

/// Fractional Lorenz-gauge residual d^{ab}_mu A^mu. The metric raise
/// eta = diag(+,-,-,-) flips the spatial components of the stored A_mu,
/// so the result is d_0 psi + div of the vector potential.
inline ScalarField lorenz_residual(const FourPotential& A, const FracScheme& scheme) {
    require_grid_scheme_match(A.grid, scheme);
    ScalarField out = partial_lr(A.comp[0], 0, scheme);
    for (int i = 1; i < 4; ++i) out -= partial_lr(A.comp[i], i, scheme);
    return out;
}

} // namespace fracfield
