#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "fracfield/fields.hpp"
#include "fracfield/fracops.hpp"

namespace fracfield {

/// Three-component field over the spatial axes of a Grid.
struct VectorField3 {
    Grid grid;
    std::array<ScalarField, 3> comp;

    VectorField3() = default;
    explicit VectorField3(const Grid& g) : grid(g) {
        for (auto& c : comp) c = ScalarField(g);
    }

    ScalarField& operator[](int i) { return comp[i]; }
    const ScalarField& operator[](int i) const { return comp[i]; }

    VectorField3& operator+=(const VectorField3& o) {
        for (int i = 0; i < 3; ++i) comp[i] += o.comp[i];
        return *this;
    }
    VectorField3& operator-=(const VectorField3& o) {
        for (int i = 0; i < 3; ++i) comp[i] -= o.comp[i];
        return *this;
    }
    VectorField3& operator*=(double s) {
        for (auto& c : comp) c *= s;
        return *this;
    }
    friend VectorField3 operator+(VectorField3 x, const VectorField3& y) { return x += y; }
    friend VectorField3 operator-(VectorField3 x, const VectorField3& y) { return x -= y; }
    friend VectorField3 operator*(double s, VectorField3 x) { return x *= s; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp) m = std::max(m, c.max_abs());
        return m;
    }
};

inline double max_abs_diff(const VectorField3& x, const VectorField3& y) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, max_abs_diff(x.comp[i], y.comp[i]));
    return m;
}

namespace detail {

// Spatial component i lives on grid axis 1 + i.
using Partial = ScalarField (*)(const ScalarField&, int, const FracScheme&, double);

// Uniform kernel so the left-right, left, and right operator families
// share one implementation of grad/div/curl. Order swaps happen at the
// scheme level (FracScheme::swapped), not here.
struct SpatialDeriv {
    enum class Kind { lr, left, right } kind;
    const FracScheme* scheme = nullptr;
    double order = 0.0;

    ScalarField operator()(const ScalarField& f, int component_axis) const {
        const int axis = 1 + component_axis;
        switch (kind) {
        case Kind::lr: return partial_lr(f, axis, *scheme);
        case Kind::left: return partial_left(f, axis, order);
        case Kind::right: return partial_right(f, axis, order);
        }
        throw std::logic_error("unreachable");
    }
};

inline VectorField3 grad_impl(const ScalarField& phi, const SpatialDeriv& d) {
    VectorField3 out(phi.grid);
    for (int i = 0; i < 3; ++i) out[i] = d(phi, i);
    return out;
}

inline ScalarField div_impl(const VectorField3& F, const SpatialDeriv& d) {
    ScalarField out = d(F[0], 0);
    out += d(F[1], 1);
    out += d(F[2], 2);
    return out;
}

inline VectorField3 curl_impl(const VectorField3& F, const SpatialDeriv& d) {
    VectorField3 out(F.grid);
    out[0] = d(F[2], 1) - d(F[1], 2);
    out[1] = d(F[0], 2) - d(F[2], 0);
    out[2] = d(F[1], 0) - d(F[0], 1);
    return out;
}

} // namespace detail

/// Left-right vector operators over the spatial axes.
inline VectorField3 grad_lr(const ScalarField& phi, const FracScheme& scheme) {
    require_grid_scheme_match(phi.grid, scheme);
    return detail::grad_impl(phi, {detail::SpatialDeriv::Kind::lr, &scheme, 0.0});
}

inline ScalarField div_lr(const VectorField3& F, const FracScheme& scheme) {
    require_grid_scheme_match(F.grid, scheme);
    return detail::div_impl(F, {detail::SpatialDeriv::Kind::lr, &scheme, 0.0});
}

inline VectorField3 curl_lr(const VectorField3& F, const FracScheme& scheme) {
    require_grid_scheme_match(F.grid, scheme);
    return detail::curl_impl(F, {detail::SpatialDeriv::Kind::lr, &scheme, 0.0});
}

/// One-sided families of the asymmetric theory.
inline VectorField3 grad_left(const ScalarField& phi, double alpha) {
    return detail::grad_impl(phi, {detail::SpatialDeriv::Kind::left, nullptr, alpha});
}
inline VectorField3 grad_right(const ScalarField& phi, double alpha) {
    return detail::grad_impl(phi, {detail::SpatialDeriv::Kind::right, nullptr, alpha});
}
inline ScalarField div_left(const VectorField3& F, double alpha) {
    return detail::div_impl(F, {detail::SpatialDeriv::Kind::left, nullptr, alpha});
}
inline VectorField3 curl_left(const VectorField3& F, double alpha) {
    return detail::curl_impl(F, {detail::SpatialDeriv::Kind::left, nullptr, alpha});
}
inline ScalarField div_right(const VectorField3& F, double alpha) {
    return detail::div_impl(F, {detail::SpatialDeriv::Kind::right, nullptr, alpha});
}
inline VectorField3 curl_right(const VectorField3& F, double alpha) {
    return detail::curl_impl(F, {detail::SpatialDeriv::Kind::right, nullptr, alpha});
}

/// Fractional time derivative of the asymmetric theory, d_t^a = c^a d_0^a.
/// The scaling by c^a is what converts between the x_0 and t forms.
inline ScalarField time_deriv_alpha_left(const ScalarField& f, double alpha, double c) {
    ScalarField out = partial_left(f, 0, alpha);
    out *= std::pow(c, alpha);
    return out;
}
inline ScalarField time_deriv_alpha_right(const ScalarField& f, double alpha, double c) {
    ScalarField out = partial_right(f, 0, alpha);
    out *= std::pow(c, alpha);
    return out;
}

namespace detail {

inline VectorField3 eb_part(const FieldTensor& F, bool electric) {
    VectorField3 v(F.grid);
    v.comp = electric ? F.E : F.B;
    return v;
}

inline VectorField3 time_partial_lr(const VectorField3& F, const FracScheme& scheme) {
    VectorField3 out(F.grid);
    for (int i = 0; i < 3; ++i) out[i] = partial_lr(F[i], 0, scheme);
    return out;
}

} // namespace detail

struct SecondPairResidual {
    ScalarField gauss;
    VectorField3 ampere;
};

struct FirstPairResidual {
    ScalarField no_monopole;
    VectorField3 faraday;
};

/// Sourced pair of the symmetric theory. The derivative slots are swapped
/// (beta on the left derivative) exactly as the variational equations of
/// motion prescribe:
///   gauss  = div^{ba} E - 4 pi rho
///   ampere = curl^{ba} B - (4 pi / c) j - d^{ba}_0 E
inline SecondPairResidual second_pair_residual(const FieldTensor& F, const CurrentDensity& j,
                                               const FracScheme& scheme, double c) {
    if (!F.grid.same_as(j.grid)) throw std::invalid_argument("tensor/current grid mismatch");
    require_grid_scheme_match(F.grid, scheme);
    const FracScheme sw = scheme.swapped();
    const VectorField3 E = detail::eb_part(F, true);
    const VectorField3 B = detail::eb_part(F, false);

    SecondPairResidual out;
    out.gauss = div_lr(E, sw) - 4.0 * M_PI * j.rho;
    out.ampere = curl_lr(B, sw) - detail::time_partial_lr(E, sw);
    for (int i = 0; i < 3; ++i) out.ampere[i] -= (4.0 * M_PI / c) * j.j(i);
    return out;
}

/// Source-free pair of the symmetric theory, in the unswapped convention:
///   no_monopole = div^{ab} B
///   faraday     = curl^{ab} E + d^{ab}_0 B
/// Vanishes identically for any potential-derived tensor.
inline FirstPairResidual first_pair_residual(const FieldTensor& F, const FracScheme& scheme) {
    require_grid_scheme_match(F.grid, scheme);
    const VectorField3 E = detail::eb_part(F, true);
    const VectorField3 B = detail::eb_part(F, false);
    FirstPairResidual out;
    out.no_monopole = div_lr(B, scheme);
    out.faraday = curl_lr(E, scheme) + detail::time_partial_lr(B, scheme);
    return out;
}

/// Max-abs of the cyclic identity
///   d_rho F_{mu nu} + d_mu F_{nu rho} + d_nu F_{rho mu}
/// over the four unordered index triples. Any permutation of a triple
/// changes the sum at most by sign, so unordered triples cover all.
inline double bianchi_residual(const FieldTensor& F, const FracScheme& scheme) {
    require_grid_scheme_match(F.grid, scheme);
    double m = 0.0;
    constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : triples) {
        const int r = t[0], mu = t[1], nu = t[2];
        ScalarField cyc = partial_lr(F.component(mu, nu), r, scheme);
        cyc += partial_lr(F.component(nu, r), mu, scheme);
        cyc += partial_lr(F.component(r, mu), nu, scheme);
        m = std::max(m, cyc.max_abs());
    }
    return m;
}

/// Cyclic identity of the asymmetric theory, evaluated with the right
/// partials that built its tensor.
inline double bianchi_residual_right(const FieldTensor& F, double alpha) {
    double m = 0.0;
    constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : triples) {
        const int r = t[0], mu = t[1], nu = t[2];
        ScalarField cyc = partial_right(F.component(mu, nu), r, alpha);
        cyc += partial_right(F.component(nu, r), mu, alpha);
        cyc += partial_right(F.component(r, mu), nu, alpha);
        m = std::max(m, cyc.max_abs());
    }
    return m;
}

/// Charge-conservation residual div^a j + d_t rho for the causal scheme
/// (integer-order time axis, equal spatial orders). d_t = c d_0 under
/// the x_0 = c t convention.
inline ScalarField continuity_residual(const ScalarField& rho, const VectorField3& j,
                                       const FracScheme& scheme, double c) {
    if (!rho.grid.same_as(j.grid)) throw std::invalid_argument("rho/j grid mismatch");
    require_grid_scheme_match(rho.grid, scheme);
    if (!scheme.symmetric_causal())
        throw std::domain_error("continuity requires a symmetric-causal scheme "
                                "(time orders 1, equal spatial orders)");
    ScalarField out = div_lr(j, scheme);
    ScalarField dt = partial_lr(rho, 0, scheme);
    dt *= c;
    out += dt;
    return out;
}

/// Diagnostic bundle for all four equations. Norms come raw (max-abs)
/// and relative to max |F| + 1, so thresholds stay scale-free.
struct MaxwellResidual {
    ScalarField gauss;
    VectorField3 ampere;
    ScalarField no_monopole;
    VectorField3 faraday;
    struct Norms {
        double gauss, ampere, no_monopole, faraday;
    } norms{};
    double field_scale = 1.0; // max |F| + 1 of the checked tensor

    Norms relative_norms() const {
        return {norms.gauss / field_scale, norms.ampere / field_scale,
                norms.no_monopole / field_scale, norms.faraday / field_scale};
    }

    static MaxwellResidual from_parts(SecondPairResidual second, FirstPairResidual first,
                                      double field_scale) {
        MaxwellResidual r;
        r.gauss = std::move(second.gauss);
        r.ampere = std::move(second.ampere);
        r.no_monopole = std::move(first.no_monopole);
        r.faraday = std::move(first.faraday);
        r.norms = {r.gauss.max_abs(), r.ampere.max_abs(),
                   r.no_monopole.max_abs(), r.faraday.max_abs()};
        r.field_scale = field_scale;
        return r;
    }
};

inline MaxwellResidual evaluate_maxwell(const FieldTensor& F, const CurrentDensity& j,
                                        const FracScheme& scheme, double c) {
    return MaxwellResidual::from_parts(second_pair_residual(F, j, scheme, c),
                                       first_pair_residual(F, scheme), F.max_abs() + 1.0);
}

/// Asymmetric-theory residuals: the sourced pair uses only left
/// derivatives, the source-free pair only right derivatives. The time
/// term carries (1/c^a) d_t^a, which is d_0^a in grid coordinates.
inline SecondPairResidual asym_second_pair_residual(const FieldTensor& F,
                                                    const CurrentDensity& j,
                                                    double alpha, double c) {
    if (!F.grid.same_as(j.grid)) throw std::invalid_argument("tensor/current grid mismatch");
    const VectorField3 E = detail::eb_part(F, true);
    const VectorField3 B = detail::eb_part(F, false);
    SecondPairResidual out;
    out.gauss = div_left(E, alpha) - 4.0 * M_PI * j.rho;
    out.ampere = curl_left(B, alpha);
    const double c_neg_alpha = std::pow(c, -alpha);
    for (int i = 0; i < 3; ++i) {
        ScalarField dt = time_deriv_alpha_left(E[i], alpha, c);
        dt *= c_neg_alpha;
        out.ampere[i] -= dt;
        out.ampere[i] -= (4.0 * M_PI / c) * j.j(i);
    }
    return out;
}

inline FirstPairResidual asym_first_pair_residual(const FieldTensor& F, double alpha,
                                                  double c) {
    const VectorField3 E = detail::eb_part(F, true);
    const VectorField3 B = detail::eb_part(F, false);
    FirstPairResidual out;
    out.no_monopole = div_right(B, alpha);
    out.faraday = curl_right(E, alpha);
    const double c_neg_alpha = std::pow(c, -alpha);
    for (int i = 0; i < 3; ++i) {
        ScalarField dt = time_deriv_alpha_right(B[i], alpha, c);
        dt *= c_neg_alpha;
        out.faraday[i] += dt;
    }
    return out;
}

} // namespace fracfield
