#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracfield/fields.hpp"
#include "fracfield/fracops.hpp"
#include "fracfield/maxwell.hpp"

namespace fracfield {

/// Quadrature and constants for the discrete action.
///
/// The default weights are uniform, cell = prod (b_mu - a_mu) / n_mu:
/// positive and summing exactly to the volume. Constraint: the Gateaux
/// check needs the summation-by-parts identity of the GL operators to be
/// exact under these weights, and that identity only survives weights
/// that are constant across the grid — endpoint-weighted rules
/// (trapezoid) leak their boundary factors into every interior point of
/// the nonlocal sums.
struct ActionConfig {
    FracScheme scheme;
    double c = 1.0;
    ScalarField quadrature;

    static ActionConfig make(const Grid& grid, const FracScheme& scheme, double c = 1.0) {
        require_grid_scheme_match(grid, scheme);
        if (!(c > 0.0)) throw std::domain_error("wave speed must be positive");
        ActionConfig cfg;
        cfg.scheme = scheme;
        cfg.c = c;
        double cell = 1.0;
        for (int mu = 0; mu < 4; ++mu) cell *= (grid.b[mu] - grid.a[mu]) / grid.n[mu];
        cfg.quadrature = ScalarField(grid, cell);
        return cfg;
    }

    void validate(const Grid& grid) const {
        if (!quadrature.grid.same_as(grid))
            throw std::invalid_argument("quadrature weights live on a different grid");
        long double sum = 0.0L;
        for (double w : quadrature.data) {
            if (!(w > 0.0)) throw std::domain_error("quadrature weights must be positive");
            sum += w;
        }
        const double vol = grid.volume();
        if (std::fabs(static_cast<double>(sum) - vol) > 1e-9 * vol)
            throw std::domain_error("quadrature weights must sum to the domain volume");
    }
};

namespace detail {

inline constexpr double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

// j^mu in contravariant components (c rho, j).
inline const ScalarField& contravariant_current(const CurrentDensity& j, int mu,
                                                ScalarField& scratch, double c) {
    if (mu == 0) {
        scratch = j.rho;
        scratch *= c;
        return scratch;
    }
    return j.j(mu - 1);
}

} // namespace detail

/// Discrete action
///   S = -1/(16 pi c) Int F_{mu nu} F^{mu nu} - 1/c^2 Int j^mu A_mu,
/// with F from the left-right tensor and the invariant
/// F_{mu nu} F^{mu nu} = 2(|B|^2 - |E|^2).
inline double action_value(const FourPotential& A, const CurrentDensity& j,
                           const ActionConfig& cfg) {
    if (!A.grid.same_as(j.grid)) throw std::invalid_argument("potential/current grid mismatch");
    cfg.validate(A.grid);
    const FieldTensor F = field_strength_lr(A, cfg.scheme);

    long double field_term = 0.0L;
    long double interaction = 0.0L;
    const std::size_t npts = A.grid.size();
    for (std::size_t p = 0; p < npts; ++p) {
        const double w = cfg.quadrature.data[p];
        double b2 = 0.0, e2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            b2 += F.B[i].data[p] * F.B[i].data[p];
            e2 += F.E[i].data[p] * F.E[i].data[p];
        }
        field_term += w * 2.0 * (b2 - e2);

        double ja = cfg.c * j.rho.data[p] * A.comp[0].data[p];
        ja += j.j_x.data[p] * A.comp[1].data[p];
        ja += j.j_y.data[p] * A.comp[2].data[p];
        ja += j.j_z.data[p] * A.comp[3].data[p];
        interaction += w * ja;
    }
    return static_cast<double>(-field_term / (16.0L * M_PI * cfg.c) -
                               interaction / (cfg.c * cfg.c));
}

/// Euler-Lagrange residual of the action, one component per A_mu:
///   el^nu = 1/(4 pi c) * ( d^{ba}_mu F^{mu nu} - (4 pi / c) j^nu ).
/// Zero means A extremizes S. Computed by the raw tensor contraction with
/// eta = diag(+,-,-,-); agreement with the sourced Maxwell pair (up to
/// the 1/(4 pi c) factor) is a cross-check, not a shared code path.
inline FourPotential el_residual(const FourPotential& A, const CurrentDensity& j,
                                 const ActionConfig& cfg) {
    if (!A.grid.same_as(j.grid)) throw std::invalid_argument("potential/current grid mismatch");
    cfg.validate(A.grid);
    const FieldTensor F = field_strength_lr(A, cfg.scheme);
    const FracScheme sw = cfg.scheme.swapped();

    FourPotential out(A.grid);
    ScalarField scratch;
    for (int nu = 0; nu < 4; ++nu) {
        ScalarField acc(A.grid);
        for (int mu = 0; mu < 4; ++mu) {
            if (mu == nu) continue;
            ScalarField f_upper = F.component(mu, nu);
            f_upper *= detail::metric_sign(mu) * detail::metric_sign(nu);
            acc += partial_lr(f_upper, mu, sw);
        }
        const ScalarField& jnu = detail::contravariant_current(j, nu, scratch, cfg.c);
        acc -= (4.0 * M_PI / cfg.c) * jnu;
        acc *= 1.0 / (4.0 * M_PI * cfg.c);
        out.comp[nu] = std::move(acc);
    }
    return out;
}

/// Quadrature-weighted pairing of two potential-shaped fields.
inline double potential_inner_product(const FourPotential& x, const FourPotential& y,
                                      const ActionConfig& cfg) {
    if (!x.grid.same_as(y.grid)) throw std::invalid_argument("grid mismatch");
    long double acc = 0.0L;
    for (int mu = 0; mu < 4; ++mu)
        for (std::size_t p = 0; p < x.grid.size(); ++p)
            acc += cfg.quadrature.data[p] * x.comp[mu].data[p] * y.comp[mu].data[p];
    return static_cast<double>(acc);
}

/// Compact-support test variation plus the ladder of step sizes.
struct VariationProbe {
    FourPotential eta;
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};

    /// Throws unless eta vanishes on the outermost grid layer.
    void validate() const {
        const Grid& g = eta.grid;
        for (int mu = 0; mu < 4; ++mu)
            for (int i0 = 0; i0 < g.n[0]; ++i0)
                for (int i1 = 0; i1 < g.n[1]; ++i1)
                    for (int i2 = 0; i2 < g.n[2]; ++i2)
                        for (int i3 = 0; i3 < g.n[3]; ++i3)
                            if (!g.interior(i0, i1, i2, i3) &&
                                eta.comp[mu](i0, i1, i2, i3) != 0.0)
                                throw std::invalid_argument(
                                    "variation must vanish on the grid boundary");
    }
};

/// Zero a field's outermost layer on every axis.
inline void zero_boundary_layer(ScalarField& f) {
    const Grid& g = f.grid;
    for (int i0 = 0; i0 < g.n[0]; ++i0)
        for (int i1 = 0; i1 < g.n[1]; ++i1)
            for (int i2 = 0; i2 < g.n[2]; ++i2)
                for (int i3 = 0; i3 < g.n[3]; ++i3)
                    if (!g.interior(i0, i1, i2, i3)) f(i0, i1, i2, i3) = 0.0;
}

struct GateauxReport {
    std::vector<double> epsilons;
    std::vector<double> gaps;
    std::vector<double> orders; // observed order between successive epsilons
    double inner_product = 0.0;
    bool pass = false;
};

/// Check that the directional derivative of the action along the probe,
/// computed by central differencing, matches the quadrature pairing of
/// el_residual with the probe. The action is quadratic in A, so central
/// differences are exact up to roundoff at every epsilon.
inline GateauxReport gateaux_check(const FourPotential& A, const CurrentDensity& j,
                                   const ActionConfig& cfg, const VariationProbe& probe,
                                   double tolerance = 1e-10) {
    probe.validate();
    if (!A.grid.same_as(probe.eta.grid))
        throw std::invalid_argument("probe lives on a different grid");

    GateauxReport report;
    report.epsilons = probe.epsilons;
    report.inner_product = potential_inner_product(el_residual(A, j, cfg), probe.eta, cfg);

    for (double eps : probe.epsilons) {
        const double s_plus = action_value(A + eps * probe.eta, j, cfg);
        const double s_minus = action_value(A - eps * probe.eta, j, cfg);
        const double directional = (s_plus - s_minus) / (2.0 * eps);
        report.gaps.push_back(std::fabs(directional - report.inner_product));
    }
    for (std::size_t i = 0; i + 1 < report.gaps.size(); ++i) {
        const double num = std::log(std::max(report.gaps[i], 1e-300) /
                                    std::max(report.gaps[i + 1], 1e-300));
        const double den = std::log(report.epsilons[i] / report.epsilons[i + 1]);
        report.orders.push_back(num / den);
    }
    const double scale = std::max(1.0, std::fabs(report.inner_product));
    report.pass = true;
    for (double gap : report.gaps)
        if (!(gap <= tolerance * scale)) report.pass = false;
    return report;
}

} // namespace fracfield
