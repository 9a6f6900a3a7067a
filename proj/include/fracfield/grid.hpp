#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fracfield/scheme.hpp"

namespace fracfield {

/// Uniform rectangular lattice over [a_0,b_0] x ... x [a_3,b_3].
struct Grid {
    std::array<int, 4> n{2, 2, 2, 2};
    std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};
    std::array<double, 4> b{1.0, 1.0, 1.0, 1.0};

    void validate() const {
        for (int mu = 0; mu < 4; ++mu) {
            if (n[mu] < 2) throw std::domain_error("grid needs n_mu >= 2 on every axis");
            if (!(a[mu] < b[mu])) throw std::domain_error("grid requires a_mu < b_mu");
        }
    }

    double spacing(int axis) const {
        return (b[axis] - a[axis]) / (n[axis] - 1);
    }

    double coord(int axis, int i) const { return a[axis] + i * spacing(axis); }

    std::size_t size() const {
        return static_cast<std::size_t>(n[0]) * n[1] * n[2] * n[3];
    }

    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int k = axis + 1; k < 4; ++k) s *= static_cast<std::size_t>(n[k]);
        return s;
    }

    std::size_t index(int i0, int i1, int i2, int i3) const {
        return ((static_cast<std::size_t>(i0) * n[1] + i1) * n[2] + i2) * n[3] + i3;
    }

    double volume() const {
        double v = 1.0;
        for (int mu = 0; mu < 4; ++mu) v *= b[mu] - a[mu];
        return v;
    }

    bool same_as(const Grid& o) const {
        return n == o.n && a == o.a && b == o.b;
    }

    /// True when this point is off the outermost layer on every axis.
    bool interior(int i0, int i1, int i2, int i3) const {
        const std::array<int, 4> idx{i0, i1, i2, i3};
        for (int mu = 0; mu < 4; ++mu)
            if (idx[mu] == 0 || idx[mu] == n[mu] - 1) return false;
        return true;
    }

    static Grid box(const std::array<int, 4>& n,
                    const std::array<double, 4>& a,
                    const std::array<double, 4>& b) {
        Grid g{n, a, b};
        g.validate();
        return g;
    }
};

inline void require_grid_scheme_match(const Grid& g, const FracScheme& s) {
    for (int mu = 0; mu < 4; ++mu) {
        const double scale = 1.0 + std::fabs(g.a[mu]) + std::fabs(g.b[mu]);
        if (std::fabs(g.a[mu] - s.a[mu]) > 1e-12 * scale ||
            std::fabs(g.b[mu] - s.b[mu]) > 1e-12 * scale)
            throw std::invalid_argument("grid extent does not match scheme terminals");
    }
}

/// Real-valued samples over a Grid, stored flat in row-major order
/// (axis 3 fastest).
struct ScalarField {
    Grid grid;
    std::vector<double> data;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), data(g.size(), fill) {}

    double& operator()(int i0, int i1, int i2, int i3) {
        return data[grid.index(i0, i1, i2, i3)];
    }
    double operator()(int i0, int i1, int i2, int i3) const {
        return data[grid.index(i0, i1, i2, i3)];
    }

    ScalarField& operator+=(const ScalarField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < data.size(); ++i) data[i] -= o.data[i];
        return *this;
    }
    ScalarField& operator*=(double s) {
        for (auto& v : data) v *= s;
        return *this;
    }

    friend ScalarField operator+(ScalarField x, const ScalarField& y) { return x += y; }
    friend ScalarField operator-(ScalarField x, const ScalarField& y) { return x -= y; }
    friend ScalarField operator*(double s, ScalarField x) { return x *= s; }

    double max_abs() const {
        double m = 0.0;
        for (double v : data) m = std::max(m, std::fabs(v));
        return m;
    }

    void check_same_grid(const ScalarField& o) const {
        if (!grid.same_as(o.grid))
            throw std::invalid_argument("fields live on different grids");
    }
};

/// Max-abs difference between two fields on the same grid.
inline double max_abs_diff(const ScalarField& x, const ScalarField& y) {
    x.check_same_grid(y);
    double m = 0.0;
    for (std::size_t i = 0; i < x.data.size(); ++i)
        m = std::max(m, std::fabs(x.data[i] - y.data[i]));
    return m;
}

/// Fill from a callable of the four coordinates.
template <class F>
ScalarField sample_field(const Grid& g, F&& f) {
    ScalarField out(g);
    for (int i0 = 0; i0 < g.n[0]; ++i0)
        for (int i1 = 0; i1 < g.n[1]; ++i1)
            for (int i2 = 0; i2 < g.n[2]; ++i2)
                for (int i3 = 0; i3 < g.n[3]; ++i3)
                    out(i0, i1, i2, i3) = f(g.coord(0, i0), g.coord(1, i1),
                                            g.coord(2, i2), g.coord(3, i3));
    return out;
}

} // namespace fracfield
