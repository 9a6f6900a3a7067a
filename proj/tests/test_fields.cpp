#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fracfield/fields.hpp"
#include "fracfield/maxwell.hpp"
#include "fracfield/rng.hpp"
#include "oracles.hpp"

using namespace fracfield;

namespace {

FourPotential random_potential(const Grid& g, Rng& rng) {
    FourPotential A(g);
    for (auto& c : A.comp) fill_random(c, rng);
    return A;
}

FieldTensor random_tensor(const Grid& g, Rng& rng) {
    FieldTensor F(g);
    for (auto& c : F.E) fill_random(c, rng);
    for (auto& c : F.B) fill_random(c, rng);
    return F;
}

} // namespace

TEST_CASE("field strength of the zero potential vanishes", "[fields]") {
    const Grid g = Grid::box({4, 5, 5, 5}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.5, 0.7, g.a, g.b);
    const FourPotential A(g);
    CHECK(field_strength_lr(A, s).max_abs() == 0.0);
    CHECK(field_strength_right(A, 0.5).max_abs() == 0.0);
}

TEST_CASE("pure-gauge potentials produce no field", "[fields]") {
    const Grid g = Grid::box({5, 5, 5, 5}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.4, 0.8, g.a, g.b);
    Rng rng(31);
    const ScalarField phi = random_field(g, rng);

    SECTION("left-right tensor") {
        FourPotential A(g);
        for (int mu = 0; mu < 4; ++mu) A.comp[mu] = partial_lr(phi, mu, s);
        const FieldTensor F = field_strength_lr(A, s);
        CHECK(F.max_abs() <= 1e-12);
    }
    SECTION("right tensor") {
        FourPotential A(g);
        for (int mu = 0; mu < 4; ++mu) A.comp[mu] = partial_right(phi, mu, 0.6);
        const FieldTensor F = field_strength_right(A, 0.6);
        CHECK(F.max_abs() <= 1e-12);
    }
}

TEST_CASE("classical curl appears at order 1", "[fields]") {
    // A = (0, -x y, 0, 0) stores the vector potential (x y, 0, 0), whose
    // curl has B_z = -x.
    const Grid g = Grid::box({4, 9, 9, 4}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(1.0, 1.0, g.a, g.b);
    FourPotential A(g);
    A.comp[1] = sample_field(g, [](double, double x, double y, double) { return -x * y; });
    const FieldTensor F = field_strength_lr(A, s);

    // central-difference curl oracle on the same grid
    const double h1 = g.spacing(1), h2 = g.spacing(2);
    for (int i0 = 1; i0 < g.n[0] - 1; ++i0)
        for (int i1 = 1; i1 < g.n[1] - 1; ++i1)
            for (int i2 = 1; i2 < g.n[2] - 1; ++i2)
                for (int i3 = 1; i3 < g.n[3] - 1; ++i3) {
                    const double avx_y_plus = g.coord(1, i1) * g.coord(2, i2 + 1);
                    const double avx_y_minus = g.coord(1, i1) * g.coord(2, i2 - 1);
                    const double oracle = -(avx_y_plus - avx_y_minus) / (2.0 * h2); // -d_y(xy)
                    (void)h1;
                    CHECK_THAT(F.B[2](i0, i1, i2, i3), Catch::Matchers::WithinAbs(oracle, 1e-12));
                    CHECK_THAT(F.B[2](i0, i1, i2, i3),
                               Catch::Matchers::WithinAbs(-g.coord(1, i1), 1e-12));
                }
}

TEST_CASE("gauge transformation leaves the tensor invariant", "[fields]") {
    const Grid g = Grid::box({6, 6, 6, 6}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.5, 0.5, g.a, g.b);
    Rng rng(7);
    const FourPotential A = random_potential(g, rng);
    const ScalarField phi = random_field(g, rng);

    SECTION("identity gauge") {
        const ScalarField zero(g);
        const FourPotential A2 = gauge_transform(A, zero, s);
        for (int mu = 0; mu < 4; ++mu) CHECK(max_abs_diff(A.comp[mu], A2.comp[mu]) == 0.0);
    }

    SECTION("constant gauge function changes A but not F") {
        const Grid gs = Grid::box({6, 6, 6, 6}, {-1, -1, -1, -1}, {1, 1, 1, 1});
        const FracScheme sym = FracScheme::uniform(0.5, 0.5, gs.a, gs.b);
        REQUIRE(sym.symmetric());
        Rng r2(8);
        const FourPotential As = random_potential(gs, r2);
        const ScalarField ones(gs, 1.0);
        const FourPotential As2 = gauge_transform(As, ones, sym);
        double change = 0.0;
        for (int mu = 0; mu < 4; ++mu) change = std::max(change, max_abs_diff(As.comp[mu], As2.comp[mu]));
        CHECK(change > 1e-3); // a fractional derivative of a constant is not zero
        const double df = max_abs_diff(field_strength_lr(As, sym), field_strength_lr(As2, sym));
        CHECK(df <= 1e-12 * (field_strength_lr(As, sym).max_abs() + 1.0));
    }

    SECTION("random gauge invariance, left-right tensor") {
        const FieldTensor F1 = field_strength_lr(A, s);
        const FieldTensor F2 = field_strength_lr(gauge_transform(A, phi, s), s);
        CHECK(max_abs_diff(F1, F2) <= 1e-12 * (F1.max_abs() + 1.0));
    }

    SECTION("random gauge invariance, right tensor") {
        const FieldTensor F1 = field_strength_right(A, 0.5);
        const FieldTensor F2 = field_strength_right(gauge_transform_right(A, phi, 0.5), 0.5);
        CHECK(max_abs_diff(F1, F2) <= 1e-12 * (F1.max_abs() + 1.0));
    }

    SECTION("two transforms compose additively") {
        Rng r3(9);
        const ScalarField phi2 = random_field(g, r3);
        const FourPotential twice = gauge_transform(gauge_transform(A, phi, s), phi2, s);
        const FourPotential once = gauge_transform(A, phi + phi2, s);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            worst = std::max(worst, max_abs_diff(twice.comp[mu], once.comp[mu]));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("tensor component view is antisymmetric by construction", "[fields]") {
    const Grid g = Grid::box({3, 4, 4, 3}, {0, 0, 0, 0}, {1, 1, 1, 1});
    Rng rng(12);
    const FieldTensor F = random_tensor(g, rng);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const ScalarField sum = F.component(mu, nu) + F.component(nu, mu);
            CHECK(sum.max_abs() == 0.0);
        }
}

TEST_CASE("E/B extraction round trips exactly", "[fields]") {
    const Grid g = Grid::box({3, 4, 5, 3}, {0, 0, 0, 0}, {1, 1, 1, 1});
    Rng rng(3);
    const FieldTensor F = random_tensor(g, rng);
    const FieldTensor F2 = reconstruct_tensor(g, extract_eb(F));
    CHECK(max_abs_diff(F, F2) == 0.0);

    SECTION("a lone electric component sits at F_01") {
        FieldTensor Fx(g);
        Fx.E[0] = random_field(g, rng);
        CHECK(max_abs_diff(Fx.component(0, 1), Fx.E[0]) == 0.0);
        CHECK(Fx.component(1, 2).max_abs() == 0.0);
        CHECK(Fx.B[0].max_abs() == 0.0);
    }
}

TEST_CASE("field strength is linear in the potential", "[fields]") {
    const Grid g = Grid::box({5, 5, 5, 5}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.3, 0.9, g.a, g.b);
    Rng rng(21);
    const FourPotential A = random_potential(g, rng);
    const FourPotential B = random_potential(g, rng);
    const FieldTensor sum = field_strength_lr(A + B, s);
    FieldTensor parts = field_strength_lr(A, s);
    const FieldTensor fb = field_strength_lr(B, s);
    for (int i = 0; i < 3; ++i) {
        parts.E[i] += fb.E[i];
        parts.B[i] += fb.B[i];
    }
    CHECK(max_abs_diff(sum, parts) <= 1e-12 * (sum.max_abs() + 1.0));
}

TEST_CASE("Lorenz-gauge residual", "[fields]") {
    const Grid g = Grid::box({6, 6, 6, 6}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.5, 0.6, g.a, g.b);

    SECTION("zero potential") {
        CHECK(lorenz_residual(FourPotential(g), s).max_abs() == 0.0);
    }

    SECTION("static divergence-free vector potential at order 1") {
        const FracScheme s1 = FracScheme::uniform(1.0, 1.0, g.a, g.b);
        FourPotential A(g);
        A.comp[0] = ScalarField(g, 5.0);
        // vector potential (y, x, 0): linear, divergence-free, exactly
        // differentiated by the central stencil
        A.comp[1] = sample_field(g, [](double, double, double y, double) { return -y; });
        A.comp[2] = sample_field(g, [](double, double x, double, double) { return -x; });
        const ScalarField r = lorenz_residual(A, s1);
        for (int i0 = 1; i0 < g.n[0] - 1; ++i0)
            for (int i1 = 1; i1 < g.n[1] - 1; ++i1)
                for (int i2 = 1; i2 < g.n[2] - 1; ++i2)
                    for (int i3 = 1; i3 < g.n[3] - 1; ++i3)
                        CHECK_THAT(r(i0, i1, i2, i3), Catch::Matchers::WithinAbs(0.0, 1e-12));
    }

    SECTION("random potential matches the vector-calculus route") {
        Rng rng(17);
        const FourPotential A = random_potential(g, rng);
        const ScalarField direct = lorenz_residual(A, s);

        VectorField3 a_vec(g);
        for (int i = 0; i < 3; ++i) a_vec[i] = A.a_vec(i);
        ScalarField via_div = partial_lr(A.psi(), 0, s) + div_lr(a_vec, s);
        CHECK(max_abs_diff(direct, via_div) <= 1e-12);
    }
}

TEST_CASE("integer-order tensor recovers the classical fields under refinement",
          "[fields]") {
    const auto psi = [](double, double x, double y, double z) {
        return std::sin(2.0 * x) * std::cos(y) + z;
    };
    // stored A_i = -vector potential
    const auto avx = [](double t, double, double y, double) { return std::cos(t) * std::sin(y); };
    const auto avy = [](double t, double x, double, double) { return std::sin(t + x); };
    const auto avz = [](double, double x, double y, double) { return x * y; };

    auto worst_error = [&](int n) {
        const Grid g = Grid::box({n, n, n, n}, {0, 0, 0, 0}, {1, 1, 1, 1});
        const FracScheme s = FracScheme::uniform(1.0, 1.0, g.a, g.b);
        FourPotential A(g);
        A.comp[0] = sample_field(g, psi);
        A.comp[1] = sample_field(g, [&](double t, double x, double y, double z) {
            return -avx(t, x, y, z);
        });
        A.comp[2] = sample_field(g, [&](double t, double x, double y, double z) {
            return -avy(t, x, y, z);
        });
        A.comp[3] = sample_field(g, [&](double t, double x, double y, double z) {
            return -avz(t, x, y, z);
        });
        const FieldTensor F = field_strength_lr(A, s);

        // E = -grad psi - d_0 Avec, B = curl Avec (x_0 = c t convention)
        double err = 0.0;
        for (int i0 = 1; i0 < n - 1; ++i0)
            for (int i1 = 1; i1 < n - 1; ++i1)
                for (int i2 = 1; i2 < n - 1; ++i2)
                    for (int i3 = 1; i3 < n - 1; ++i3) {
                        const double t = g.coord(0, i0), x = g.coord(1, i1);
                        const double y = g.coord(2, i2), z = g.coord(3, i3);
                        const double ex = -2.0 * std::cos(2.0 * x) * std::cos(y) +
                                          std::sin(t) * std::sin(y);
                        const double ey = std::sin(2.0 * x) * std::sin(y) - std::cos(t + x);
                        const double ez = -1.0;
                        const double bx = x;  // d_y avz - d_z avy
                        const double by = -y; // d_z avx - d_x avz
                        const double bz = std::cos(t + x) - std::cos(t) * std::cos(y);
                        err = std::max(err, std::fabs(F.E[0](i0, i1, i2, i3) - ex));
                        err = std::max(err, std::fabs(F.E[1](i0, i1, i2, i3) - ey));
                        err = std::max(err, std::fabs(F.E[2](i0, i1, i2, i3) - ez));
                        err = std::max(err, std::fabs(F.B[0](i0, i1, i2, i3) - bx));
                        err = std::max(err, std::fabs(F.B[1](i0, i1, i2, i3) - by));
                        err = std::max(err, std::fabs(F.B[2](i0, i1, i2, i3) - bz));
                    }
        return err;
    };

    const double e1 = worst_error(7);
    const double e2 = worst_error(13);
    INFO("e(h)=" << e1 << " e(h/2)=" << e2);
    CHECK(e2 < e1 / 1.5);
}

TEST_CASE("right tensor at order 1 is minus the classical tensor", "[fields]") {
    // The right derivative at order 1 is minus the ordinary derivative,
    // so the right-sided tensor converges to the negative of the
    // left-right one on smooth potentials.
    auto gap = [&](int n) {
        const Grid g = Grid::box({n, n, n, n}, {0, 0, 0, 0}, {1, 1, 1, 1});
        const FracScheme s = FracScheme::uniform(1.0, 1.0, g.a, g.b);
        FourPotential A(g);
        A.comp[0] = sample_field(g, [](double t, double x, double y, double z) {
            return std::sin(t + 2.0 * x) + y * z;
        });
        A.comp[2] = sample_field(g, [](double t, double x, double, double) {
            return std::cos(x - t);
        });
        const FieldTensor lr = field_strength_lr(A, s);
        const FieldTensor right = field_strength_right(A, 1.0);
        double err = 0.0;
        for (int i0 = 1; i0 < n - 1; ++i0)
            for (int i1 = 1; i1 < n - 1; ++i1)
                for (int i2 = 1; i2 < n - 1; ++i2)
                    for (int i3 = 1; i3 < n - 1; ++i3)
                        for (int comp = 0; comp < 3; ++comp) {
                            err = std::max(err, std::fabs(right.E[comp](i0, i1, i2, i3) +
                                                          lr.E[comp](i0, i1, i2, i3)));
                            err = std::max(err, std::fabs(right.B[comp](i0, i1, i2, i3) +
                                                          lr.B[comp](i0, i1, i2, i3)));
                        }
        return err;
    };
    const double e1 = gap(7), e2 = gap(13);
    INFO("e(h)=" << e1 << " e(h/2)=" << e2);
    CHECK(e2 < e1 / 1.5); // one-sided vs central stencil difference is O(h)
}

TEST_CASE("grid mismatch errors", "[fields]") {
    const Grid g = Grid::box({4, 4, 4, 4}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const Grid g2 = Grid::box({4, 4, 4, 5}, {0, 0, 0, 0}, {1, 1, 1, 1});
    const FracScheme s = FracScheme::uniform(0.5, 0.5, g.a, g.b);
    const FourPotential A(g);
    CHECK_THROWS_AS(gauge_transform(A, ScalarField(g2), s), std::invalid_argument);
    FracScheme bad = s;
    bad.a[2] = -3.0;
    CHECK_THROWS_AS(field_strength_lr(A, bad), std::invalid_argument);
}
