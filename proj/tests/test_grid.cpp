#include <cmath>
#include <stdexcept>

#include "cosserat/grid.hpp"
#include "doctest.h"

using namespace cosserat;

namespace {

double quad(double x, double y) { return 2.0 + 3.0 * x - x * x + 0.5 * x * y + y * y; }
double quad_dx(double x, double y) { return 3.0 - 2.0 * x + 0.5 * y; }
double quad_dy(double x, double y) { return 0.5 * x + 2.0 * y; }

Field sample(const FieldGrid& g, double (*f)(double, double)) {
    Field out = zero_field(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out[g.idx(i, j)] = f(g.x(i), g.y(j));
    return out;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("construction and layout") {
    const FieldGrid g = FieldGrid::over_rectangle(2.0, 1.0, 5, 3);
    CHECK(g.nx == 5);
    CHECK(g.ny == 3);
    CHECK(g.dx == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.dy == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.size() == 15);
    CHECK(g.idx(2, 1) == 7);
    CHECK(g.x(4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.y(2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.on_boundary(0, 1));
    CHECK(g.on_boundary(3, 2));
    CHECK(!g.on_boundary(2, 1));
}

TEST_CASE("invalid layouts are rejected") {
    CHECK_THROWS_AS(FieldGrid(1, 4, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(FieldGrid(4, 4, -0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(FieldGrid(4, 4, 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FieldGrid::over_rectangle(0.0, 1.0, 4, 4), std::invalid_argument);
}

TEST_CASE("derivatives are exact on quadratics everywhere") {
    const FieldGrid g = FieldGrid::over_rectangle(1.5, 1.0, 7, 6);
    const Field f = sample(g, quad);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            CHECK(ddx(g, f, i, j) == doctest::Approx(quad_dx(g.x(i), g.y(j))).epsilon(1e-12));
            CHECK(ddy(g, f, i, j) == doctest::Approx(quad_dy(g.x(i), g.y(j))).epsilon(1e-12));
        }
}

TEST_CASE("exposed stencils reproduce the derivative routines") {
    const FieldGrid g = FieldGrid::over_rectangle(1.0, 1.0, 6, 5);
    const Field f = sample(g, quad);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double dx_sum = 0.0;
            for (const auto& s : ddx_stencil(g, i)) dx_sum += s.w * f[g.idx(i + s.d, j)];
            CHECK(dx_sum == doctest::Approx(ddx(g, f, i, j)).epsilon(1e-14));
            double dy_sum = 0.0;
            for (const auto& s : ddy_stencil(g, j)) dy_sum += s.w * f[g.idx(i, j + s.d)];
            CHECK(dy_sum == doctest::Approx(ddy(g, f, i, j)).epsilon(1e-14));
        }
}

TEST_CASE("biquadratic interpolation is exact on quadratics") {
    const FieldGrid g = FieldGrid::over_rectangle(1.0, 1.0, 9, 9);
    const Field f = sample(g, quad);
    for (double x : {0.2, 0.41, 0.63}) {
        for (double y : {0.3, 0.52, 0.7}) {
            const PointDerivs p = interp_derivs(g, f, x, y);
            CHECK(p.value == doctest::Approx(quad(x, y)).epsilon(1e-12));
            CHECK(p.dx == doctest::Approx(quad_dx(x, y)).epsilon(1e-11));
            CHECK(p.dy == doctest::Approx(quad_dy(x, y)).epsilon(1e-11));
        }
    }
}

TEST_CASE("interpolation at a node matches the nodal stencils") {
    const FieldGrid g = FieldGrid::over_rectangle(1.0, 1.0, 9, 9);
    const Field f = sample(g, quad);
    const PointDerivs p = interp_derivs(g, f, g.x(4), g.y(3));
    CHECK(p.value == doctest::Approx(f[g.idx(4, 3)]).epsilon(1e-14));
    CHECK(p.dx == doctest::Approx(ddx(g, f, 4, 3)).epsilon(1e-13));
    CHECK(p.dy == doctest::Approx(ddy(g, f, 4, 3)).epsilon(1e-13));
}

TEST_CASE("interpolation requires an interior stencil") {
    const FieldGrid g = FieldGrid::over_rectangle(1.0, 1.0, 9, 9);
    const Field f = sample(g, quad);
    CHECK_THROWS_AS(interp_derivs(g, f, 0.01, 0.5), std::domain_error);
    CHECK_THROWS_AS(interp_derivs(g, f, 0.5, 0.999), std::domain_error);
}

TEST_CASE("gridded sets start zeroed") {
    const FieldGrid g = FieldGrid::over_rectangle(1.0, 1.0, 4, 4);
    const auto s = make_gridded_set<3>(g);
    CHECK(s.grid.same_layout(g));
    for (const auto& f : s.comp) {
        CHECK(static_cast<int>(f.size()) == g.size());
        for (double v : f) CHECK(v == 0.0);
    }
}

}  // TEST_SUITE
