#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace cosserat {

// Uniform collocated rectangular grid; node (i,j) sits at (x0 + i dx, y0 + j dy).
struct FieldGrid {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;

    FieldGrid() = default;
    FieldGrid(int nx, int ny, double dx, double dy, double x0 = 0.0, double y0 = 0.0);

    // Grid covering [0,a] x [0,b] with nx*ny nodes.
    static FieldGrid over_rectangle(double a, double b, int nx, int ny);

    int size() const { return nx * ny; }
    int idx(int i, int j) const { return j * nx + i; }
    double x(int i) const { return x0 + i * dx; }
    double y(int j) const { return y0 + j * dy; }
    bool on_boundary(int i, int j) const { return i == 0 || j == 0 || i == nx - 1 || j == ny - 1; }
    bool same_layout(const FieldGrid& o) const;
};

using Field = std::vector<double>;  // one scalar per node

Field zero_field(const FieldGrid& g);

template <std::size_t N>
struct GriddedSet {
    FieldGrid grid;
    std::array<Field, N> comp;
};

template <std::size_t N>
GriddedSet<N> make_gridded_set(const FieldGrid& g) {
    GriddedSet<N> s;
    s.grid = g;
    for (auto& f : s.comp) f = zero_field(g);
    return s;
}

// Second-order first derivatives at a node: central in the interior,
// one-sided three-point at the boundary. Exact on quadratics.
double ddx(const FieldGrid& g, const Field& f, int i, int j);
double ddy(const FieldGrid& g, const Field& f, int i, int j);

// The same stencils exposed as (offset, weight) pairs so that assembly and
// residual evaluation share a single definition.
struct StencilEntry {
    int d = 0;   // node offset along the derivative direction
    double w = 0.0;
};
std::array<StencilEntry, 3> ddx_stencil(const FieldGrid& g, int i);
std::array<StencilEntry, 3> ddy_stencil(const FieldGrid& g, int j);

// Value and first derivatives of the local biquadratic interpolant (3x3
// node stencil) at an arbitrary point; reduces to the central stencils when
// the point is a grid node. Requires the point to be at least one spacing
// from the domain boundary (throws std::domain_error otherwise).
struct PointDerivs {
    double value = 0.0;
    double dx = 0.0;
    double dy = 0.0;
};
PointDerivs interp_derivs(const FieldGrid& g, const Field& f, double x, double y);

}  // namespace cosserat
