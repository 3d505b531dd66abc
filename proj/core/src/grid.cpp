#include "cosserat/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

FieldGrid::FieldGrid(int nx_, int ny_, double dx_, double dy_, double x0_, double y0_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), x0(x0_), y0(y0_) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("FieldGrid: nx and ny must be >= 3");
    if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("FieldGrid: spacings must be positive");
}

FieldGrid FieldGrid::over_rectangle(double a, double b, int nx, int ny) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("FieldGrid::over_rectangle: side lengths must be positive");
    if (nx < 3 || ny < 3)
        throw std::invalid_argument("FieldGrid::over_rectangle: nx and ny must be >= 3");
    return FieldGrid(nx, ny, a / (nx - 1), b / (ny - 1), 0.0, 0.0);
}

bool FieldGrid::same_layout(const FieldGrid& o) const {
    return nx == o.nx && ny == o.ny && dx == o.dx && dy == o.dy && x0 == o.x0 && y0 == o.y0;
}

Field zero_field(const FieldGrid& g) { return Field(static_cast<std::size_t>(g.size()), 0.0); }

std::array<StencilEntry, 3> ddx_stencil(const FieldGrid& g, int i) {
    const double s = 1.0 / (2.0 * g.dx);
    if (i == 0) return {{{0, -3.0 * s}, {1, 4.0 * s}, {2, -1.0 * s}}};
    if (i == g.nx - 1) return {{{0, 3.0 * s}, {-1, -4.0 * s}, {-2, 1.0 * s}}};
    return {{{-1, -s}, {0, 0.0}, {1, s}}};
}

std::array<StencilEntry, 3> ddy_stencil(const FieldGrid& g, int j) {
    const double s = 1.0 / (2.0 * g.dy);
    if (j == 0) return {{{0, -3.0 * s}, {1, 4.0 * s}, {2, -1.0 * s}}};
    if (j == g.ny - 1) return {{{0, 3.0 * s}, {-1, -4.0 * s}, {-2, 1.0 * s}}};
    return {{{-1, -s}, {0, 0.0}, {1, s}}};
}

double ddx(const FieldGrid& g, const Field& f, int i, int j) {
    double v = 0.0;
    for (const auto& e : ddx_stencil(g, i)) v += e.w * f[static_cast<std::size_t>(g.idx(i + e.d, j))];
    return v;
}

double ddy(const FieldGrid& g, const Field& f, int i, int j) {
    double v = 0.0;
    for (const auto& e : ddy_stencil(g, j)) v += e.w * f[static_cast<std::size_t>(g.idx(i, j + e.d))];
    return v;
}

PointDerivs interp_derivs(const FieldGrid& g, const Field& f, double x, double y) {
    const double tol_x = 1e-12 * (std::abs(g.dx) + std::abs(x));
    const double tol_y = 1e-12 * (std::abs(g.dy) + std::abs(y));
    if (x < g.x(1) - tol_x || x > g.x(g.nx - 2) + tol_x || y < g.y(1) - tol_y ||
        y > g.y(g.ny - 2) + tol_y)
        throw std::domain_error("interp_derivs: point lacks an interior 3x3 stencil");

    int ic = static_cast<int>(std::lround((x - g.x0) / g.dx));
    int jc = static_cast<int>(std::lround((y - g.y0) / g.dy));
    ic = std::min(std::max(ic, 1), g.nx - 2);
    jc = std::min(std::max(jc, 1), g.ny - 2);
    const double xi = (x - g.x(ic)) / g.dx;
    const double eta = (y - g.y(jc)) / g.dy;

    // Quadratic Lagrange basis on offsets {-1, 0, +1}.
    const double wx[3] = {0.5 * xi * (xi - 1.0), 1.0 - xi * xi, 0.5 * xi * (xi + 1.0)};
    const double dwx[3] = {(xi - 0.5) / g.dx, -2.0 * xi / g.dx, (xi + 0.5) / g.dx};
    const double wy[3] = {0.5 * eta * (eta - 1.0), 1.0 - eta * eta, 0.5 * eta * (eta + 1.0)};
    const double dwy[3] = {(eta - 0.5) / g.dy, -2.0 * eta / g.dy, (eta + 0.5) / g.dy};

    PointDerivs out;
    for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
            const double v = f[static_cast<std::size_t>(g.idx(ic + a, jc + b))];
            out.value += wx[a + 1] * wy[b + 1] * v;
            out.dx += dwx[a + 1] * wy[b + 1] * v;
            out.dy += wx[a + 1] * dwy[b + 1] * v;
        }
    }
    return out;
}

}  // namespace cosserat
