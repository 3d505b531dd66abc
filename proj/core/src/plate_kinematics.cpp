#include "cosserat/plate_kinematics.hpp"

namespace cosserat {

namespace {

StrainOperatorTables build_tables() {
    StrainOperatorTables t{};
    using namespace uidx;
    auto d = [&t](int strain, int field, int dir) { t.c1[strain][field][dir] = 1.0; };
    auto a = [&t](int strain, int field, double c) { t.c0[strain][field] = c; };

    // e_ab = Psi_b,a - eps_3ab Om3
    d(eidx::e11, Psi1, 0);
    d(eidx::e12, Psi2, 0);
    a(eidx::e12, Om3, -1.0);
    d(eidx::e21, Psi1, 1);
    a(eidx::e21, Om3, 1.0);
    d(eidx::e22, Psi2, 1);
    // om_a = Psi_a - eps_3ab Om0_b
    a(eidx::om1, Psi1, 1.0);
    a(eidx::om1, Om02, -1.0);
    a(eidx::om2, Psi2, 1.0);
    a(eidx::om2, Om01, 1.0);
    // om*_a = W,a + eps_3ab Om0_b
    d(eidx::oms1, W, 0);
    a(eidx::oms1, Om02, 1.0);
    d(eidx::oms2, W, 1);
    a(eidx::oms2, Om01, -1.0);
    // tau0_ab = Om0_b,a ; tau_3a = Om3,a
    d(eidx::t011, Om01, 0);
    d(eidx::t012, Om02, 0);
    d(eidx::t021, Om01, 1);
    d(eidx::t022, Om02, 1);
    d(eidx::t31, Om3, 0);
    d(eidx::t32, Om3, 1);
    // upsilon_ab = U_b,a - eps_3ab Om03
    d(eidx::up11, U1, 0);
    d(eidx::up12, U2, 0);
    a(eidx::up12, Om03, -1.0);
    d(eidx::up21, U1, 1);
    a(eidx::up21, Om03, 1.0);
    d(eidx::up22, U2, 1);
    // tau0_3a = Om03,a
    d(eidx::t031, Om03, 0);
    d(eidx::t032, Om03, 1);
    return t;
}

}  // namespace

const StrainOperatorTables& strain_tables() {
    static const StrainOperatorTables tables = build_tables();
    return tables;
}

StrainFields strain_from_kinematics(const KinematicFields& U) {
    const auto& t = strain_tables();
    StrainFields E = make_gridded_set<20>(U.grid);
    const FieldGrid& g = U.grid;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int node = g.idx(i, j);
            for (int s = 0; s < 20; ++s) {
                double val = 0.0;
                for (int f = 0; f < 9; ++f) {
                    if (t.c0[s][f] != 0.0) val += t.c0[s][f] * U.comp[f][node];
                    if (t.c1[s][f][0] != 0.0) val += t.c1[s][f][0] * ddx(g, U.comp[f], i, j);
                    if (t.c1[s][f][1] != 0.0) val += t.c1[s][f][1] * ddy(g, U.comp[f], i, j);
                }
                E.comp[s][node] = val;
            }
        }
    }
    return E;
}

StrainSet strain_from_point_values(const Vec9& U, const Eigen::Matrix<double, 9, 2>& grad_U) {
    const auto& t = strain_tables();
    StrainSet E;
    for (int s = 0; s < 20; ++s) {
        double val = 0.0;
        for (int f = 0; f < 9; ++f) {
            val += t.c0[s][f] * U[f];
            val += t.c1[s][f][0] * grad_U(f, 0) + t.c1[s][f][1] * grad_U(f, 1);
        }
        E[s] = val;
    }
    return E;
}

KinematicSet rigid_motion_at(const RigidMotionParams& p, double x, double y) {
    KinematicSet u;
    u[uidx::U1] = -p.Om0_3 * y + p.U0_1;
    u[uidx::U2] = p.Om0_3 * x + p.U0_2;
    u[uidx::W] = p.Om0_1 * y - p.Om0_2 * x + p.W0;
    u[uidx::Psi1] = p.Om0_2;
    u[uidx::Psi2] = -p.Om0_1;
    u[uidx::Om01] = p.Om0_1;
    u[uidx::Om02] = p.Om0_2;
    u[uidx::Om3] = 0.0;
    u[uidx::Om03] = p.Om0_3;
    return u;
}

KinematicFields rigid_motion_fields(const RigidMotionParams& p, const FieldGrid& grid) {
    KinematicFields U = make_gridded_set<9>(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const KinematicSet u = rigid_motion_at(p, grid.x(i), grid.y(j));
            const int node = grid.idx(i, j);
            for (int f = 0; f < 9; ++f) U.comp[f][node] = u[f];
        }
    }
    return U;
}

}  // namespace cosserat
