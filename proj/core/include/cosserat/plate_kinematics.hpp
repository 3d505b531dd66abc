#pragma once

#include <Eigen/Dense>

#include "cosserat/grid.hpp"
#include "cosserat/resultants.hpp"

namespace cosserat {

using KinematicFields = GriddedSet<9>;   // uidx component order
using StrainFields = GriddedSet<20>;     // eidx component order
using StressFields = GriddedSet<20>;     // sidx component order

// Strain-displacement relation as coefficient tables:
//   E_i = sum_j ( c0[i][j] U_j + c1[i][j][g] * d U_j / d x_g ).
// This is the single source of truth: the discrete strain operator applies
// it with FD stencils, the solver's interior equilibrium rows are its
// formal adjoint, and traction rows contract c1 with the edge normal.
struct StrainOperatorTables {
    double c0[20][9];
    double c1[20][9][2];
};
const StrainOperatorTables& strain_tables();

// Discrete strain operator (second-order central differences inside,
// one-sided second-order at edges).
StrainFields strain_from_kinematics(const KinematicFields& U);

// Pointwise strain from analytic values and gradients (same tables);
// grad_U(j, g) = d U_j / d x_g.
StrainSet strain_from_point_values(const Vec9& U, const Eigen::Matrix<double, 9, 2>& grad_U);

// Rigid plate motions: in-plane translations, vertical translation,
// two tilts and the drilling rotation. These span the kernel of the strain
// operator.
struct RigidMotionParams {
    double U0_1 = 0.0;
    double U0_2 = 0.0;
    double W0 = 0.0;
    double Om0_1 = 0.0;
    double Om0_2 = 0.0;
    double Om0_3 = 0.0;
};

// U1 = -Om0_3 x2 + U0_1, U2 = Om0_3 x1 + U0_2,
// W = Om0_1 x2 - Om0_2 x1 + W0, Psi1 = Om0_2, Psi2 = -Om0_1,
// Om0_a and Om0_3 constant, Om3 = 0.
KinematicSet rigid_motion_at(const RigidMotionParams& p, double x, double y);
KinematicFields rigid_motion_fields(const RigidMotionParams& p, const FieldGrid& grid);

}  // namespace cosserat
