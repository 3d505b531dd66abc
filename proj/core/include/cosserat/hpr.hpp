#pragma once

#include <vector>

#include "cosserat/plate_constitutive.hpp"
#include "cosserat/plate_kinematics.hpp"
#include "cosserat/solver.hpp"

namespace cosserat {

// Independent stress and kinematic fields over the same grid; the mixed
// functional below is stationary exactly when they satisfy the constitutive
// relation, the balance equations and the boundary conditions together.
struct AdmissibleState {
    StressFields S;
    KinematicFields U;
};

AdmissibleState state_from_solution(const PlateSolution& sol);

// Two-field plate functional (trapezoid quadrature):
//   Theta = int Phi(S, l)
//         - int (S . E(U) - p W - v Om03)
//         + int_{displacement edges} S_n . (U - U_data)
//         + int_{traction edges}     S_data . U
// Simply supported edges contribute S_n . U over their pinned components.
// Stationarity in S recovers E(U) = K S + G l (and U = U_data on
// displacement edges); stationarity in U recovers the balance equations
// (and S_n = S_data on traction edges).
struct HprBreakdown {
    double energy = 0.0;
    double internal_work = 0.0;
    double displacement_term = 0.0;
    double traction_term = 0.0;
    double total = 0.0;
};
HprBreakdown hpr_functional(const PlateProblem& problem, const AdmissibleState& state);

// Central-difference directional derivatives of Theta along random
// directions supported away from the boundary (zero in the three-node band
// that the one-sided edge stencils can reach, so summation by parts is
// exact), normalized by the magnitude of the functional's parts. Near zero
// at a discrete solution.
struct StationarityCheck {
    std::vector<double> samples;
    double max_normalized_derivative = 0.0;
};
StationarityCheck stationarity_check(const PlateProblem& problem, const AdmissibleState& state,
                                     int directions = 20, unsigned seed = 1234);

// Classical Reissner plate driven by p0 sin(m pi x / a) sin(n pi y / b):
// exact amplitude of the deflection, for comparison with the decoupled
// limit of the micropolar model.
struct ReissnerReference {
    double young = 0.0;
    double poisson = 0.0;
    double bending_stiffness = 0.0;  // E h^3 / (12 (1 - nu^2))
    double shear_factor = 5.0 / 6.0;
    double k2 = 0.0;                 // (m pi / a)^2 + (n pi / b)^2
    double w_amplitude = 0.0;        // p0 / (D k^4) + p0 / (kappa mu h k^2)
};
ReissnerReference navier_reissner_reference(const CosseratModuli& m, double h, double a, double b,
                                            int mm, int nn, double p0);

// Dense SVD of the assembled (unbordered) operator of a small pure-traction
// problem: dimension of its kernel, the largest principal angle between the
// kernel and the discrete rigid-motion family, and the smallest non-kernel
// singular value. Grids are capped at 200 nodes (dense decomposition).
struct NullSpaceReport {
    int kernel_dim = 0;
    double max_principal_angle = 0.0;
    double smallest_nonkernel_singular_value = 0.0;
};
NullSpaceReport null_space_report(const PlateProblem& problem);

}  // namespace cosserat
