#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <functional>
#include <vector>

#include "cosserat/grid.hpp"
#include "cosserat/material.hpp"
#include "cosserat/plate_constitutive.hpp"
#include "cosserat/plate_kinematics.hpp"
#include "cosserat/profiles.hpp"

namespace cosserat {

// Scalar data over the mid-plane; an empty function means identically zero.
using ScalarField = std::function<double(double, double)>;

ScalarField uniform(double value);

// Face tractions as fields; see PlateLoads for the derived combinations.
struct FaceLoads {
    ScalarField sigma_top;
    ScalarField sigma_bottom;
    ScalarField mu_top;
    ScalarField mu_bottom;

    PlateLoads at(double x, double y) const;
};

// Edge condition kinds per field group.
//  - Displacement: all kinematic components of the group prescribed.
//  - Traction: all conjugate edge fluxes of the group prescribed
//    (first-index contraction with the outward normal).
//  - SimplySupported: hard simple support; homogeneous mixed data.
//    On x = const edges the bending group pins (Psi2, W, Om01) and leaves
//    (Psi1, Om02, Om3) traction free; the twisting group pins U2.
//    On y = const edges the roles of the two in-plane directions swap.
enum class BCKind { Displacement, Traction, SimplySupported };

// Data slots are ordered like the group's kinematic components:
// bending (Psi1, Psi2, W, Om01, Om02, Om3), twisting (U1, U2, Om03).
// Under Traction the same slots hold the conjugate fluxes
// (M_n1, M_n2, Q*_n, R_n1, R_n2, S*_n) and (N_n1, N_n2, M*_n).
// SimplySupported ignores the data (homogeneous by definition).
struct EdgeCondition {
    BCKind bending = BCKind::Displacement;
    BCKind twisting = BCKind::Displacement;
    std::array<ScalarField, 6> bending_data{};
    std::array<ScalarField, 3> twisting_data{};
};

enum class PlateModel { Full, DecoupledReissner, SymmetricM };

// Edges are indexed 0 left (x=0), 1 right (x=a), 2 bottom (y=0), 3 top (y=b).
struct PlateProblem {
    CosseratModuli moduli;
    double a = 1.0;
    double b = 1.0;
    double h = 0.1;
    int nx = 17;
    int ny = 17;
    FaceLoads loads;
    std::array<EdgeCondition, 4> edges{};
    // Optional distributed forcing added to the balance rows, one slot per
    // kinematic component (uidx order). The physical face loads only force
    // the W and Om03 rows; these slots exist for manufactured-solution
    // studies and generalized body couples.
    std::array<ScalarField, 9> forcing{};

    void validate() const;  // throws std::invalid_argument
    FieldGrid grid() const { return FieldGrid::over_rectangle(a, b, nx, ny); }
};

// Convenience: the same kind on all edges with homogeneous data.
std::array<EdgeCondition, 4> all_edges(BCKind kind);

struct SolverStats {
    bool used_iterative = false;
    int iterations = 0;
    double residual = 0.0;  // ||A x - b|| / ||b||
    int bordered_groups = 0;
    std::vector<double> multipliers;  // rigid-mode reactions when bordered
};

struct PlateSolution {
    FieldGrid grid;
    PlateModel model = PlateModel::Full;
    KinematicFields fields;    // 9 components, uidx order (inactive = 0)
    StrainFields strains;      // 20 components, eidx order
    StressFields resultants;   // 20 components, sidx order
    LoadFields loads;          // (p, sigma_0, v, t) at the nodes
    SolverStats stats;
};

// Reduced models restrict the resultants to a stress pattern subspace P and
// condense the compliance onto it: S = P (P^T K P)^{-1} P^T (E - G l).
//  - Full: identity; needs an invertible K (mu_c > 0, epsilon > 0).
//  - DecoupledReissner: symmetric moments (M12 = M21), paired shear
//    (Q = Q*), S* = 0; couple-resultant block unchanged. Drops Om3.
//  - SymmetricM: symmetric moments and S* = 0, but the full four-way
//    (Q, Q*) coupling kept. Drops Om3.
struct ModelSubspace {
    Eigen::MatrixXd patterns;        // 20 x n_r
    std::vector<int> active_fields;  // uidx indices carried by the model
    Mat20 effective_stiffness;       // P (P^T K P)^{-1} P^T
    Mat20x4 effective_load;          // effective_stiffness * G
};
ModelSubspace model_subspace(const ComplianceMap& map, PlateModel model);

// Assemble and solve the plate equations on the problem's grid: interior
// rows are the formal adjoint of the strain tables composed with the
// constitutive map, boundary rows come from the edge conditions (corner
// nodes average the rows of their two edges). If every edge prescribes
// tractions for a field group, the system is bordered with that group's
// rigid motions. Sparse LU first, BiCGSTAB fallback.
PlateSolution solve(const PlateProblem& problem);
PlateSolution solve_reduced(const PlateProblem& problem, PlateModel model);

// The square system matrix exactly as the solve assembles it (interior
// balance rows, boundary rows from the edge conditions) but without the
// rigid-motion bordering, so pure-traction problems keep their kernel.
// Row/column layout: active field index fastest, node index outer.
Eigen::SparseMatrix<double> assembled_operator(const PlateProblem& problem, PlateModel model);

// Field-by-field equilibrium residuals of a computed solution, recomputed
// from the stored kinematics through the strain tables and constitutive
// map with fresh finite differences (no reuse of the assembled matrix).
// Entries are rms values of the balance equations in uidx row order;
// `interior` uses interior nodes only, `global` all nodes.
struct EquilibriumResidual {
    std::array<double, 9> interior{};
    std::array<double, 9> global{};
    double max_interior = 0.0;
    double max_global = 0.0;
};
EquilibriumResidual plate_residual(const PlateProblem& problem, const PlateSolution& sol);

// Lift a plate solution back to thickness profiles and measure the 3D
// balance and face-condition residuals on a sample of interior nodes and
// Gauss points through the thickness.
struct Reconstruction3D {
    SectionFields densities;  // sidx order, density scaling
    LoadFields loads;
    double max_force_residual = 0.0;
    double max_moment_residual = 0.0;
    double max_face_mismatch = 0.0;
};
Reconstruction3D reconstruct_3d(const PlateProblem& problem, const PlateSolution& sol);

}  // namespace cosserat
