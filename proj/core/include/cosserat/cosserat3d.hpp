#pragma once

#include <Eigen/Dense>

#include "cosserat/material.hpp"

namespace cosserat {

using Vector3 = Eigen::Vector3d;
using Tensor2 = Eigen::Matrix3d;  // second-order tensor, generally asymmetric

// Fixed Levi-Civita lookup; i, j, k in {0,1,2}.
double levi_civita(int i, int j, int k);

struct StrainPair {
    Tensor2 gamma = Tensor2::Zero();  // stretch tensor
    Tensor2 chi = Tensor2::Zero();    // torsion (wryness) tensor
};

struct StressPair {
    Tensor2 sigma = Tensor2::Zero();  // force stress
    Tensor2 mu = Tensor2::Zero();     // couple stress
};

// sigma = (mu + mu_c) gamma + (mu - mu_c) gamma^T + lambda tr(gamma) I
// mu    = (gamma + eps) chi  + (gamma - eps) chi^T + beta tr(chi) I
StressPair hooke_forward(const CosseratModuli& m, const StrainPair& s);

// Inverse law built from the primed constants; exact inverse of hooke_forward.
StrainPair hooke_inverse(const PrimedModuli& p, const StressPair& s);
StrainPair hooke_inverse(const CosseratModuli& m, const StressPair& s);

// Strain energy density W(gamma, chi) = 1/2 (sigma . gamma + mu . chi).
double energy_strain(const CosseratModuli& m, const StrainPair& s);

// Stress energy density Phi(sigma, mu); conjugate to energy_strain:
// Phi(hooke_forward(x)) == energy_strain(x).
double energy_stress(const PrimedModuli& p, const StressPair& s);
double energy_stress(const CosseratModuli& m, const StressPair& s);

// Kinematic relations. grad_u and grad_phi are Jacobians with
// grad_u(i,j) = d u_i / d x_j. Returns
//   gamma_ij = u_{j,i} - eps_{ijk} phi_k,   chi_ij = phi_{j,i},
// which annihilates rigid fields u = c + w x x, phi = w.
StrainPair kinematic_relations(const Tensor2& grad_u, const Vector3& phi, const Tensor2& grad_phi);

struct BalanceResiduals {
    Vector3 force = Vector3::Zero();   // sigma_{ji,j}
    Vector3 moment = Vector3::Zero();  // eps_{ijk} sigma_{jk} + mu_{ji,j}
};

// Pointwise balance of linear and angular momentum. The divergences are
// taken on the first index, (div sigma)_i = sigma_{ji,j}, and are supplied
// by the caller so this stays grid-free.
BalanceResiduals balance_residuals(const Vector3& div_sigma, const Tensor2& sigma,
                                   const Vector3& div_mu);

// Traction of a (force or couple) stress tensor on a plane with unit
// normal n: t_i = T_{ji} n_j.
Vector3 traction(const Tensor2& stress, const Vector3& n);

}  // namespace cosserat
