#include "cosserat/cosserat3d.hpp"

namespace cosserat {

namespace {

// eps[i][j][k], fixed lookup table.
constexpr double kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

Tensor2 isotropic_map(double c_sym, double c_skw, double c_tr, const Tensor2& x) {
    return c_sym * x + c_skw * x.transpose() + c_tr * x.trace() * Tensor2::Identity();
}

}  // namespace

double levi_civita(int i, int j, int k) { return kEps[i][j][k]; }

StressPair hooke_forward(const CosseratModuli& m, const StrainPair& s) {
    StressPair out;
    out.sigma = isotropic_map(m.mu + m.mu_c, m.mu - m.mu_c, m.lambda, s.gamma);
    out.mu = isotropic_map(m.gamma + m.epsilon, m.gamma - m.epsilon, m.beta, s.chi);
    return out;
}

StrainPair hooke_inverse(const PrimedModuli& p, const StressPair& s) {
    StrainPair out;
    out.gamma = isotropic_map(p.mu_p + p.mu_c_p, p.mu_p - p.mu_c_p, p.lambda_p, s.sigma);
    out.chi = isotropic_map(p.gamma_p + p.epsilon_p, p.gamma_p - p.epsilon_p, p.beta_p, s.mu);
    return out;
}

StrainPair hooke_inverse(const CosseratModuli& m, const StressPair& s) {
    return hooke_inverse(primed_constants(m), s);
}

double energy_strain(const CosseratModuli& m, const StrainPair& s) {
    const StressPair c = hooke_forward(m, s);
    return 0.5 * (c.sigma.cwiseProduct(s.gamma).sum() + c.mu.cwiseProduct(s.chi).sum());
}

double energy_stress(const PrimedModuli& p, const StressPair& s) {
    const StrainPair g = hooke_inverse(p, s);
    return 0.5 * (s.sigma.cwiseProduct(g.gamma).sum() + s.mu.cwiseProduct(g.chi).sum());
}

double energy_stress(const CosseratModuli& m, const StressPair& s) {
    return energy_stress(primed_constants(m), s);
}

StrainPair kinematic_relations(const Tensor2& grad_u, const Vector3& phi,
                               const Tensor2& grad_phi) {
    StrainPair out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double e_phi = 0.0;
            for (int k = 0; k < 3; ++k) e_phi += kEps[i][j][k] * phi[k];
            out.gamma(i, j) = grad_u(j, i) - e_phi;
            out.chi(i, j) = grad_phi(j, i);
        }
    }
    return out;
}

BalanceResiduals balance_residuals(const Vector3& div_sigma, const Tensor2& sigma,
                                   const Vector3& div_mu) {
    BalanceResiduals r;
    r.force = div_sigma;
    for (int i = 0; i < 3; ++i) {
        double e_sig = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) e_sig += kEps[i][j][k] * sigma(j, k);
        r.moment[i] = e_sig + div_mu[i];
    }
    return r;
}

Vector3 traction(const Tensor2& stress, const Vector3& n) { return stress.transpose() * n; }

}  // namespace cosserat
