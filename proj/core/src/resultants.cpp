#include "cosserat/resultants.hpp"

#include <stdexcept>

namespace cosserat {

namespace {

void require_thickness(double h) {
    if (!(h > 0.0)) throw std::domain_error("thickness h must be positive");
}

}  // namespace

StressSet resultants_from_densities(const SectionDensities& d, double h) {
    require_thickness(h);
    StressSet S;
    const double c_m = h * h * h / 12.0;
    const double c_q = 2.0 * h / 3.0;
    const double c_s = h * h / 6.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            S[sidx::M(a, b)] = c_m * d.m(a, b);
            S[sidx::R(a, b)] = c_q * d.r(a, b);
            S[sidx::N(a, b)] = h * d.n(a, b);
        }
        S[sidx::Q(a)] = c_q * d.q[a];
        S[sidx::Qs(a)] = c_q * d.q_star[a];
        S[sidx::Ss(a)] = c_s * d.s_star[a];
        S[sidx::Ms(a)] = h * d.m_star[a];
    }
    return S;
}

SectionDensities densities_from_resultants(const StressSet& S, double h) {
    require_thickness(h);
    SectionDensities d;
    const double c_m = 12.0 / (h * h * h);
    const double c_q = 3.0 / (2.0 * h);
    const double c_s = 6.0 / (h * h);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            d.m(a, b) = c_m * S[sidx::M(a, b)];
            d.r(a, b) = c_q * S[sidx::R(a, b)];
            d.n(a, b) = S[sidx::N(a, b)] / h;
        }
        d.q[a] = c_q * S[sidx::Q(a)];
        d.q_star[a] = c_q * S[sidx::Qs(a)];
        d.s_star[a] = c_s * S[sidx::Ss(a)];
        d.m_star[a] = S[sidx::Ms(a)] / h;
    }
    return d;
}

const QuadRule5& gauss5() {
    static const QuadRule5 rule = {
        {-0.9061798459386639928, -0.5384693101056830910, 0.0, 0.5384693101056830910,
         0.9061798459386639928},
        {0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
         0.4786286704993664680, 0.2369268850561890875}};
    return rule;
}

StressSet integrate_stress_set(const StressSampler& at, double h) {
    require_thickness(h);
    const auto& q5 = gauss5();
    StressSet S;
    for (int g = 0; g < 5; ++g) {
        const double z = q5.x[g];
        const double w = q5.w[g];
        const StressPair sp = at(z);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                // M_ab = (h/2)^2 int zeta sigma_ab; N_ab = (h/2) int sigma_ab
                S[sidx::M(a, b)] += w * (h / 2.0) * (h / 2.0) * z * sp.sigma(a, b);
                S[sidx::N(a, b)] += w * (h / 2.0) * sp.sigma(a, b);
                S[sidx::R(a, b)] += w * (h / 2.0) * sp.mu(a, b);
            }
            S[sidx::Q(a)] += w * (h / 2.0) * sp.sigma(2, a);
            S[sidx::Qs(a)] += w * (h / 2.0) * sp.sigma(a, 2);
            S[sidx::Ss(a)] += w * (h / 2.0) * (h / 2.0) * z * sp.mu(a, 2);
            S[sidx::Ms(a)] += w * (h / 2.0) * sp.mu(a, 2);
        }
    }
    return S;
}

StrainSet integrate_strain_set(const StrainSampler& at, double h) {
    require_thickness(h);
    const auto& q5 = gauss5();
    StrainSet E;
    for (int g = 0; g < 5; ++g) {
        const double z = q5.x[g];
        const double w = q5.w[g];
        const StrainPair sp = at(z);
        const double bub = 1.0 - z * z;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                E[eidx::e(a, b)] += w * (3.0 / h) * z * sp.gamma(a, b);
                E[eidx::up(a, b)] += w * 0.5 * sp.gamma(a, b);
                E[eidx::t0(a, b)] += w * 0.75 * bub * sp.chi(a, b);
            }
            E[eidx::om(a)] += w * 0.75 * bub * sp.gamma(2, a);
            E[eidx::oms(a)] += w * 0.75 * bub * sp.gamma(a, 2);
            E[eidx::t3(a)] += w * (3.0 / h) * z * sp.chi(a, 2);
            E[eidx::t03(a)] += w * 0.5 * sp.chi(a, 2);
        }
    }
    return E;
}

KinematicSet integrate_kinematic_set(const MotionSampler& at, double h) {
    require_thickness(h);
    const auto& q5 = gauss5();
    KinematicSet U;
    for (int g = 0; g < 5; ++g) {
        const double z = q5.x[g];
        const double w = q5.w[g];
        const auto [u, phi] = at(z);
        const double bub = 1.0 - z * z;
        for (int a = 0; a < 2; ++a) {
            U[uidx::Psi1 + a] += w * (3.0 / h) * z * u[a];
            U[uidx::Om01 + a] += w * 0.75 * bub * phi[a];
            U[uidx::U1 + a] += w * 0.5 * u[a];
        }
        U[uidx::W] += w * 0.5 * u[2];
        U[uidx::Om3] += w * (3.0 / h) * z * phi[2];
        U[uidx::Om03] += w * 0.5 * phi[2];
    }
    return U;
}

double work_density(const StressSet& S, const StrainSet& E) { return S.v.dot(E.v); }

Vec9 edge_flux(const StressSet& S, const Eigen::Vector2d& n) {
    Vec9 f = Vec9::Zero();
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
            f[uidx::Psi1 + b] += S[sidx::M(a, b)] * n[a];
            f[uidx::Om01 + b] += S[sidx::R(a, b)] * n[a];
            f[uidx::U1 + b] += S[sidx::N(a, b)] * n[a];
        }
    }
    for (int a = 0; a < 2; ++a) {
        f[uidx::W] += S[sidx::Qs(a)] * n[a];
        f[uidx::Om3] += S[sidx::Ss(a)] * n[a];
        f[uidx::Om03] += S[sidx::Ms(a)] * n[a];
    }
    return f;
}

BoundaryWork boundary_work_terms(const StressSet& S, const KinematicSet& U,
                                 const Eigen::Vector2d& n, const Vec9& prescribed, double p,
                                 double v) {
    BoundaryWork bw;
    bw.w1 = edge_flux(S, n).dot(U.v);
    bw.w2 = prescribed.dot(U.v);
    bw.top_bottom = p * U[uidx::W] + v * U[uidx::Om03];
    return bw;
}

}  // namespace cosserat
