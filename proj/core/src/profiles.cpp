#include "cosserat/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

ThicknessCoordinate::ThicknessCoordinate(double z) : zeta(z) {
    if (!(std::abs(z) <= 1.0))
        throw std::domain_error("ThicknessCoordinate: zeta must lie in [-1, 1]");
}

namespace {

void require_thickness(double h) {
    if (!(h > 0.0)) throw std::domain_error("thickness h must be positive");
}

double sigma33_profile(double zeta, double p, double sigma0) {
    return 0.75 * (zeta - zeta * zeta * zeta / 3.0) * p + sigma0;
}

}  // namespace

Tensor2 stress_at(const SectionDensities& d, const PlateLoads& loads, double h,
                  ThicknessCoordinate zc) {
    require_thickness(h);
    const double z = zc.zeta;
    const double bub = 1.0 - z * z;
    Tensor2 s = Tensor2::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) s(a, b) = d.n(a, b) + 0.5 * h * z * d.m(a, b);
        s(2, a) = d.q[a] * bub;
        s(a, 2) = d.q_star[a] * bub;
    }
    s(2, 2) = sigma33_profile(z, loads.p(), loads.sigma_0());
    return s;
}

Tensor2 couple_stress_at(const SectionDensities& d, const PlateLoads& loads, double h,
                         ThicknessCoordinate zc) {
    require_thickness(h);
    const double z = zc.zeta;
    const double bub = 1.0 - z * z;
    Tensor2 m = Tensor2::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) m(a, b) = bub * d.r(a, b);
        m(a, 2) = z * d.s_star[a] + d.m_star[a];
        m(2, a) = 0.0;
    }
    m(2, 2) = z * loads.v() + loads.t();
    return m;
}

Vector3 displacement_at(const KinematicSet& U, double h, ThicknessCoordinate zc) {
    require_thickness(h);
    const double z = zc.zeta;
    Vector3 u;
    u[0] = U[uidx::U1] + 0.5 * h * z * U[uidx::Psi1];
    u[1] = U[uidx::U2] + 0.5 * h * z * U[uidx::Psi2];
    u[2] = U[uidx::W];
    return u;
}

Vector3 microrotation_at(const KinematicSet& U, double h, ThicknessCoordinate zc) {
    require_thickness(h);
    const double z = zc.zeta;
    const double bub = 1.0 - z * z;
    Vector3 phi;
    phi[0] = 1.25 * U[uidx::Om01] * bub;
    phi[1] = 1.25 * U[uidx::Om02] * bub;
    phi[2] = U[uidx::Om03] + z * (1.0 - z * z / 3.0) * (5.0 * h / 8.0) * U[uidx::Om3];
    return phi;
}

double FaceResiduals::max_abs() const {
    double m = std::abs(sigma33_top);
    m = std::max(m, std::abs(sigma33_bottom));
    m = std::max(m, std::abs(sigma_shear));
    m = std::max(m, std::abs(mu33_top));
    m = std::max(m, std::abs(mu33_bottom));
    m = std::max(m, std::abs(mu_shear));
    return m;
}

FaceResiduals face_bc_residuals(const SectionDensities& d, const PlateLoads& loads, double h) {
    return face_bc_residuals(d, loads, h, loads);
}

FaceResiduals face_bc_residuals(const SectionDensities& d, const PlateLoads& loads, double h,
                                const PlateLoads& face_targets) {
    require_thickness(h);
    const Tensor2 s_top = stress_at(d, loads, h, ThicknessCoordinate(1.0));
    const Tensor2 s_bot = stress_at(d, loads, h, ThicknessCoordinate(-1.0));
    const Tensor2 m_top = couple_stress_at(d, loads, h, ThicknessCoordinate(1.0));
    const Tensor2 m_bot = couple_stress_at(d, loads, h, ThicknessCoordinate(-1.0));

    FaceResiduals r;
    r.sigma33_top = s_top(2, 2) - face_targets.sigma_t;
    r.sigma33_bottom = s_bot(2, 2) - face_targets.sigma_b;
    r.mu33_top = m_top(2, 2) - face_targets.mu_t;
    r.mu33_bottom = m_bot(2, 2) - face_targets.mu_b;
    for (int a = 0; a < 2; ++a) {
        r.sigma_shear = std::max(r.sigma_shear,
                                 std::max(std::abs(s_top(2, a)), std::abs(s_bot(2, a))));
        r.mu_shear = std::max(r.mu_shear, std::max(std::abs(m_top(2, a)), std::abs(m_bot(2, a))));
    }
    return r;
}

BalanceResiduals thickness_equilibrium_residual(const SectionFields& d, const LoadFields& loads,
                                                double h, ThicknessCoordinate zc, double x,
                                                double y) {
    require_thickness(h);
    if (!d.grid.same_layout(loads.grid))
        throw std::invalid_argument(
            "thickness_equilibrium_residual: density and load grids differ");

    const double z = zc.zeta;
    const double bub = 1.0 - z * z;

    auto at = [&](const Field& f) { return interp_derivs(d.grid, f, x, y); };

    // In-plane divergences of the density fields (contracted on the first,
    // i.e. derivative, index).
    double div_n[2], div_m[2], div_r[2];
    for (int b = 0; b < 2; ++b) {
        div_n[b] = at(d.comp[sidx::N(0, b)]).dx + at(d.comp[sidx::N(1, b)]).dy;
        div_m[b] = at(d.comp[sidx::M(0, b)]).dx + at(d.comp[sidx::M(1, b)]).dy;
        div_r[b] = at(d.comp[sidx::R(0, b)]).dx + at(d.comp[sidx::R(1, b)]).dy;
    }
    const double div_qs = at(d.comp[sidx::Qs1]).dx + at(d.comp[sidx::Qs2]).dy;
    const double div_ss = at(d.comp[sidx::Ss1]).dx + at(d.comp[sidx::Ss2]).dy;
    const double div_ms = at(d.comp[sidx::Ms1]).dx + at(d.comp[sidx::Ms2]).dy;

    const double q1 = at(d.comp[sidx::Q1]).value;
    const double q2 = at(d.comp[sidx::Q2]).value;
    const double qs1 = at(d.comp[sidx::Qs1]).value;
    const double qs2 = at(d.comp[sidx::Qs2]).value;
    const double n12 = at(d.comp[sidx::N12]).value;
    const double n21 = at(d.comp[sidx::N21]).value;
    const double m12 = at(d.comp[sidx::M12]).value;
    const double m21 = at(d.comp[sidx::M21]).value;

    const double p = interp_derivs(loads.grid, loads.comp[lidx::p], x, y).value;
    const double v = interp_derivs(loads.grid, loads.comp[lidx::v], x, y).value;

    BalanceResiduals res;
    const double qv[2] = {q1, q2};
    for (int b = 0; b < 2; ++b)
        res.force[b] = div_n[b] + z * (0.5 * h * div_m[b] - (4.0 / h) * qv[b]);
    res.force[2] = bub * (div_qs + 1.5 * p / h);

    res.moment[0] = bub * (div_r[0] + (qs2 - q2));
    res.moment[1] = bub * (div_r[1] - (qs1 - q1));
    res.moment[2] = (n12 - n21) + z * (0.5 * h * (m12 - m21) + div_ss) + div_ms + 2.0 * v / h;
    return res;
}

}  // namespace cosserat
