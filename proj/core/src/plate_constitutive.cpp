#include "cosserat/plate_constitutive.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cosserat {

namespace {

// Small exact rational type for the zeta-moment integrals; numerators and
// denominators stay tiny (worst case ~ products of single digits and 280).
struct Rat {
    long long n = 0;
    long long d = 1;
    Rat() = default;
    Rat(long long num) : n(num) {}
    Rat(long long num, long long den) : n(num), d(den) { norm(); }
    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
    }
};
Rat operator+(const Rat& a, const Rat& b) { return Rat(a.n * b.d + b.n * a.d, a.d * b.d); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.n * b.n, a.d * b.d); }
double to_double(const Rat& a) { return static_cast<double>(a.n) / static_cast<double>(a.d); }

// int_{-1}^{1} zeta^k dzeta
Rat zeta_moment(int k) { return (k % 2 == 1) ? Rat(0) : Rat(2, k + 1); }

// One nonzero tensor entry per slot: component (i,j) of sigma (tensor 0) or
// mu (tensor 1), with profile  s * h^hpow * (poly in zeta).
struct ProfileEntry {
    int tensor = 0;
    int i = 0, j = 0;
    Rat s = Rat(0);
    int hpow = 0;
    std::array<Rat, 4> poly{Rat(0), Rat(0), Rat(0), Rat(0)};
};

// Slots 0..19: stress set (sidx order); 20..23: loads (lidx order).
std::array<ProfileEntry, 24> profile_table() {
    std::array<ProfileEntry, 24> t{};
    const std::array<Rat, 4> one{Rat(1), Rat(0), Rat(0), Rat(0)};
    const std::array<Rat, 4> lin{Rat(0), Rat(1), Rat(0), Rat(0)};
    const std::array<Rat, 4> bubble{Rat(1), Rat(0), Rat(-1), Rat(0)};
    auto set = [&t](int slot, int tensor, int i, int j, Rat s, int hpow,
                    const std::array<Rat, 4>& poly) {
        t[static_cast<std::size_t>(slot)] = ProfileEntry{tensor, i, j, s, hpow, poly};
    };
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            set(sidx::M(a, b), 0, a, b, Rat(6), -2, lin);      // sigma_ab += (6/h^2) zeta M
            set(sidx::N(a, b), 0, a, b, Rat(1), -1, one);      // sigma_ab += (1/h) N
            set(sidx::R(a, b), 1, a, b, Rat(3, 2), -1, bubble);  // mu_ab += 3/(2h) (1-z^2) R
        }
        set(sidx::Q(a), 0, 2, a, Rat(3, 2), -1, bubble);
        set(sidx::Qs(a), 0, a, 2, Rat(3, 2), -1, bubble);
        set(sidx::Ss(a), 1, a, 2, Rat(6), -2, lin);
        set(sidx::Ms(a), 1, a, 2, Rat(1), -1, one);
    }
    set(20 + lidx::p, 0, 2, 2, Rat(1), 0, {Rat(0), Rat(3, 4), Rat(0), Rat(-1, 4)});
    set(20 + lidx::sigma0, 0, 2, 2, Rat(1), 0, one);
    set(20 + lidx::v, 1, 2, 2, Rat(1), 0, lin);
    set(20 + lidx::t, 1, 2, 2, Rat(1), 0, one);
    return t;
}

// Q_ab = (h/2) int b(profile_a, profile_b) dzeta where b is the symmetric
// bilinear form of the 3D stress energy (Phi = b(x,x)/2).
double pair_value(const ProfileEntry& A, const ProfileEntry& B, const PrimedModuli& p, double h) {
    if (A.tensor != B.tensor) return 0.0;
    const double c_same = A.tensor == 0 ? p.mu_p + p.mu_c_p : p.gamma_p + p.epsilon_p;
    const double c_swap = A.tensor == 0 ? p.mu_p - p.mu_c_p : p.gamma_p - p.epsilon_p;
    const double c_tr = A.tensor == 0 ? p.lambda_p : p.beta_p;
    double modc = 0.0;
    if (A.i == B.i && A.j == B.j) modc += c_same;
    if (A.i == B.j && A.j == B.i) modc += c_swap;
    if (A.i == A.j && B.i == B.j) modc += c_tr;
    if (modc == 0.0) return 0.0;
    Rat integral(0);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) integral = integral + A.poly[k] * B.poly[l] * zeta_moment(k + l);
    const Rat exact = A.s * B.s * integral * Rat(1, 2);
    return modc * to_double(exact) * std::pow(h, A.hpow + B.hpow + 1);
}

}  // namespace

ComplianceMap::ComplianceMap(const CosseratModuli& m, double h) : moduli_(m), h_(h) {
    if (!(h > 0.0)) throw std::domain_error("ComplianceMap: thickness h must be positive");
    const PrimedModuli p = primed_constants(m);
    const auto table = profile_table();

    Eigen::Matrix<double, 24, 24> Q = Eigen::Matrix<double, 24, 24>::Zero();
    for (int a = 0; a < 24; ++a) {
        for (int b = a; b < 24; ++b) {
            const double v = pair_value(table[a], table[b], p, h);
            Q(a, b) = v;
            Q(b, a) = v;
        }
    }
    K_ = Q.topLeftCorner<20, 20>();
    G_ = Q.topRightCorner<20, 4>();
    J_ = Q.bottomRightCorner<4, 4>();

    invertible_ = classify_material(m).cls == AdmissibilityClass::PositiveDefinite;
    if (invertible_) {
        Eigen::LDLT<Mat20> ldlt(K_);
        Kinv_ = ldlt.solve(Mat20::Identity());
    }
}

ComplianceMap build_compliance(const CosseratModuli& m, double h) { return ComplianceMap(m, h); }

Eigen::Vector4d ComplianceMap::load_vector(const PlateLoads& loads) {
    Eigen::Vector4d l;
    l[lidx::p] = loads.p();
    l[lidx::sigma0] = loads.sigma_0();
    l[lidx::v] = loads.v();
    l[lidx::t] = loads.t();
    return l;
}

StrainSet ComplianceMap::apply(const StressSet& S, const PlateLoads& loads) const {
    StrainSet E;
    E.v = K_ * S.v + G_ * load_vector(loads);
    return E;
}

const Mat20& ComplianceMap::stiffness_matrix() const {
    if (!invertible_)
        throw std::domain_error(
            "ComplianceMap: map is not invertible (needs a positive definite material with "
            "mu_c > 0 and epsilon > 0); use the solver's reduced models instead");
    return Kinv_;
}

Vec20 ComplianceMap::stiffness_load_offset(const PlateLoads& loads) const {
    return -(stiffness_matrix() * (G_ * load_vector(loads)));
}

StressSet ComplianceMap::stiffness(const StrainSet& E, const PlateLoads& loads) const {
    StressSet S;
    S.v = stiffness_matrix() * (E.v - G_ * load_vector(loads));
    return S;
}

PlateEnergyDensity energy_density(const ComplianceMap& map, const StressSet& S,
                                  const PlateLoads& loads) {
    const Eigen::Vector4d l = ComplianceMap::load_vector(loads);
    PlateEnergyDensity e;
    e.quadratic = 0.5 * S.v.dot(map.K() * S.v);
    e.load_coupling = S.v.dot(map.G() * l);
    e.pure_load = 0.5 * l.dot(map.J() * l);
    e.value = e.quadratic + e.load_coupling + e.pure_load;
    return e;
}

double energy_density_quadrature(const CosseratModuli& m, double h, const StressSet& S,
                                 const PlateLoads& loads) {
    const PrimedModuli p = primed_constants(m);
    const SectionDensities d = densities_from_resultants(S, h);
    const auto& q5 = gauss5();
    double acc = 0.0;
    for (int g = 0; g < 5; ++g) {
        StressPair sp;
        sp.sigma = stress_at(d, loads, h, ThicknessCoordinate(q5.x[g]));
        sp.mu = couple_stress_at(d, loads, h, ThicknessCoordinate(q5.x[g]));
        acc += q5.w[g] * energy_stress(p, sp);
    }
    return 0.5 * h * acc;
}

namespace {

struct TabulatedCoefs {
    double A1, A2, A3, A4, A5;  // lambda/mu family
    double B1, B2;              // R family
    double C1, C2, C3;          // p/sigma0 family
    double D;                   // (gamma+eps)/(h gamma eps)
    double E1, E2, E3;          // t/v family
    double h;
};

TabulatedCoefs tabulated_coefs(const CosseratModuli& m, double h) {
    TabulatedCoefs c{};
    c.h = h;
    const double lam = m.lambda, mu = m.mu, muc = m.mu_c;
    const double bet = m.beta, gam = m.gamma, eps = m.epsilon;
    c.A1 = (lam + mu) / (2.0 * h * mu * (3.0 * lam + 2.0 * mu));
    c.A2 = lam / (2.0 * h * mu * (3.0 * lam + 2.0 * mu));
    c.A3 = (muc + mu) / (8.0 * h * muc * mu);
    c.A4 = 3.0 * (muc - mu) / (10.0 * h * muc * mu);
    c.A5 = 3.0 * lam / (5.0 * h * mu * (3.0 * lam + 2.0 * mu));
    c.B1 = 3.0 / (5.0 * h * gam * (3.0 * bet + 2.0 * gam));
    c.B2 = (3.0 / (10.0 * h)) * (1.0 / gam - 1.0 / eps);
    c.C1 = 17.0 * h * (lam + mu) / (280.0 * mu * (3.0 * lam + 2.0 * mu));
    c.C2 = lam / (2.0 * mu * (3.0 * lam + 2.0 * mu));
    c.C3 = h * (lam + mu) / (2.0 * mu * (3.0 * lam + 2.0 * mu));
    c.D = (gam + eps) / (h * gam * eps);
    c.E1 = bet / (2.0 * gam * (3.0 * bet + 2.0 * gam));
    c.E2 = h * (bet + gam) / (2.0 * gam * (3.0 * bet + 2.0 * gam));
    c.E3 = h * (bet + gam) / (6.0 * gam * (3.0 * bet + 2.0 * gam));
    return c;
}

}  // namespace

double energy_density_tabulated(const CosseratModuli& m, double h, const StressSet& S,
                                const PlateLoads& loads) {
    const TabulatedCoefs c = tabulated_coefs(m, h);
    const double h2 = h * h;
    const double p = loads.p(), s0 = loads.sigma_0(), v = loads.v(), t = loads.t();
    auto sq = [](double x) { return x * x; };
    const double M11 = S[sidx::M11], M12 = S[sidx::M12], M21 = S[sidx::M21], M22 = S[sidx::M22];
    const double N11 = S[sidx::N11], N12 = S[sidx::N12], N21 = S[sidx::N21], N22 = S[sidx::N22];
    const double R11 = S[sidx::R11], R12 = S[sidx::R12], R21 = S[sidx::R21], R22 = S[sidx::R22];

    double phi = 0.0;
    phi += c.A1 * (sq(N11) + sq(N22) + 12.0 / h2 * (sq(M11) + sq(M22)));
    phi -= c.A2 * (N11 * N22 + 12.0 / h2 * M11 * M22);
    phi += c.A3 * ((sq(N12) + sq(N21)) + 12.0 / h2 * (sq(M12) + sq(M21)) +
                   1.2 * (sq(S[sidx::Q1]) + sq(S[sidx::Q2]) + sq(S[sidx::Qs1]) + sq(S[sidx::Qs2])));
    phi += c.A4 * (S[sidx::Q1] * S[sidx::Qs1] + S[sidx::Q2] * S[sidx::Qs2] +
                   (5.0 / 6.0) * N12 * N21 + 10.0 / h2 * M12 * M21);
    phi -= c.A5 * p * (M11 + M22);
    phi += c.B1 * ((m.beta + m.gamma) * (sq(R11) + sq(R22)) - m.beta * R11 * R22);
    phi += c.B2 * R12 * R21;
    phi += c.C1 * p * p;
    phi -= c.C2 * (N11 + N22) * s0;
    phi += c.C3 * s0 * s0;
    phi -= c.D * ((sq(S[sidx::Ms1]) + sq(S[sidx::Ms2])) / 8.0 +
                  1.5 / h2 * (sq(S[sidx::Ss1]) + sq(S[sidx::Ss2])) + 0.15 * (sq(R12) + sq(R21)));
    phi -= c.E1 * (R11 + R22) * t;
    phi += c.E2 * t * t;
    phi += c.E3 * v * v;
    return phi;
}

std::vector<CoefficientCheck> energy_coefficient_check(const CosseratModuli& m, double h) {
    const ComplianceMap map(m, h);
    const TabulatedCoefs c = tabulated_coefs(m, h);
    const Mat20& K = map.K();
    const Mat20x4& G = map.G();
    const Mat4& J = map.J();
    const double h2 = h * h;

    std::vector<CoefficientCheck> out;
    auto push = [&out](const std::string& term, double derived, double tabulated) {
        const double tol = 1e-10 * std::max({1.0, std::abs(derived), std::abs(tabulated)});
        out.push_back({term, derived, tabulated, std::abs(derived - tabulated) <= tol});
    };
    push("N11^2", 0.5 * K(sidx::N11, sidx::N11), c.A1);
    push("M11^2", 0.5 * K(sidx::M11, sidx::M11), c.A1 * 12.0 / h2);
    push("N11*N22", K(sidx::N11, sidx::N22), -c.A2);
    push("M11*M22", K(sidx::M11, sidx::M22), -c.A2 * 12.0 / h2);
    push("N12^2", 0.5 * K(sidx::N12, sidx::N12), c.A3);
    push("M12^2", 0.5 * K(sidx::M12, sidx::M12), c.A3 * 12.0 / h2);
    push("Q1^2", 0.5 * K(sidx::Q1, sidx::Q1), c.A3 * 1.2);
    push("Qstar1^2", 0.5 * K(sidx::Qs1, sidx::Qs1), c.A3 * 1.2);
    push("Q1*Qstar1", K(sidx::Q1, sidx::Qs1), c.A4);
    push("N12*N21", K(sidx::N12, sidx::N21), c.A4 * 5.0 / 6.0);
    push("M12*M21", K(sidx::M12, sidx::M21), c.A4 * 10.0 / h2);
    push("p*M11", G(sidx::M11, lidx::p), -c.A5);
    push("R11^2", 0.5 * K(sidx::R11, sidx::R11), c.B1 * (m.beta + m.gamma));
    push("R11*R22", K(sidx::R11, sidx::R22), -c.B1 * m.beta);
    push("R12*R21", K(sidx::R12, sidx::R21), c.B2);
    push("p^2", 0.5 * J(lidx::p, lidx::p), c.C1);
    push("sigma0*N11", G(sidx::N11, lidx::sigma0), -c.C2);
    push("sigma0^2", 0.5 * J(lidx::sigma0, lidx::sigma0), c.C3);
    push("Mstar1^2", 0.5 * K(sidx::Ms1, sidx::Ms1), -c.D / 8.0);
    push("Sstar1^2", 0.5 * K(sidx::Ss1, sidx::Ss1), -c.D * 1.5 / h2);
    push("R12^2", 0.5 * K(sidx::R12, sidx::R12), -c.D * 0.15);
    push("t*R11", G(sidx::R11, lidx::t), -c.E1);
    push("t^2", 0.5 * J(lidx::t, lidx::t), c.E2);
    push("v^2", 0.5 * J(lidx::v, lidx::v), c.E3);
    return out;
}

double gradient_check(const ComplianceMap& map, const StressSet& S0, const PlateLoads& loads,
                      double step_scale) {
    const Vec20 grad = map.K() * S0.v + map.G() * ComplianceMap::load_vector(loads);
    const double scale = std::max(grad.lpNorm<Eigen::Infinity>(), 1e-300);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double step = step_scale * (1.0 + std::abs(S0.v[k]));
        StressSet plus = S0, minus = S0;
        plus.v[k] += step;
        minus.v[k] -= step;
        const double fd =
            (energy_density(map, plus, loads).value - energy_density(map, minus, loads).value) /
            (2.0 * step);
        worst = std::max(worst, std::abs(fd - grad[k]) / scale);
    }
    return worst;
}

}  // namespace cosserat
