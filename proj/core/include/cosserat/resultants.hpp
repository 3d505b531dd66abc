#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "cosserat/cosserat3d.hpp"

namespace cosserat {

// Canonical component orderings. The stress and strain sets are ordered so
// that equal indices are work conjugate: S[k]*E[k] sums to the plate work
// density. Kinematic fields: bending group first (Psi1, Psi2, W, Om01,
// Om02, Om3), then the twisting group (U1, U2, Om03).
namespace sidx {
enum : int {
    M11 = 0, M12, M21, M22,   // bending moments
    Q1, Q2,                   // shear force resultants (sigma_3a weight)
    Qs1, Qs2,                 // transverse shear resultants (sigma_a3 weight)
    R11, R12, R21, R22,       // couple-stress resultants
    Ss1, Ss2,                 // second-moment couple resultants
    N11, N12, N21, N22,       // membrane/twisting forces
    Ms1, Ms2,                 // mean couple resultants
    count
};
inline constexpr int M(int a, int b) { return M11 + 2 * a + b; }
inline constexpr int Q(int a) { return Q1 + a; }
inline constexpr int Qs(int a) { return Qs1 + a; }
inline constexpr int R(int a, int b) { return R11 + 2 * a + b; }
inline constexpr int Ss(int a) { return Ss1 + a; }
inline constexpr int N(int a, int b) { return N11 + 2 * a + b; }
inline constexpr int Ms(int a) { return Ms1 + a; }
}  // namespace sidx

namespace eidx {
enum : int {
    e11 = 0, e12, e21, e22,       // conj. M
    om1, om2,                     // conj. Q
    oms1, oms2,                   // conj. Q*
    t011, t012, t021, t022,       // conj. R
    t31, t32,                     // conj. S*
    up11, up12, up21, up22,       // conj. N
    t031, t032,                   // conj. M*
    count
};
inline constexpr int e(int a, int b) { return e11 + 2 * a + b; }
inline constexpr int om(int a) { return om1 + a; }
inline constexpr int oms(int a) { return oms1 + a; }
inline constexpr int t0(int a, int b) { return t011 + 2 * a + b; }
inline constexpr int t3(int a) { return t31 + a; }
inline constexpr int up(int a, int b) { return up11 + 2 * a + b; }
inline constexpr int t03(int a) { return t031 + a; }
}  // namespace eidx

namespace uidx {
enum : int { Psi1 = 0, Psi2, W, Om01, Om02, Om3, U1, U2, Om03, count };
}  // namespace uidx

using Vec20 = Eigen::Matrix<double, 20, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;

struct StressSet {
    Vec20 v = Vec20::Zero();
    double& operator[](int k) { return v[k]; }
    double operator[](int k) const { return v[k]; }
};

struct StrainSet {
    Vec20 v = Vec20::Zero();
    double& operator[](int k) { return v[k]; }
    double operator[](int k) const { return v[k]; }
};

struct KinematicSet {
    Vec9 v = Vec9::Zero();
    double& operator[](int k) { return v[k]; }
    double operator[](int k) const { return v[k]; }
};

// Per-thickness polynomial coefficient functions of the stress ansatz.
struct SectionDensities {
    Eigen::Matrix2d n = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    Eigen::Vector2d q = Eigen::Vector2d::Zero();
    Eigen::Vector2d q_star = Eigen::Vector2d::Zero();
    Eigen::Matrix2d r = Eigen::Matrix2d::Zero();
    Eigen::Vector2d s_star = Eigen::Vector2d::Zero();
    Eigen::Vector2d m_star = Eigen::Vector2d::Zero();
};

// Exact scalings: N = h n, M = h^3/12 m, Q = 2h/3 q, Q* = 2h/3 q*,
// R = 2h/3 r, S* = h^2/6 s*, M* = h m*.
StressSet resultants_from_densities(const SectionDensities& d, double h);
SectionDensities densities_from_resultants(const StressSet& S, double h);

// Five-point Gauss-Legendre rule on [-1,1]; exact through degree 9.
struct QuadRule5 {
    std::array<double, 5> x;
    std::array<double, 5> w;
};
const QuadRule5& gauss5();

// Weighted through-thickness integrals over zeta in [-1,1]; h > 0.
// Samplers return pointwise 3D tensors/vectors at a given zeta.
using StressSampler = std::function<StressPair(double zeta)>;
using StrainSampler = std::function<StrainPair(double zeta)>;
// displacement u and microrotation phi at zeta
using MotionSampler = std::function<std::pair<Vector3, Vector3>(double zeta)>;

StressSet integrate_stress_set(const StressSampler& at, double h);
StrainSet integrate_strain_set(const StrainSampler& at, double h);
KinematicSet integrate_kinematic_set(const MotionSampler& at, double h);

// Plate internal work density: the 20-term contraction S.E.
double work_density(const StressSet& S, const StrainSet& E);

// Edge flux conjugate to the kinematic set, contracted on the derivative
// index: [M_{a b} n_a]_b, Q*_a n_a, [R_{a b} n_a]_b, S*_a n_a,
// [N_{a b} n_a]_b, M*_a n_a — ordered like uidx.
Vec9 edge_flux(const StressSet& S, const Eigen::Vector2d& n);

struct BoundaryWork {
    double w1 = 0.0;          // S_n . U (computed flux against kinematics)
    double w2 = 0.0;          // prescribed edge data . U
    double top_bottom = 0.0;  // p W + v Om03 (face work density)
};
// `prescribed` uses the same 9-slot layout as edge_flux; the S*-flux slot
// doubles for both names this datum goes by.
BoundaryWork boundary_work_terms(const StressSet& S, const KinematicSet& U,
                                 const Eigen::Vector2d& n, const Vec9& prescribed, double p,
                                 double v);

}  // namespace cosserat
