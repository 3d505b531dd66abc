#include "cosserat/hpr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cosserat {

namespace {

double trapezoid_w(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

bool pins(int edge, int f) {
    const bool x_edge = (edge == 0 || edge == 1);
    if (x_edge) return f == uidx::Psi2 || f == uidx::W || f == uidx::Om01 || f == uidx::U2;
    return f == uidx::Psi1 || f == uidx::W || f == uidx::Om02 || f == uidx::U1;
}

struct EdgeNode {
    int i, j;
    double ds;  // trapezoid arc weight
};

std::vector<EdgeNode> edge_nodes(const FieldGrid& g, int e) {
    std::vector<EdgeNode> out;
    if (e == 0 || e == 1) {
        const int i = (e == 0) ? 0 : g.nx - 1;
        for (int j = 0; j < g.ny; ++j) out.push_back({i, j, trapezoid_w(j, g.ny) * g.dy});
    } else {
        const int j = (e == 2) ? 0 : g.ny - 1;
        for (int i = 0; i < g.nx; ++i) out.push_back({i, j, trapezoid_w(i, g.nx) * g.dx});
    }
    return out;
}

Eigen::Vector2d edge_normal(int e) {
    switch (e) {
        case 0: return {-1.0, 0.0};
        case 1: return {1.0, 0.0};
        case 2: return {0.0, -1.0};
        default: return {0.0, 1.0};
    }
}

}  // namespace

AdmissibleState state_from_solution(const PlateSolution& sol) {
    return AdmissibleState{sol.resultants, sol.fields};
}

HprBreakdown hpr_functional(const PlateProblem& problem, const AdmissibleState& state) {
    const FieldGrid& g = state.U.grid;
    if (!g.same_layout(state.S.grid))
        throw std::invalid_argument("hpr_functional: stress and kinematic grids differ");
    const FieldGrid pg = problem.grid();
    if (!g.same_layout(pg))
        throw std::invalid_argument("hpr_functional: state grid does not match the problem");

    ComplianceMap map(problem.moduli, problem.h);
    const StrainFields E = strain_from_kinematics(state.U);

    HprBreakdown out;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            const double w = trapezoid_w(i, g.nx) * trapezoid_w(j, g.ny) * g.dx * g.dy;
            const PlateLoads L = problem.loads.at(g.x(i), g.y(j));
            StressSet S;
            StrainSet Ek;
            for (int s = 0; s < 20; ++s) {
                S[s] = state.S.comp[s][k];
                Ek[s] = E.comp[s][k];
            }
            out.energy += w * energy_density(map, S, L).value;
            double load_work = L.p() * state.U.comp[uidx::W][k] +
                               L.v() * state.U.comp[uidx::Om03][k];
            for (int f = 0; f < 9; ++f)
                if (problem.forcing[f])
                    load_work += problem.forcing[f](g.x(i), g.y(j)) * state.U.comp[f][k];
            out.internal_work += w * (work_density(S, Ek) - load_work);
        }
    }

    for (int e = 0; e < 4; ++e) {
        const EdgeCondition& ec = problem.edges[e];
        const Eigen::Vector2d n = edge_normal(e);
        for (const EdgeNode& en : edge_nodes(g, e)) {
            const int k = g.idx(en.i, en.j);
            const double x = g.x(en.i), y = g.y(en.j);
            StressSet S;
            for (int s = 0; s < 20; ++s) S[s] = state.S.comp[s][k];
            const Vec9 Sn = edge_flux(S, n);
            for (int f = 0; f < 9; ++f) {
                const bool bending = f < uidx::U1;
                const BCKind kind = bending ? ec.bending : ec.twisting;
                const ScalarField& data =
                    bending ? ec.bending_data[f] : ec.twisting_data[f - uidx::U1];
                const double datum = data ? data(x, y) : 0.0;
                const double Uf = state.U.comp[f][k];
                if (kind == BCKind::Displacement)
                    out.displacement_term += en.ds * Sn[f] * (Uf - datum);
                else if (kind == BCKind::Traction)
                    out.traction_term += en.ds * datum * Uf;
                else if (pins(e, f))
                    out.displacement_term += en.ds * Sn[f] * Uf;
            }
        }
    }

    out.total = out.energy - out.internal_work + out.displacement_term + out.traction_term;
    return out;
}

StationarityCheck stationarity_check(const PlateProblem& problem, const AdmissibleState& state,
                                     int directions, unsigned seed) {
    const FieldGrid& g = state.U.grid;
    const HprBreakdown base = hpr_functional(problem, state);
    const double denom = std::abs(base.energy) + std::abs(base.internal_work) +
                         std::abs(base.displacement_term) + std::abs(base.traction_term) + 1e-300;

    double scale = 1.0;
    for (const auto& c : state.S.comp)
        for (double v : c) scale = std::max(scale, std::abs(v));
    for (const auto& c : state.U.comp)
        for (double v : c) scale = std::max(scale, std::abs(v));
    // Theta is quadratic, so central differences are exact for any step;
    // a large step keeps the roundoff floor low.
    const double eps = 0.01 * scale;

    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    StationarityCheck out;
    for (int d = 0; d < directions; ++d) {
        AdmissibleState dir;
        dir.S = make_gridded_set<20>(g);
        dir.U = make_gridded_set<9>(g);
        double nrm2 = 0.0;
        // Three-node band: the one-sided boundary stencils reach two nodes
        // inward, so anything closer would leak into the boundary rows and
        // break the exact summation by parts.
        for (int j = 3; j < g.ny - 3; ++j)
            for (int i = 3; i < g.nx - 3; ++i) {
                const int k = g.idx(i, j);
                for (auto& c : dir.S.comp) {
                    c[k] = dist(rng);
                    nrm2 += c[k] * c[k];
                }
                for (auto& c : dir.U.comp) {
                    c[k] = dist(rng);
                    nrm2 += c[k] * c[k];
                }
            }
        const double nrm = std::sqrt(nrm2);
        if (nrm == 0.0) throw std::invalid_argument("stationarity_check: grid has no interior window");

        AdmissibleState plus = state, minus = state;
        for (int s = 0; s < 20; ++s)
            for (int k = 0; k < g.size(); ++k) {
                const double step = eps * dir.S.comp[s][k] / nrm;
                plus.S.comp[s][k] += step;
                minus.S.comp[s][k] -= step;
            }
        for (int f = 0; f < 9; ++f)
            for (int k = 0; k < g.size(); ++k) {
                const double step = eps * dir.U.comp[f][k] / nrm;
                plus.U.comp[f][k] += step;
                minus.U.comp[f][k] -= step;
            }
        const double der =
            (hpr_functional(problem, plus).total - hpr_functional(problem, minus).total) /
            (2.0 * eps);
        const double sample = std::abs(der) / denom;
        out.samples.push_back(sample);
        out.max_normalized_derivative = std::max(out.max_normalized_derivative, sample);
    }
    return out;
}

ReissnerReference navier_reissner_reference(const CosseratModuli& m, double h, double a, double b,
                                            int mm, int nn, double p0) {
    if (mm < 1 || nn < 1)
        throw std::invalid_argument("navier_reissner_reference: mode numbers must be >= 1");
    if (!(h > 0.0) || !(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("navier_reissner_reference: geometry must be positive");
    const double mu = m.mu, lam = m.lambda;
    if (!(mu > 0.0) || !(3.0 * lam + 2.0 * mu > 0.0))
        throw std::invalid_argument("navier_reissner_reference: needs mu > 0, 3 lambda + 2 mu > 0");
    ReissnerReference r;
    r.young = mu * (3.0 * lam + 2.0 * mu) / (lam + mu);
    r.poisson = lam / (2.0 * (lam + mu));
    r.bending_stiffness = r.young * h * h * h / (12.0 * (1.0 - r.poisson * r.poisson));
    const double k1 = mm * M_PI / a, k2 = nn * M_PI / b;
    r.k2 = k1 * k1 + k2 * k2;
    r.w_amplitude = p0 / (r.bending_stiffness * r.k2 * r.k2) +
                    p0 / (r.shear_factor * mu * h * r.k2);
    return r;
}

NullSpaceReport null_space_report(const PlateProblem& problem) {
    const FieldGrid g = problem.grid();
    if (g.size() > 200)
        throw std::invalid_argument("null_space_report: dense analysis is limited to small grids");
    const int N = g.size();
    const Eigen::MatrixXd C = Eigen::MatrixXd(assembled_operator(problem, PlateModel::Full));

    Eigen::BDCSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-10 * sv[0];
    int kdim = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] < tol) ++kdim;

    NullSpaceReport rep;
    rep.kernel_dim = kdim;
    rep.smallest_nonkernel_singular_value = sv[sv.size() - kdim - 1];

    Eigen::MatrixXd R(9 * N, 6);
    int c = 0;
    for (auto setter : {&RigidMotionParams::U0_1, &RigidMotionParams::U0_2, &RigidMotionParams::W0,
                        &RigidMotionParams::Om0_1, &RigidMotionParams::Om0_2,
                        &RigidMotionParams::Om0_3}) {
        RigidMotionParams p{};
        p.*setter = 1.0;
        const KinematicFields kf = rigid_motion_fields(p, g);
        for (int k = 0; k < N; ++k)
            for (int f = 0; f < 9; ++f) R(9 * k + f, c) = kf.comp[f][k];
        ++c;
    }
    const Eigen::MatrixXd Rq = Eigen::HouseholderQR<Eigen::MatrixXd>(R).householderQ() *
                               Eigen::MatrixXd::Identity(9 * N, 6);
    if (kdim == 0) {
        rep.max_principal_angle = M_PI / 2.0;
        return rep;
    }
    // sin(angle) per rigid direction: distance to the kernel subspace.
    // Computed through the orthogonal complement, which stays accurate for
    // tiny angles where acos of a near-unit cosine would not.
    const Eigen::MatrixXd Vk = svd.matrixV().rightCols(kdim);
    for (int c2 = 0; c2 < 6; ++c2) {
        const Eigen::VectorXd r = Rq.col(c2);
        const double s = (r - Vk * (Vk.transpose() * r)).norm();
        rep.max_principal_angle = std::max(rep.max_principal_angle, std::asin(std::min(1.0, s)));
    }
    return rep;
}

}  // namespace cosserat
