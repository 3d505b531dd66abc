#include "cosserat/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cosserat {

namespace {

using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

double eval(const ScalarField& f, double x, double y) { return f ? f(x, y) : 0.0; }

bool is_bending_field(int f) { return f < uidx::U1; }

Eigen::Vector2d edge_normal(int e) {
    switch (e) {
        case 0: return {-1.0, 0.0};
        case 1: return {1.0, 0.0};
        case 2: return {0.0, -1.0};
        default: return {0.0, 1.0};
    }
}

// Hard simple support: pinned kinematic components per edge orientation.
bool simply_supported_pins(int edge, int f) {
    const bool x_edge = (edge == 0 || edge == 1);
    if (x_edge) return f == uidx::Psi2 || f == uidx::W || f == uidx::Om01 || f == uidx::U2;
    return f == uidx::Psi1 || f == uidx::W || f == uidx::Om02 || f == uidx::U1;
}

struct Assembly {
    FieldGrid g;
    int nf = 0;
    std::array<int, 9> local{};  // uidx -> local field index, -1 if dropped
    SpMat SC;                    // 20N x nf N : resultants from unknowns
    SpMat Adj;                   // nf N x 20N : variational equilibrium rows
    Eigen::VectorXd s_off;       // 20N : load part of the resultants
    Eigen::VectorXd load_vec;    // nf N : face load terms of the equations
    std::vector<PlateLoads> node_loads;
};

Assembly build_operators(const PlateProblem& prob, const ModelSubspace& ms) {
    Assembly a;
    a.g = prob.grid();
    a.nf = static_cast<int>(ms.active_fields.size());
    a.local.fill(-1);
    for (int lf = 0; lf < a.nf; ++lf) a.local[ms.active_fields[lf]] = lf;

    const auto& tb = strain_tables();
    const int N = a.g.size();
    const int rows_s = 20 * N;
    const int rows_u = a.nf * N;

    std::vector<Triplet> tC, tA, tJ;
    tC.reserve(static_cast<std::size_t>(N) * 110);
    tA.reserve(static_cast<std::size_t>(N) * 80);
    tJ.reserve(static_cast<std::size_t>(N) * 110);

    a.s_off.setZero(rows_s);
    a.load_vec.setZero(rows_u);
    a.node_loads.resize(N);

    for (int j = 0; j < a.g.ny; ++j) {
        const auto sy = ddy_stencil(a.g, j);
        for (int i = 0; i < a.g.nx; ++i) {
            const auto sx = ddx_stencil(a.g, i);
            const int k = a.g.idx(i, j);
            const PlateLoads L = prob.loads.at(a.g.x(i), a.g.y(j));
            a.node_loads[k] = L;

            const Eigen::Vector4d l = ComplianceMap::load_vector(L);
            const Vec20 off = ms.effective_load * l;
            for (int s = 0; s < 20; ++s) a.s_off[20 * k + s] = off[s];

            if (a.local[uidx::W] >= 0) a.load_vec[a.nf * k + a.local[uidx::W]] = L.p();
            if (a.local[uidx::Om03] >= 0) a.load_vec[a.nf * k + a.local[uidx::Om03]] = L.v();
            for (int f = 0; f < 9; ++f)
                if (a.local[f] >= 0 && prob.forcing[f])
                    a.load_vec[a.nf * k + a.local[f]] += prob.forcing[f](a.g.x(i), a.g.y(j));

            for (int s = 0; s < 20; ++s) {
                for (int f = 0; f < 9; ++f) {
                    const int lf = a.local[f];
                    if (lf < 0) continue;
                    const double c0 = tb.c0[s][f];
                    if (c0 != 0.0) {
                        tC.emplace_back(20 * k + s, a.nf * k + lf, c0);
                        tJ.emplace_back(a.nf * k + lf, 20 * k + s, c0);
                    }
                    const double cx = tb.c1[s][f][0];
                    if (cx != 0.0) {
                        for (const auto& st : sx) {
                            tC.emplace_back(20 * k + s, a.nf * a.g.idx(i + st.d, j) + lf,
                                            cx * st.w);
                            tJ.emplace_back(a.nf * k + lf, 20 * a.g.idx(i + st.d, j) + s,
                                            -cx * st.w);
                        }
                    }
                    const double cy = tb.c1[s][f][1];
                    if (cy != 0.0) {
                        for (const auto& st : sy) {
                            tC.emplace_back(20 * k + s, a.nf * a.g.idx(i, j + st.d) + lf,
                                            cy * st.w);
                            tJ.emplace_back(a.nf * k + lf, 20 * a.g.idx(i, j + st.d) + s,
                                            -cy * st.w);
                        }
                    }
                }
            }
            for (int s = 0; s < 20; ++s)
                for (int s2 = 0; s2 < 20; ++s2)
                    if (ms.effective_stiffness(s, s2) != 0.0)
                        tA.emplace_back(20 * k + s, 20 * k + s2, ms.effective_stiffness(s, s2));
        }
    }

    SpMat C(rows_s, rows_u);
    C.setFromTriplets(tC.begin(), tC.end());
    SpMat A(rows_s, rows_s);
    A.setFromTriplets(tA.begin(), tA.end());
    a.Adj.resize(rows_u, rows_s);
    a.Adj.setFromTriplets(tJ.begin(), tJ.end());
    a.SC = A * C;
    return a;
}

// Rigid kernel of a field group under pure traction conditions. The
// decoupled model loses the tie between tilts and microrotations, so its
// bending kernel gains the two constant microrotation modes.
std::vector<Eigen::VectorXd> group_kernel_modes(const Assembly& a, PlateModel model,
                                                bool bending) {
    std::vector<KinematicFields> kf;
    if (bending) {
        RigidMotionParams p{};
        p.W0 = 1.0;
        kf.push_back(rigid_motion_fields(p, a.g));
        p = {};
        p.Om0_1 = 1.0;
        kf.push_back(rigid_motion_fields(p, a.g));
        p = {};
        p.Om0_2 = 1.0;
        kf.push_back(rigid_motion_fields(p, a.g));
        if (model == PlateModel::DecoupledReissner) {
            for (int f : {uidx::Om01, uidx::Om02}) {
                auto m = make_gridded_set<9>(a.g);
                std::fill(m.comp[f].begin(), m.comp[f].end(), 1.0);
                kf.push_back(m);
            }
        }
    } else {
        for (auto setter : {&RigidMotionParams::U0_1, &RigidMotionParams::U0_2,
                            &RigidMotionParams::Om0_3}) {
            RigidMotionParams p{};
            p.*setter = 1.0;
            kf.push_back(rigid_motion_fields(p, a.g));
        }
    }
    std::vector<Eigen::VectorXd> modes;
    for (const auto& m : kf) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(a.nf * a.g.size());
        for (int f = 0; f < 9; ++f) {
            const int lf = a.local[f];
            if (lf < 0) continue;
            for (int k = 0; k < a.g.size(); ++k) v[a.nf * k + lf] = m.comp[f][k];
        }
        v /= v.norm();
        modes.push_back(std::move(v));
    }
    return modes;
}

struct LinearSystem {
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd rhs;
    int nb = 0;  // border size
};

LinearSystem assemble(const PlateProblem& prob, const ModelSubspace& ms, PlateModel model,
                      const Assembly& a, bool border) {
    const FieldGrid& g = a.g;
    const int N = g.size();
    const int n_u = a.nf * N;

    SpMat sys = a.Adj * a.SC;
    Eigen::VectorXd rhs_int = a.Adj * a.s_off + a.load_vec;

    const auto& tb = strain_tables();
    std::vector<Triplet> T;
    T.reserve(static_cast<std::size_t>(sys.nonZeros()) + static_cast<std::size_t>(N) * 40);

    // Pure-traction groups need their rigid kernels pinned.
    bool border_bending = border, border_twisting = border;
    for (const auto& e : prob.edges) {
        if (e.bending != BCKind::Traction) border_bending = false;
        if (e.twisting != BCKind::Traction) border_twisting = false;
    }
    std::vector<Eigen::VectorXd> modes;
    if (border_bending)
        for (auto& m : group_kernel_modes(a, model, true)) modes.push_back(std::move(m));
    if (border_twisting)
        for (auto& m : group_kernel_modes(a, model, false)) modes.push_back(std::move(m));
    const int nb = static_cast<int>(modes.size());

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_u + nb);

    auto owned_edges = [&](int i, int j) {
        std::vector<int> e;
        if (i == 0) e.push_back(0);
        if (i == g.nx - 1) e.push_back(1);
        if (j == 0) e.push_back(2);
        if (j == g.ny - 1) e.push_back(3);
        return e;
    };

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            if (!g.on_boundary(i, j)) {
                for (int lf = 0; lf < a.nf; ++lf) {
                    const int row = a.nf * k + lf;
                    for (SpMat::InnerIterator it(sys, row); it; ++it)
                        T.emplace_back(row, static_cast<int>(it.col()), it.value());
                    rhs[row] = rhs_int[row];
                }
                continue;
            }
            const auto owned = owned_edges(i, j);
            const double scale = 1.0 / static_cast<double>(owned.size());
            const double x = g.x(i), y = g.y(j);
            for (int lf = 0; lf < a.nf; ++lf) {
                const int f = ms.active_fields[lf];
                const int row = a.nf * k + lf;
                const bool bending = is_bending_field(f);
                const int slot = bending ? f : f - uidx::U1;
                for (int e : owned) {
                    const EdgeCondition& ec = prob.edges[e];
                    const BCKind kind = bending ? ec.bending : ec.twisting;
                    const ScalarField* data =
                        bending ? &ec.bending_data[slot] : &ec.twisting_data[slot];
                    bool dirichlet;
                    double datum = 0.0;
                    if (kind == BCKind::Displacement) {
                        dirichlet = true;
                        datum = eval(*data, x, y);
                    } else if (kind == BCKind::Traction) {
                        dirichlet = false;
                        datum = eval(*data, x, y);
                    } else {
                        dirichlet = simply_supported_pins(e, f);
                    }
                    if (dirichlet) {
                        T.emplace_back(row, row, scale);
                        rhs[row] += scale * datum;
                    } else {
                        const Eigen::Vector2d n = edge_normal(e);
                        double off = 0.0;
                        for (int s = 0; s < 20; ++s) {
                            const double w = n[0] * tb.c1[s][f][0] + n[1] * tb.c1[s][f][1];
                            if (w == 0.0) continue;
                            for (SpMat::InnerIterator it(a.SC, 20 * k + s); it; ++it)
                                T.emplace_back(row, static_cast<int>(it.col()),
                                               scale * w * it.value());
                            off += w * a.s_off[20 * k + s];
                        }
                        rhs[row] += scale * (datum + off);
                    }
                }
            }
        }
    }

    for (int m = 0; m < nb; ++m) {
        const int bi = n_u + m;
        const Eigen::VectorXd& v = modes[m];
        for (int r = 0; r < n_u; ++r) {
            if (v[r] == 0.0) continue;
            T.emplace_back(bi, r, v[r]);
            T.emplace_back(r, bi, v[r]);
        }
        rhs[bi] = 0.0;
    }

    LinearSystem ls;
    ls.A.resize(n_u + nb, n_u + nb);
    ls.A.setFromTriplets(T.begin(), T.end());
    ls.A.makeCompressed();
    ls.rhs = std::move(rhs);
    ls.nb = nb;
    return ls;
}

Eigen::VectorXd solve_linear(const LinearSystem& ls, SolverStats& stats) {
    Eigen::VectorXd x;
    bool ok = false;
    {
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.analyzePattern(ls.A);
        lu.factorize(ls.A);
        if (lu.info() == Eigen::Success) {
            x = lu.solve(ls.rhs);
            ok = x.allFinite();
        }
    }
    if (!ok) {
        Eigen::BiCGSTAB<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> it;
        it.setTolerance(1e-10);
        it.setMaxIterations(10 * ls.A.rows());
        it.compute(ls.A);
        x = it.solve(ls.rhs);
        stats.used_iterative = true;
        stats.iterations = static_cast<int>(it.iterations());
        if (it.info() != Eigen::Success || !x.allFinite())
            throw std::runtime_error("plate solve failed: direct and iterative solvers broke down");
    }
    const double d = ls.rhs.norm();
    stats.residual = (ls.A * x - ls.rhs).norm() / (d > 0.0 ? d : 1.0);
    return x;
}

PlateSolution run_solve(const PlateProblem& prob, PlateModel model) {
    prob.validate();
    ComplianceMap map(prob.moduli, prob.h);
    const ModelSubspace ms = model_subspace(map, model);
    const Assembly a = build_operators(prob, ms);
    const LinearSystem ls = assemble(prob, ms, model, a, true);

    PlateSolution sol;
    sol.grid = a.g;
    sol.model = model;
    const Eigen::VectorXd x = solve_linear(ls, sol.stats);
    sol.stats.bordered_groups = ls.nb > 0 ? (ls.nb > 3 ? 2 : 1) : 0;
    for (int m = 0; m < ls.nb; ++m) sol.stats.multipliers.push_back(x[a.nf * a.g.size() + m]);

    sol.fields = make_gridded_set<9>(a.g);
    for (int k = 0; k < a.g.size(); ++k)
        for (int lf = 0; lf < a.nf; ++lf)
            sol.fields.comp[ms.active_fields[lf]][k] = x[a.nf * k + lf];

    sol.strains = strain_from_kinematics(sol.fields);
    sol.resultants = make_gridded_set<20>(a.g);
    sol.loads = make_gridded_set<4>(a.g);
    for (int k = 0; k < a.g.size(); ++k) {
        Vec20 E;
        for (int s = 0; s < 20; ++s) E[s] = sol.strains.comp[s][k];
        const Eigen::Vector4d l = ComplianceMap::load_vector(a.node_loads[k]);
        const Vec20 S = ms.effective_stiffness * E - ms.effective_load * l;
        for (int s = 0; s < 20; ++s) sol.resultants.comp[s][k] = S[s];
        for (int c = 0; c < 4; ++c) sol.loads.comp[c][k] = l[c];
    }
    return sol;
}

}  // namespace

ScalarField uniform(double value) {
    return [value](double, double) { return value; };
}

PlateLoads FaceLoads::at(double x, double y) const {
    PlateLoads L;
    L.sigma_t = eval(sigma_top, x, y);
    L.sigma_b = eval(sigma_bottom, x, y);
    L.mu_t = eval(mu_top, x, y);
    L.mu_b = eval(mu_bottom, x, y);
    return L;
}

std::array<EdgeCondition, 4> all_edges(BCKind kind) {
    std::array<EdgeCondition, 4> e{};
    for (auto& ec : e) {
        ec.bending = kind;
        ec.twisting = kind;
    }
    return e;
}

void PlateProblem::validate() const {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("plate problem: side lengths a, b must be positive");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("plate problem: thickness h must be positive");
    if (nx < 3 || ny < 3)
        throw std::invalid_argument("plate problem: need at least 3 nodes per direction");
    const auto rep = classify_material(moduli);
    if (rep.cls == AdmissibilityClass::Invalid)
        throw std::invalid_argument("plate problem: material fails the uniqueness conditions (" +
                                    rep.violated.front() + ")");
    for (const auto& ec : edges) {
        if (ec.bending == BCKind::SimplySupported)
            for (const auto& f : ec.bending_data)
                if (f)
                    throw std::invalid_argument(
                        "plate problem: simply supported edges take homogeneous data");
        if (ec.twisting == BCKind::SimplySupported)
            for (const auto& f : ec.twisting_data)
                if (f)
                    throw std::invalid_argument(
                        "plate problem: simply supported edges take homogeneous data");
    }
}

ModelSubspace model_subspace(const ComplianceMap& map, PlateModel model) {
    ModelSubspace ms;
    if (model == PlateModel::Full) {
        if (!map.invertible())
            throw std::domain_error(
                "model_subspace: compliance map is singular for the full model; use "
                "DecoupledReissner or SymmetricM");
        ms.patterns = Eigen::MatrixXd::Identity(20, 20);
        ms.active_fields = {0, 1, 2, 3, 4, 5, 6, 7, 8};
        ms.effective_stiffness = map.stiffness_matrix();
        ms.effective_load = ms.effective_stiffness * map.G();
        return ms;
    }

    std::vector<Vec20> pats;
    auto unit = [](int k) {
        Vec20 v = Vec20::Zero();
        v[k] = 1.0;
        return v;
    };
    auto pair = [](int k1, int k2) {
        Vec20 v = Vec20::Zero();
        v[k1] = 1.0;
        v[k2] = 1.0;
        return v;
    };
    pats.push_back(unit(sidx::M11));
    pats.push_back(unit(sidx::M22));
    pats.push_back(pair(sidx::M12, sidx::M21));
    if (model == PlateModel::DecoupledReissner) {
        pats.push_back(pair(sidx::Q1, sidx::Qs1));
        pats.push_back(pair(sidx::Q2, sidx::Qs2));
    } else {
        for (int s : {sidx::Q1, sidx::Q2, sidx::Qs1, sidx::Qs2}) pats.push_back(unit(s));
    }
    for (int s : {sidx::R11, sidx::R12, sidx::R21, sidx::R22}) pats.push_back(unit(s));
    for (int s : {sidx::N11, sidx::N12, sidx::N21, sidx::N22}) pats.push_back(unit(s));
    for (int s : {sidx::Ms1, sidx::Ms2}) pats.push_back(unit(s));

    const int nr = static_cast<int>(pats.size());
    Eigen::MatrixXd P(20, nr);
    for (int c = 0; c < nr; ++c) P.col(c) = pats[c];

    const Eigen::MatrixXd Kr = P.transpose() * map.K() * P;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Kr);
    if (!lu.isInvertible())
        throw std::domain_error("model_subspace: condensed compliance block is singular");
    ms.patterns = P;
    ms.active_fields = {uidx::Psi1, uidx::Psi2, uidx::W, uidx::Om01,
                        uidx::Om02, uidx::U1,   uidx::U2, uidx::Om03};
    ms.effective_stiffness = P * lu.inverse() * P.transpose();
    ms.effective_load = ms.effective_stiffness * map.G();
    return ms;
}

PlateSolution solve(const PlateProblem& problem) { return run_solve(problem, PlateModel::Full); }

PlateSolution solve_reduced(const PlateProblem& problem, PlateModel model) {
    return run_solve(problem, model);
}

Eigen::SparseMatrix<double> assembled_operator(const PlateProblem& problem, PlateModel model) {
    problem.validate();
    ComplianceMap map(problem.moduli, problem.h);
    const ModelSubspace ms = model_subspace(map, model);
    const Assembly a = build_operators(problem, ms);
    return assemble(problem, ms, model, a, false).A;
}

EquilibriumResidual plate_residual(const PlateProblem& problem, const PlateSolution& sol) {
    const FieldGrid& g = sol.grid;
    ComplianceMap map(problem.moduli, problem.h);
    const ModelSubspace ms = model_subspace(map, sol.model);
    const auto& tb = strain_tables();

    const StrainFields E = strain_from_kinematics(sol.fields);
    StressFields S = make_gridded_set<20>(g);
    std::vector<PlateLoads> loads(g.size());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            loads[k] = problem.loads.at(g.x(i), g.y(j));
            Vec20 e;
            for (int s = 0; s < 20; ++s) e[s] = E.comp[s][k];
            const Vec20 sv = ms.effective_stiffness * e -
                             ms.effective_load * ComplianceMap::load_vector(loads[k]);
            for (int s = 0; s < 20; ++s) S.comp[s][k] = sv[s];
        }

    EquilibriumResidual r;
    std::array<double, 9> sum_int{}, sum_all{};
    int n_int = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            const bool interior = !g.on_boundary(i, j);
            if (interior) ++n_int;
            for (int f = 0; f < 9; ++f) {
                double v = 0.0;
                for (int s = 0; s < 20; ++s) {
                    if (tb.c1[s][f][0] != 0.0) v += tb.c1[s][f][0] * ddx(g, S.comp[s], i, j);
                    if (tb.c1[s][f][1] != 0.0) v += tb.c1[s][f][1] * ddy(g, S.comp[s], i, j);
                    if (tb.c0[s][f] != 0.0) v -= tb.c0[s][f] * S.comp[s][k];
                }
                if (f == uidx::W) v += loads[k].p();
                if (f == uidx::Om03) v += loads[k].v();
                if (problem.forcing[f]) v += problem.forcing[f](g.x(i), g.y(j));
                sum_all[f] += v * v;
                if (interior) sum_int[f] += v * v;
            }
        }
    for (int f = 0; f < 9; ++f) {
        r.interior[f] = n_int > 0 ? std::sqrt(sum_int[f] / n_int) : 0.0;
        r.global[f] = std::sqrt(sum_all[f] / g.size());
        r.max_interior = std::max(r.max_interior, r.interior[f]);
        r.max_global = std::max(r.max_global, r.global[f]);
    }
    return r;
}

Reconstruction3D reconstruct_3d(const PlateProblem& problem, const PlateSolution& sol) {
    const FieldGrid& g = sol.grid;
    Reconstruction3D rec;
    rec.densities = make_gridded_set<20>(g);
    rec.loads = sol.loads;

    for (int k = 0; k < g.size(); ++k) {
        StressSet S;
        for (int s = 0; s < 20; ++s) S[s] = sol.resultants.comp[s][k];
        const SectionDensities d = densities_from_resultants(S, problem.h);
        rec.densities.comp[sidx::N11][k] = d.n(0, 0);
        rec.densities.comp[sidx::N12][k] = d.n(0, 1);
        rec.densities.comp[sidx::N21][k] = d.n(1, 0);
        rec.densities.comp[sidx::N22][k] = d.n(1, 1);
        rec.densities.comp[sidx::M11][k] = d.m(0, 0);
        rec.densities.comp[sidx::M12][k] = d.m(0, 1);
        rec.densities.comp[sidx::M21][k] = d.m(1, 0);
        rec.densities.comp[sidx::M22][k] = d.m(1, 1);
        rec.densities.comp[sidx::Q1][k] = d.q[0];
        rec.densities.comp[sidx::Q2][k] = d.q[1];
        rec.densities.comp[sidx::Qs1][k] = d.q_star[0];
        rec.densities.comp[sidx::Qs2][k] = d.q_star[1];
        rec.densities.comp[sidx::R11][k] = d.r(0, 0);
        rec.densities.comp[sidx::R12][k] = d.r(0, 1);
        rec.densities.comp[sidx::R21][k] = d.r(1, 0);
        rec.densities.comp[sidx::R22][k] = d.r(1, 1);
        rec.densities.comp[sidx::Ss1][k] = d.s_star[0];
        rec.densities.comp[sidx::Ss2][k] = d.s_star[1];
        rec.densities.comp[sidx::Ms1][k] = d.m_star[0];
        rec.densities.comp[sidx::Ms2][k] = d.m_star[1];
    }

    const auto& q5 = gauss5();
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 1; i < g.nx - 1; ++i) {
            const int k = g.idx(i, j);
            PlateLoads L;
            L.sigma_t = sol.loads.comp[lidx::sigma0][k] + 0.5 * sol.loads.comp[lidx::p][k];
            L.sigma_b = sol.loads.comp[lidx::sigma0][k] - 0.5 * sol.loads.comp[lidx::p][k];
            L.mu_t = sol.loads.comp[lidx::t][k] + sol.loads.comp[lidx::v][k];
            L.mu_b = sol.loads.comp[lidx::t][k] - sol.loads.comp[lidx::v][k];
            for (double z : q5.x) {
                const auto br = thickness_equilibrium_residual(
                    rec.densities, rec.loads, problem.h, ThicknessCoordinate(z), g.x(i), g.y(j));
                rec.max_force_residual =
                    std::max(rec.max_force_residual, br.force.cwiseAbs().maxCoeff());
                rec.max_moment_residual =
                    std::max(rec.max_moment_residual, br.moment.cwiseAbs().maxCoeff());
            }
            StressSet S;
            for (int s = 0; s < 20; ++s) S[s] = sol.resultants.comp[s][k];
            const SectionDensities d = densities_from_resultants(S, problem.h);
            rec.max_face_mismatch =
                std::max(rec.max_face_mismatch, face_bc_residuals(d, L, problem.h).max_abs());
        }
    return rec;
}

}  // namespace cosserat
