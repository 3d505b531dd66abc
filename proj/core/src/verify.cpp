#include "cosserat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cosserat/cosserat3d.hpp"

namespace cosserat {

namespace {

AnalyticField wave(double A, double kx, double px, double ky, double py) {
    AnalyticField f;
    f.value = [=](double x, double y) { return A * std::sin(kx * x + px) * std::sin(ky * y + py); };
    f.grad = [=](double x, double y) {
        return Eigen::Vector2d(A * kx * std::cos(kx * x + px) * std::sin(ky * y + py),
                               A * ky * std::sin(kx * x + px) * std::cos(ky * y + py));
    };
    f.hess = [=](double x, double y) {
        Eigen::Matrix2d H;
        const double sx = std::sin(kx * x + px), cx = std::cos(kx * x + px);
        const double sy = std::sin(ky * y + py), cy = std::cos(ky * y + py);
        H(0, 0) = -A * kx * kx * sx * sy;
        H(0, 1) = A * kx * ky * cx * cy;
        H(1, 0) = H(0, 1);
        H(1, 1) = -A * ky * ky * sx * sy;
        return H;
    };
    return f;
}

AnalyticField zero_analytic() {
    AnalyticField f;
    f.value = [](double, double) { return 0.0; };
    f.grad = [](double, double) { return Eigen::Vector2d::Zero().eval(); };
    f.hess = [](double, double) { return Eigen::Matrix2d::Zero().eval(); };
    return f;
}

double slope_loglog(const std::vector<double>& hs, const std::vector<double>& es) {
    const int n = static_cast<int>(hs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(hs[i]), ly = std::log(es[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double trapezoid_w(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

AnalyticSolution trig_solution(double a, double b) {
    const double ka = M_PI / a, kb = M_PI / b;
    AnalyticSolution s;
    s[uidx::Psi1] = wave(0.9, 1.0 * ka, 0.3, 1.0 * kb, 0.7);
    s[uidx::Psi2] = wave(-0.7, 2.0 * ka, 1.1, 1.0 * kb, 0.2);
    s[uidx::W] = wave(1.1, 1.0 * ka, 0.0, 2.0 * kb, 0.5);
    s[uidx::Om01] = wave(0.8, 2.0 * ka, 0.6, 2.0 * kb, 1.3);
    s[uidx::Om02] = wave(-0.6, 1.0 * ka, 1.7, 1.0 * kb, 0.9);
    s[uidx::Om3] = wave(0.5, 1.0 * ka, 0.4, 2.0 * kb, 1.9);
    s[uidx::U1] = wave(1.2, 2.0 * ka, 1.5, 1.0 * kb, 0.1);
    s[uidx::U2] = wave(-0.9, 1.0 * ka, 0.8, 2.0 * kb, 0.6);
    s[uidx::Om03] = wave(0.7, 1.0 * ka, 2.1, 1.0 * kb, 1.1);
    return s;
}

KinematicSet analytic_kinematics(const AnalyticSolution& sol, double x, double y) {
    KinematicSet U;
    for (int f = 0; f < 9; ++f) U[f] = sol[f].value(x, y);
    return U;
}

StrainSet analytic_strain(const AnalyticSolution& sol, double x, double y) {
    Vec9 U;
    Eigen::Matrix<double, 9, 2> G;
    for (int f = 0; f < 9; ++f) {
        U[f] = sol[f].value(x, y);
        G.row(f) = sol[f].grad(x, y).transpose();
    }
    return strain_from_point_values(U, G);
}

std::array<ScalarField, 9> manufactured_forcing(const CosseratModuli& m, double h,
                                                PlateModel model, const AnalyticSolution& sol) {
    ComplianceMap map(m, h);
    auto ms = std::make_shared<ModelSubspace>(model_subspace(map, model));
    auto sp = std::make_shared<AnalyticSolution>(sol);

    auto stress_and_gradients = [ms, sp](double x, double y, Vec20& S, Vec20& dSx, Vec20& dSy) {
        const auto& tb = strain_tables();
        Vec9 U;
        Eigen::Matrix<double, 9, 2> G;
        std::array<Eigen::Matrix2d, 9> H;
        for (int f = 0; f < 9; ++f) {
            U[f] = (*sp)[f].value(x, y);
            G.row(f) = (*sp)[f].grad(x, y).transpose();
            H[f] = (*sp)[f].hess(x, y);
        }
        Vec20 E, Ex, Ey;
        for (int s = 0; s < 20; ++s) {
            double e = 0, ex = 0, ey = 0;
            for (int f = 0; f < 9; ++f) {
                const double c0 = tb.c0[s][f];
                if (c0 != 0.0) {
                    e += c0 * U[f];
                    ex += c0 * G(f, 0);
                    ey += c0 * G(f, 1);
                }
                for (int g = 0; g < 2; ++g) {
                    const double c1 = tb.c1[s][f][g];
                    if (c1 != 0.0) {
                        e += c1 * G(f, g);
                        ex += c1 * H[f](g, 0);
                        ey += c1 * H[f](g, 1);
                    }
                }
            }
            E[s] = e;
            Ex[s] = ex;
            Ey[s] = ey;
        }
        S = ms->effective_stiffness * E;
        dSx = ms->effective_stiffness * Ex;
        dSy = ms->effective_stiffness * Ey;
    };

    std::array<ScalarField, 9> out;
    for (int f = 0; f < 9; ++f) {
        out[f] = [stress_and_gradients, f](double x, double y) {
            const auto& tb = strain_tables();
            Vec20 S, dSx, dSy;
            stress_and_gradients(x, y, S, dSx, dSy);
            double r = 0.0;
            for (int s = 0; s < 20; ++s) {
                if (tb.c0[s][f] != 0.0) r += tb.c0[s][f] * S[s];
                if (tb.c1[s][f][0] != 0.0) r -= tb.c1[s][f][0] * dSx[s];
                if (tb.c1[s][f][1] != 0.0) r -= tb.c1[s][f][1] * dSy[s];
            }
            return r;
        };
    }
    return out;
}

FieldErrors compare_solution(const PlateSolution& num, const AnalyticSolution& exact) {
    const FieldGrid& g = num.grid;
    FieldErrors err;
    std::array<double, 9> sq{};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            for (int f = 0; f < 9; ++f) {
                const double d = num.fields.comp[f][k] - exact[f].value(g.x(i), g.y(j));
                err.linf[f] = std::max(err.linf[f], std::abs(d));
                sq[f] += d * d;
            }
        }
    for (int f = 0; f < 9; ++f) {
        err.l2[f] = std::sqrt(sq[f] / g.size());
        err.max_linf = std::max(err.max_linf, err.linf[f]);
        err.max_l2 = std::max(err.max_l2, err.l2[f]);
    }
    return err;
}

OrderStudy mms_order_study(const CosseratModuli& m, double h, double a, double b,
                           PlateModel model, const std::vector<int>& sizes) {
    AnalyticSolution sol = trig_solution(a, b);
    if (model != PlateModel::Full) sol[uidx::Om3] = zero_analytic();

    PlateProblem prob;
    prob.moduli = m;
    prob.a = a;
    prob.b = b;
    prob.h = h;
    prob.forcing = manufactured_forcing(m, h, model, sol);
    prob.edges = all_edges(BCKind::Displacement);
    for (auto& ec : prob.edges) {
        for (int f = 0; f < 6; ++f) ec.bending_data[f] = sol[f].value;
        for (int f = 0; f < 3; ++f) ec.twisting_data[f] = sol[uidx::U1 + f].value;
    }

    OrderStudy st;
    std::vector<double> hs;
    for (int n : sizes) {
        prob.nx = prob.ny = n;
        const PlateSolution ps = solve_reduced(prob, model);
        const FieldErrors err = compare_solution(ps, sol);
        st.sizes.push_back(n);
        st.errors.push_back(err.max_l2);
        hs.push_back(a / (n - 1.0));
    }
    st.rate = slope_loglog(hs, st.errors);
    return st;
}

OffgridResidual offgrid_residual(const PlateProblem& problem, const PlateSolution& sol) {
    const FieldGrid& g = sol.grid;
    const auto& tb = strain_tables();
    OffgridResidual out;
    std::array<double, 9> sq{};
    int count = 0;
    for (int j = 1; j <= g.ny - 3; ++j)
        for (int i = 1; i <= g.nx - 3; ++i) {
            const double xc = g.x(i) + 0.5 * g.dx;
            const double yc = g.y(j) + 0.5 * g.dy;
            std::array<PointDerivs, 20> S;
            for (int s = 0; s < 20; ++s) S[s] = interp_derivs(g, sol.resultants.comp[s], xc, yc);
            const PlateLoads L = problem.loads.at(xc, yc);
            ++count;
            for (int f = 0; f < 9; ++f) {
                double r = 0.0;
                for (int s = 0; s < 20; ++s) {
                    if (tb.c1[s][f][0] != 0.0) r += tb.c1[s][f][0] * S[s].dx;
                    if (tb.c1[s][f][1] != 0.0) r += tb.c1[s][f][1] * S[s].dy;
                    if (tb.c0[s][f] != 0.0) r -= tb.c0[s][f] * S[s].value;
                }
                if (f == uidx::W) r += L.p();
                if (f == uidx::Om03) r += L.v();
                if (problem.forcing[f]) r += problem.forcing[f](xc, yc);
                sq[f] += r * r;
            }
        }
    if (count == 0) throw std::invalid_argument("offgrid_residual: grid too small for cell centers");
    for (int f = 0; f < 9; ++f) {
        out.rms[f] = std::sqrt(sq[f] / count);
        out.max_rms = std::max(out.max_rms, out.rms[f]);
    }
    return out;
}

double reciprocity_gap(const PlateSolution& sol_f, const PlateSolution& sol_g) {
    const FieldGrid& g = sol_f.grid;
    if (!g.same_layout(sol_g.grid))
        throw std::invalid_argument("reciprocity_gap: solutions live on different grids");
    double w_fg = 0.0, w_gf = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            const double w = trapezoid_w(i, g.nx) * trapezoid_w(j, g.ny) * g.dx * g.dy;
            double fg = 0.0, gf = 0.0;
            for (int s = 0; s < 20; ++s) {
                fg += sol_f.resultants.comp[s][k] * sol_g.strains.comp[s][k];
                gf += sol_g.resultants.comp[s][k] * sol_f.strains.comp[s][k];
            }
            w_fg += w * fg;
            w_gf += w * gf;
        }
    const double scale = std::max({std::abs(w_fg), std::abs(w_gf), 1e-300});
    return std::abs(w_fg - w_gf) / scale;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

CheckResult upper_bound_check(std::string name, double value, double threshold,
                              std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.pass = value <= threshold;
    c.detail = std::move(detail);
    return c;
}

CheckResult lower_bound_check(std::string name, double value, double threshold,
                              std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.pass = value >= threshold;
    c.detail = std::move(detail);
    return c;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opt) {
    VerificationReport rep;
    CosseratModuli M0;
    M0.lambda = 1.0;
    M0.mu = 1.0;
    M0.mu_c = 0.5;
    M0.beta = 0.6;
    M0.gamma = 1.2;
    M0.epsilon = 0.8;
    const double h = 0.1, a = 1.0, b = 1.2;
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    {  // constitutive closed form against thickness quadrature
        ComplianceMap map(M0, h);
        double worst = 0.0, worst_grad = 0.0;
        for (int t = 0; t < 5; ++t) {
            StressSet S;
            for (int s = 0; s < 20; ++s) S[s] = unit(rng);
            PlateLoads L{unit(rng), unit(rng), unit(rng), unit(rng)};
            const double e1 = energy_density(map, S, L).value;
            const double e2 = energy_density_quadrature(M0, h, S, L);
            worst = std::max(worst, std::abs(e1 - e2) / std::max(1.0, std::abs(e1)));
            worst_grad = std::max(worst_grad, gradient_check(map, S, L));
        }
        rep.checks.push_back(upper_bound_check("energy-closed-vs-quadrature", worst, 1e-12));
        rep.checks.push_back(upper_bound_check("energy-gradient", worst_grad, 1e-9));
    }

    {  // pointwise elastic law round trip
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            StressPair s;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    s.sigma(i, j) = unit(rng);
                    s.mu(i, j) = unit(rng);
                }
            const StrainPair e = hooke_inverse(M0, s);
            const StressPair s2 = hooke_forward(M0, e);
            const double d = (s2.sigma - s.sigma).cwiseAbs().maxCoeff() +
                             (s2.mu - s.mu).cwiseAbs().maxCoeff();
            worst = std::max(worst, d);
        }
        rep.checks.push_back(upper_bound_check("elastic-law-roundtrip", worst, 1e-12));
    }

    {  // kernel of the pure-traction assembled operator
        PlateProblem free_pb;
        free_pb.moduli = M0;
        free_pb.a = a;
        free_pb.b = b;
        free_pb.h = h;
        free_pb.nx = 6;
        free_pb.ny = 5;
        free_pb.edges = all_edges(BCKind::Traction);
        const NullSpaceReport ns = null_space_report(free_pb);
        CheckResult c;
        c.name = "rigid-kernel-dimension";
        c.value = ns.kernel_dim;
        c.threshold = 6;
        c.pass = ns.kernel_dim == 6;
        c.detail = "smallest nonkernel singular value " + fmt(ns.smallest_nonkernel_singular_value);
        rep.checks.push_back(c);
        rep.checks.push_back(
            upper_bound_check("rigid-kernel-alignment", ns.max_principal_angle, 1e-8));
    }

    {  // manufactured-solution convergence
        const std::vector<int> sizes = opt.quick ? std::vector<int>{9, 17, 33}
                                                 : std::vector<int>{17, 33, 65};
        const OrderStudy st = mms_order_study(M0, h, a, b, PlateModel::Full, sizes);
        rep.checks.push_back(lower_bound_check(
            "mms-convergence-rate", st.rate, 1.9,
            "final L2 error " + fmt(st.errors.back()) + " at n=" + std::to_string(sizes.back())));
    }

    PlateProblem ss;  // simply supported sinusoid, reused below
    ss.moduli = M0;
    ss.a = a;
    ss.b = b;
    ss.h = h;
    ss.loads.sigma_top = [=](double x, double y) {
        return std::sin(M_PI * x / a) * std::sin(M_PI * y / b);
    };
    ss.edges = all_edges(BCKind::SimplySupported);

    {  // off-grid residual order
        const std::vector<int> sizes = opt.quick ? std::vector<int>{9, 17, 33}
                                                 : std::vector<int>{17, 33, 65};
        std::vector<double> hs, es;
        double final_res = 0.0;
        for (int n : sizes) {
            ss.nx = ss.ny = n;
            const PlateSolution sol = solve(ss);
            const OffgridResidual r = offgrid_residual(ss, sol);
            hs.push_back(a / (n - 1.0));
            es.push_back(r.max_rms);
            final_res = r.max_rms;
        }
        rep.checks.push_back(lower_bound_check("offgrid-residual-rate", slope_loglog(hs, es), 1.9,
                                               "final max rms " + fmt(final_res)));
    }

    {  // node-point residual is a machine-zero consistency statement
        ss.nx = ss.ny = opt.quick ? 17 : 33;
        const PlateSolution sol = solve(ss);
        const EquilibriumResidual r = plate_residual(ss, sol);
        rep.checks.push_back(upper_bound_check("node-residual-consistency", r.max_interior, 1e-9));
    }

    {  // decoupling sweep in mu_c
        const std::vector<double> mucs =
            opt.quick ? std::vector<double>{1e-2, 1e-4} : std::vector<double>{1e-2, 1e-3, 1e-4};
        const int n = opt.quick ? 17 : 33;
        std::vector<double> m1s, m2s;
        for (double muc : mucs) {
            PlateProblem p = ss;
            p.nx = p.ny = n;
            p.moduli.mu_c = muc;
            const PlateSolution full = solve(p);
            double q = 0.0, dq = 0.0;
            for (int k = 0; k < full.grid.size(); ++k)
                for (int c2 = 0; c2 < 2; ++c2) {
                    const double Q = full.resultants.comp[sidx::Q1 + c2][k];
                    const double Qs = full.resultants.comp[sidx::Qs1 + c2][k];
                    q += Q * Q;
                    dq += (Q - Qs) * (Q - Qs);
                }
            m1s.push_back(std::sqrt(dq / q));
            const PlateSolution red = solve_reduced(p, PlateModel::DecoupledReissner);
            const int c = full.grid.idx(n / 2, n / 2);
            m2s.push_back(std::abs(full.fields.comp[uidx::W][c] - red.fields.comp[uidx::W][c]) /
                          std::abs(red.fields.comp[uidx::W][c]));
        }
        const double slope = slope_loglog(mucs, m1s);
        rep.checks.push_back(upper_bound_check("decoupling-shear-gap-slope", std::abs(slope - 1.0),
                                               0.1, "slope " + fmt(slope)));
        CheckResult c;
        c.name = "decoupling-distance-to-reduced";
        c.value = m2s.back();
        c.threshold = m2s.front();
        c.pass = m2s.back() < m2s.front();
        c.detail = "m2 falls from " + fmt(m2s.front()) + " to " + fmt(m2s.back());
        rep.checks.push_back(c);
    }

    {  // classical limit against the Reissner reference
        PlateProblem p = ss;
        p.nx = p.ny = opt.quick ? 33 : 65;
        p.moduli.mu_c = 1e-4;
        p.moduli.gamma = 1e-4;
        p.moduli.epsilon = 1e-4;
        p.moduli.beta = 0.0;
        const PlateSolution sol = solve(p);
        const ReissnerReference ref = navier_reissner_reference(p.moduli, h, a, b, 1, 1, 1.0);
        const int c = sol.grid.idx(p.nx / 2, p.ny / 2);
        const double W = sol.fields.comp[uidx::W][c];
        const double xr = sol.grid.x(p.nx / 2) , yr = sol.grid.y(p.ny / 2);
        const double wex = ref.w_amplitude * std::sin(M_PI * xr / a) * std::sin(M_PI * yr / b);
        rep.checks.push_back(upper_bound_check("classical-limit-deflection",
                                               std::abs(W - wex) / std::abs(wex), 2e-2,
                                               "W " + fmt(W) + " vs " + fmt(wex)));
    }

    {  // stationarity of the mixed functional at a mixed-condition solution
        PlateProblem p = ss;
        p.nx = 21;
        p.ny = 25;
        p.edges[1].bending = BCKind::Traction;
        p.edges[1].twisting = BCKind::Traction;
        p.edges[0].bending = BCKind::Displacement;
        p.edges[0].twisting = BCKind::Displacement;
        const PlateSolution sol = solve(p);
        const StationarityCheck sc = stationarity_check(p, state_from_solution(sol));
        rep.checks.push_back(
            upper_bound_check("hpr-stationarity", sc.max_normalized_derivative, 1e-9));
    }

    {  // 3D reconstruction residuals (transverse face couples off)
        ss.nx = ss.ny = opt.quick ? 17 : 33;
        const PlateSolution sol = solve(ss);
        const Reconstruction3D rec = reconstruct_3d(ss, sol);
        rep.checks.push_back(upper_bound_check(
            "reconstruction-3d-balance",
            std::max(rec.max_force_residual, rec.max_moment_residual), 1e-8));
        rep.checks.push_back(
            upper_bound_check("reconstruction-face-data", rec.max_face_mismatch, 1e-13));
    }

    {  // reciprocity: exact without load coupling, reported with it
        PlateProblem p = ss;
        p.nx = p.ny = opt.quick ? 13 : 21;
        p.moduli.lambda = 0.0;
        p.moduli.beta = 0.0;
        PlateProblem q = p;
        q.loads = {};
        q.loads.mu_top = [=](double x, double y) {
            return std::sin(2.0 * M_PI * x / a) * std::sin(M_PI * y / b);
        };
        const double gap0 = reciprocity_gap(solve(p), solve(q));
        rep.checks.push_back(upper_bound_check("reciprocity-uncoupled", gap0, 1e-9));

        PlateProblem pc = p, qc = q;
        pc.moduli = M0;
        qc.moduli = M0;
        const double gap1 = reciprocity_gap(solve(pc), solve(qc));
        CheckResult c;
        c.name = "reciprocity-coupled";
        c.value = gap1;
        c.threshold = 0.0;
        c.pass = true;
        c.detail = "load-coupling asymmetry " + fmt(gap1) + "; reported, not bounded";
        rep.checks.push_back(c);
    }

    return rep;
}

}  // namespace cosserat
