#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "cosserat/cosserat3d.hpp"
#include "cosserat/solver.hpp"

namespace {

cosserat::CosseratModuli moduli() {
    cosserat::CosseratModuli m;
    m.lambda = 2.0;
    m.mu = 1.5;
    m.mu_c = 0.8;
    m.beta = 0.4;
    m.gamma = 0.9;
    m.epsilon = 0.35;
    return m;
}

cosserat::PlateProblem bending_problem(int n) {
    cosserat::PlateProblem pb;
    pb.moduli = moduli();
    pb.a = 1.0;
    pb.b = 1.2;
    pb.h = 0.1;
    pb.nx = pb.ny = n;
    pb.loads.sigma_top = [](double x, double y) {
        return 0.5 * std::sin(M_PI * x) * std::sin(M_PI * y / 1.2);
    };
    pb.loads.sigma_bottom = [](double x, double y) {
        return -0.5 * std::sin(M_PI * x) * std::sin(M_PI * y / 1.2);
    };
    pb.edges = cosserat::all_edges(cosserat::BCKind::SimplySupported);
    return pb;
}

}  // namespace

static void BM_HookeRoundTrip(benchmark::State& state) {
    const cosserat::CosseratModuli m = moduli();
    cosserat::StrainPair s;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            s.gamma(i, j) = u(rng);
            s.chi(i, j) = u(rng);
        }
    for (auto _ : state) {
        const cosserat::StrainPair back = hooke_inverse(m, hooke_forward(m, s));
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_HookeRoundTrip);

static void BM_ComplianceBuild(benchmark::State& state) {
    const cosserat::CosseratModuli m = moduli();
    for (auto _ : state) {
        cosserat::ComplianceMap map(m, 0.1);
        benchmark::DoNotOptimize(map);
    }
}
BENCHMARK(BM_ComplianceBuild);

static void BM_ComplianceApply(benchmark::State& state) {
    const cosserat::ComplianceMap map(moduli(), 0.1);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cosserat::StressSet S;
    for (int k = 0; k < 20; ++k) S[k] = u(rng);
    cosserat::PlateLoads l{0.5, -0.5, 0.1, -0.1};
    for (auto _ : state) {
        const cosserat::StrainSet E = map.apply(S, l);
        benchmark::DoNotOptimize(E);
    }
}
BENCHMARK(BM_ComplianceApply);

static void BM_SectionEnergyClosed(benchmark::State& state) {
    const cosserat::ComplianceMap map(moduli(), 0.1);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cosserat::StressSet S;
    for (int k = 0; k < 20; ++k) S[k] = u(rng);
    cosserat::PlateLoads l{0.5, -0.5, 0.1, -0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosserat::energy_density(map, S, l).value);
    }
}
BENCHMARK(BM_SectionEnergyClosed);

static void BM_SectionEnergyQuadrature(benchmark::State& state) {
    const cosserat::CosseratModuli m = moduli();
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cosserat::StressSet S;
    for (int k = 0; k < 20; ++k) S[k] = u(rng);
    cosserat::PlateLoads l{0.5, -0.5, 0.1, -0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosserat::energy_density_quadrature(m, 0.1, S, l));
    }
}
BENCHMARK(BM_SectionEnergyQuadrature);

static void BM_StrainOperator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const cosserat::FieldGrid g = cosserat::FieldGrid::over_rectangle(1.0, 1.2, n, n);
    cosserat::KinematicFields U = cosserat::make_gridded_set<9>(g);
    for (int f = 0; f < 9; ++f)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                U.comp[f][g.idx(i, j)] = std::sin(0.3 * f + g.x(i)) * std::cos(g.y(j));
    for (auto _ : state) {
        const cosserat::StrainFields E = cosserat::strain_from_kinematics(U);
        benchmark::DoNotOptimize(E);
    }
    state.SetComplexityN(n * n);
}
BENCHMARK(BM_StrainOperator)->Arg(33)->Arg(65)->Arg(129)->Complexity(benchmark::oN);

static void BM_AssembleOperator(benchmark::State& state) {
    const cosserat::PlateProblem pb = bending_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosserat::assembled_operator(pb, cosserat::PlateModel::Full));
    }
}
BENCHMARK(BM_AssembleOperator)->Arg(17)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

static void BM_Solve(benchmark::State& state) {
    const cosserat::PlateProblem pb = bending_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const cosserat::PlateSolution sol = cosserat::solve(pb);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_Solve)->Arg(17)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
    const cosserat::PlateProblem pb = bending_problem(33);
    const cosserat::PlateSolution sol = cosserat::solve(pb);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosserat::reconstruct_3d(pb, sol));
    }
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
