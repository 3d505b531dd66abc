#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cosserat/hpr.hpp"
#include "cosserat/solver.hpp"

namespace cosserat {

// A scalar field with analytic first and second derivatives, the building
// block for manufactured solutions.
struct AnalyticField {
    std::function<double(double, double)> value;
    std::function<Eigen::Vector2d(double, double)> grad;
    std::function<Eigen::Matrix2d(double, double)> hess;
};
using AnalyticSolution = std::array<AnalyticField, 9>;

// Smooth trigonometric/polynomial fields exercising every kinematic slot.
AnalyticSolution trig_solution(double a, double b);

KinematicSet analytic_kinematics(const AnalyticSolution& sol, double x, double y);
StrainSet analytic_strain(const AnalyticSolution& sol, double x, double y);

// Forcing rows that make `sol` an exact solution of the model with zero
// face loads: f = c0 S - div(c1 S) evaluated analytically.
std::array<ScalarField, 9> manufactured_forcing(const CosseratModuli& m, double h,
                                                PlateModel model, const AnalyticSolution& sol);

// Per-field errors of a numerical solution against the analytic one.
struct FieldErrors {
    std::array<double, 9> linf{};
    std::array<double, 9> l2{};
    double max_linf = 0.0;
    double max_l2 = 0.0;
};
FieldErrors compare_solution(const PlateSolution& num, const AnalyticSolution& exact);

// Least-squares convergence rate of max-field L2 errors against grid
// spacing for a sequence of square grids.
struct OrderStudy {
    std::vector<int> sizes;
    std::vector<double> errors;
    double rate = 0.0;
};
OrderStudy mms_order_study(const CosseratModuli& m, double h, double a, double b,
                           PlateModel model, const std::vector<int>& sizes);

// Balance-equation residuals sampled at cell centers through biquadratic
// interpolation of the resultant fields: an off-stencil measure that decays
// at second order for smooth problems (node-point residuals are zero by
// construction of the solve).
struct OffgridResidual {
    std::array<double, 9> rms{};
    double max_rms = 0.0;
};
OffgridResidual offgrid_residual(const PlateProblem& problem, const PlateSolution& sol);

// Work reciprocity between two solved load cases sharing a problem setup:
// relative asymmetry of int S_f . E_g dA against int S_g . E_f dA. Exact
// when the load-coupling block vanishes (lambda = beta = 0); reported
// otherwise.
double reciprocity_gap(const PlateSolution& sol_f, const PlateSolution& sol_g);

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;      // measured quantity
    double threshold = 0.0;  // pinned acceptance bound
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct VerifyOptions {
    bool quick = false;  // smaller grids and shorter sweeps
};

// End-to-end verification pipeline: constitutive consistency, kernel
// geometry, manufactured-solution convergence, off-grid residual order,
// decoupling sweep, classical limit, stationarity, reconstruction and
// reciprocity.
VerificationReport run_verification(const VerifyOptions& opt = {});

}  // namespace cosserat
