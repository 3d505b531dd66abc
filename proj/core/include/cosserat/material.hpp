#pragma once

#include <string>
#include <vector>

namespace cosserat {

// Isotropic micropolar solid. lambda/mu are the classical Lame constants,
// mu_c is the couple (rotational) shear modulus, and beta/gamma/epsilon
// govern the curvature (wryness) response.
struct CosseratModuli {
    double lambda = 0.0;
    double mu = 0.0;
    double mu_c = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double epsilon = 0.0;
};

enum class AdmissibilityClass { PositiveDefinite, UniquenessOnly, Invalid };

struct AdmissibilityReport {
    AdmissibilityClass cls = AdmissibilityClass::Invalid;
    // Strict inequalities that fail; empty iff PositiveDefinite.
    std::vector<std::string> violated;
};

const char* to_string(AdmissibilityClass cls);

// Strict (energy positive definite) set:
//   mu > 0, 3*lambda + 2*mu > 0, mu_c > 0, mu + mu_c > 0,
//   gamma > 0, 3*beta + 2*gamma > 0, epsilon > 0.
// UniquenessOnly relaxes mu_c and epsilon to >= 0.
// Throws std::invalid_argument on non-finite input.
AdmissibilityReport classify_material(const CosseratModuli& m);

// Constants of the inverse constitutive law.
struct PrimedModuli {
    double lambda_p = 0.0;
    double mu_p = 0.0;
    double mu_c_p = 0.0;
    double beta_p = 0.0;
    double gamma_p = 0.0;
    double epsilon_p = 0.0;
};

// Exact algebraic inversion of the forward law:
//   mu' = 1/(4 mu), mu_c' = 1/(4 mu_c), gamma' = 1/(4 gamma), eps' = 1/(4 eps),
//   lambda' = -lambda / (2 mu (3 lambda + 2 mu)),
//   beta'   = -beta   / (2 gamma (3 beta + 2 gamma)).
// Throws std::domain_error naming the constant when a denominator vanishes.
PrimedModuli primed_constants(const CosseratModuli& m);

// Cross-check of the inversion against an alternate tabulated closed form
// that carries the shear modulus in the beta' denominator. Kept as a
// diagnostic; the inversion above is authoritative (the round trip is the
// defining property).
struct PrimedCheckEntry {
    std::string name;
    double derived = 0.0;
    double tabulated = 0.0;
    double abs_diff = 0.0;
};
std::vector<PrimedCheckEntry> primed_constants_check(const CosseratModuli& m);

}  // namespace cosserat
