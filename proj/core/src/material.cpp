#include "cosserat/material.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

const char* to_string(AdmissibilityClass cls) {
    switch (cls) {
        case AdmissibilityClass::PositiveDefinite: return "PositiveDefinite";
        case AdmissibilityClass::UniquenessOnly: return "UniquenessOnly";
        case AdmissibilityClass::Invalid: return "Invalid";
    }
    return "Invalid";
}

namespace {

bool all_finite(const CosseratModuli& m) {
    return std::isfinite(m.lambda) && std::isfinite(m.mu) && std::isfinite(m.mu_c) &&
           std::isfinite(m.beta) && std::isfinite(m.gamma) && std::isfinite(m.epsilon);
}

}  // namespace

AdmissibilityReport classify_material(const CosseratModuli& m) {
    if (!all_finite(m)) throw std::invalid_argument("classify_material: moduli must be finite");

    AdmissibilityReport rep;
    rep.cls = AdmissibilityClass::PositiveDefinite;
    auto strict = [&rep](bool ok, const char* name) {
        if (!ok) rep.violated.emplace_back(name);
    };
    strict(m.mu > 0.0, "mu > 0");
    strict(3.0 * m.lambda + 2.0 * m.mu > 0.0, "3*lambda + 2*mu > 0");
    strict(m.mu_c > 0.0, "mu_c > 0");
    strict(m.mu + m.mu_c > 0.0, "mu + mu_c > 0");
    strict(m.gamma > 0.0, "gamma > 0");
    strict(3.0 * m.beta + 2.0 * m.gamma > 0.0, "3*beta + 2*gamma > 0");
    strict(m.epsilon > 0.0, "epsilon > 0");

    if (!rep.violated.empty()) {
        const bool weak_ok = m.mu > 0.0 && 3.0 * m.lambda + 2.0 * m.mu > 0.0 && m.mu_c >= 0.0 &&
                             m.mu + m.mu_c > 0.0 && m.gamma > 0.0 &&
                             3.0 * m.beta + 2.0 * m.gamma > 0.0 && m.epsilon >= 0.0;
        rep.cls = weak_ok ? AdmissibilityClass::UniquenessOnly : AdmissibilityClass::Invalid;
    }
    return rep;
}

PrimedModuli primed_constants(const CosseratModuli& m) {
    if (!all_finite(m)) throw std::invalid_argument("primed_constants: moduli must be finite");
    auto require = [](bool ok, const char* name) {
        if (!ok)
            throw std::domain_error(std::string("primed_constants: singular modulus, requires ") +
                                    name);
    };
    require(m.mu != 0.0, "mu != 0");
    require(m.mu_c != 0.0, "mu_c != 0");
    require(m.gamma != 0.0, "gamma != 0");
    require(m.epsilon != 0.0, "epsilon != 0");
    require(3.0 * m.lambda + 2.0 * m.mu != 0.0, "3*lambda + 2*mu != 0");
    require(3.0 * m.beta + 2.0 * m.gamma != 0.0, "3*beta + 2*gamma != 0");

    PrimedModuli p;
    p.mu_p = 1.0 / (4.0 * m.mu);
    p.mu_c_p = 1.0 / (4.0 * m.mu_c);
    p.gamma_p = 1.0 / (4.0 * m.gamma);
    p.epsilon_p = 1.0 / (4.0 * m.epsilon);
    p.lambda_p = -m.lambda / (2.0 * m.mu * (3.0 * m.lambda + 2.0 * m.mu));
    p.beta_p = -m.beta / (2.0 * m.gamma * (3.0 * m.beta + 2.0 * m.gamma));
    return p;
}

std::vector<PrimedCheckEntry> primed_constants_check(const CosseratModuli& m) {
    const PrimedModuli p = primed_constants(m);
    // Alternate tabulated forms; beta' is written there with mu in place of
    // gamma in the leading denominator factor.
    const double lambda_tab = -m.lambda / (6.0 * m.mu * (m.lambda + 2.0 * m.mu / 3.0));
    const double beta_tab = -m.beta / (6.0 * m.mu * (m.beta + 2.0 * m.gamma / 3.0));
    std::vector<PrimedCheckEntry> out;
    auto push = [&out](const char* name, double derived, double tabulated) {
        out.push_back({name, derived, tabulated, std::abs(derived - tabulated)});
    };
    push("mu_p", p.mu_p, 1.0 / (4.0 * m.mu));
    push("mu_c_p", p.mu_c_p, 1.0 / (4.0 * m.mu_c));
    push("gamma_p", p.gamma_p, 1.0 / (4.0 * m.gamma));
    push("epsilon_p", p.epsilon_p, 1.0 / (4.0 * m.epsilon));
    push("lambda_p", p.lambda_p, lambda_tab);
    push("beta_p", p.beta_p, beta_tab);
    return out;
}

}  // namespace cosserat
