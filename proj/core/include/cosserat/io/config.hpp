#pragma once

#include <string>

#include "cosserat/solver.hpp"

namespace cosserat::io {

struct RunConfig {
    PlateProblem problem;
    PlateModel model = PlateModel::Full;
};

// Strict JSON config: unknown keys are rejected anywhere in the document,
// as are missing required blocks. Throws std::invalid_argument with the
// offending path in the message.
//
//   {
//     "material": {"lambda":1, "mu":1, "mu_c":0.5,
//                  "beta":0.6, "gamma":1.2, "epsilon":0.8},
//     "geometry": {"a":1, "b":1.2, "h":0.1, "nx":33, "ny":33},
//     "loads":    {"sigma_top": 1.0,
//                  "sigma_bottom": {"type":"sinusoid","amplitude":0.5,"m":1,"n":2},
//                  "mu_top": 0, "mu_bottom": 0},
//     "bc":       {"left":"clamped", "right":"free",
//                  "bottom":"simply_supported",
//                  "top": {"bending":{"kind":"traction","data":[0,0,1,0,0,0]},
//                          "twisting":"clamped"}},
//     "run":      {"model":"full"}
//   }
//
// Load entries are numbers (uniform) or sinusoid products
// amplitude * sin(m pi x / a) * sin(n pi y / b). Edge strings "clamped"
// (displacement, zero data), "free" (traction, zero data) and
// "simply_supported" apply to both groups; the object form sets the groups
// separately and may prescribe constant data slots. "loads", "bc" and
// "run" are optional; material and geometry are required.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

const char* model_name(PlateModel model);

}  // namespace cosserat::io
