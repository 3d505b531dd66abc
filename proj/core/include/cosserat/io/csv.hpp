#pragma once

#include <ostream>
#include <string>

#include "cosserat/solver.hpp"

namespace cosserat::io {

// Shortest representation that round-trips to the same double.
std::string format_double(double v);

// One row per node (row-major, y outer): x1, x2, the nine kinematic
// components, the twenty strain measures and the twenty resultants.
// Deterministic byte-for-byte output.
void write_fields_csv(std::ostream& os, const PlateSolution& sol);

}  // namespace cosserat::io
