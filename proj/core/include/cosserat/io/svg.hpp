#pragma once

#include <ostream>
#include <string>

#include "cosserat/grid.hpp"

namespace cosserat::io {

// Filled-cell rendering of a nodal field with a fixed eleven-level
// diverging ramp between the field minimum and maximum (cell color from the
// mean of its four corners). Deterministic byte-for-byte output.
void write_field_svg(std::ostream& os, const FieldGrid& g, const Field& f,
                     const std::string& title);

}  // namespace cosserat::io
