#include "cosserat/io/svg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "cosserat/io/csv.hpp"

namespace cosserat::io {

namespace {

constexpr std::array<const char*, 11> kRamp = {
    "#313695", "#4575b4", "#74add1", "#abd9e9", "#e0f3f8", "#ffffbf",
    "#fee090", "#fdae61", "#f46d43", "#d73027", "#a50026"};

}  // namespace

void write_field_svg(std::ostream& os, const FieldGrid& g, const Field& f,
                     const std::string& title) {
    if (static_cast<int>(f.size()) != g.size())
        throw std::invalid_argument("write_field_svg: field size does not match the grid");

    double lo = f[0], hi = f[0];
    for (double v : f) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = (hi > lo) ? (hi - lo) : 1.0;

    const double plot_w = 480.0;
    const double lx = g.dx * (g.nx - 1), ly = g.dy * (g.ny - 1);
    const double scale = plot_w / lx;
    const double plot_h = ly * scale;
    const double margin = 40.0;
    const double width = plot_w + 2 * margin;
    const double height = plot_h + 2 * margin + 20.0;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width)
       << "\" height=\"" << format_double(height) << "\" viewBox=\"0 0 " << format_double(width)
       << ' ' << format_double(height) << "\">\n";
    os << "<title>" << title << "</title>\n";
    os << "<text x=\"" << format_double(margin) << "\" y=\"24\" font-family=\"monospace\" "
          "font-size=\"14\">"
       << title << "  [" << format_double(lo) << ", " << format_double(hi) << "]</text>\n";

    for (int j = 0; j + 1 < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i) {
            const double mean = 0.25 * (f[g.idx(i, j)] + f[g.idx(i + 1, j)] +
                                        f[g.idx(i, j + 1)] + f[g.idx(i + 1, j + 1)]);
            int level = static_cast<int>((mean - lo) / span * 11.0);
            level = std::clamp(level, 0, 10);
            // y axis points up in the plate frame, down in svg
            const double px = margin + (g.x(i) - g.x0) * scale;
            const double py = margin + 20.0 + (ly - (g.y(j + 1) - g.y0)) * scale;
            os << "<rect x=\"" << format_double(px) << "\" y=\"" << format_double(py)
               << "\" width=\"" << format_double(g.dx * scale) << "\" height=\""
               << format_double(g.dy * scale) << "\" fill=\"" << kRamp[level] << "\"/>\n";
        }
    os << "</svg>\n";
}

}  // namespace cosserat::io
