#include "fwsubmix/bench/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "fwsubmix/errors.hpp"

namespace fwsubmix::bench {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const std::vector<Series>& series, std::size_t rows) {
  out << "iteration";
  for (const auto& s : series) out << ',' << s.name;
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    out << r + 1;
    for (const auto& s : series) {
      out << ',';
      if (r < s.values.size() && s.values[r]) {
        out << format_value(*s.values[r]);
      } else {
        out << "n/a";
      }
    }
    out << '\n';
  }
}

void write_grid_vector_csv(std::ostream& out, const Vector& x, std::size_t side) {
  if (static_cast<std::size_t>(x.size()) != side * side) {
    throw DimensionError("grid vector has " + std::to_string(x.size()) + " entries, expected " +
                         std::to_string(side * side));
  }
  out << "index,x,y,value\n";
  for (std::size_t k = 0; k < side * side; ++k) {
    out << k << ',' << k % side << ',' << k / side << ','
        << format_value(x[static_cast<Eigen::Index>(k)]) << '\n';
  }
}

std::string render_heatmap_svg(const Vector& x, std::size_t side, int cell_px) {
  if (static_cast<std::size_t>(x.size()) != side * side) {
    throw DimensionError("heatmap needs side^2 entries");
  }
  const auto extent = static_cast<int>(side) * cell_px;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << extent << "\" height=\""
      << extent << "\" viewBox=\"0 0 " << extent << ' ' << extent << "\">\n";
  for (std::size_t k = 0; k < side * side; ++k) {
    const double v = std::clamp(x[static_cast<Eigen::Index>(k)], 0.0, 1.0);
    const int shade = static_cast<int>(std::lround(255.0 * (1.0 - v)));
    const auto col = static_cast<int>(k % side);
    const auto row = static_cast<int>(side - 1 - k / side);
    char fill[8];
    std::snprintf(fill, sizeof fill, "#%02x%02x%02x", shade, shade, shade);
    svg << "  <rect x=\"" << col * cell_px << "\" y=\"" << row * cell_px << "\" width=\""
        << cell_px << "\" height=\"" << cell_px << "\" fill=\"" << fill << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fwsubmix::bench
