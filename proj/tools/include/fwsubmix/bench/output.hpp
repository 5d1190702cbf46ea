#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fwsubmix/point.hpp"

namespace fwsubmix::bench {

/// One CSV column. A missing entry (or an empty `values`) prints as n/a.
struct Series {
  std::string name;
  std::vector<std::optional<double>> values;
};

/// %.12g
std::string format_value(double v);

/// Header `iteration,<name>...`, then rows 1..rows.
void write_trajectory_csv(std::ostream& out, const std::vector<Series>& series, std::size_t rows);

/// `index,x,y,value` for a vector laid out on a side x side grid (point k at
/// column k % side, row k / side).
void write_grid_vector_csv(std::ostream& out, const Vector& x, std::size_t side);

/// side x side squares, grayscale linear in [0,1] with 1 as black. Row 0 of
/// the grid is drawn at the bottom so the origin sits in the lower-left
/// corner.
std::string render_heatmap_svg(const Vector& x, std::size_t side, int cell_px = 20);

}  // namespace fwsubmix::bench
