#pragma once

#include <filesystem>
#include <iosfwd>

#include "fwsubmix/problem.hpp"

namespace fwsubmix {

// Plain-text instance format. Blank lines and lines starting with '#' are
// ignored; numbers are written with 17 significant digits so a round trip
// is exact.
//
//   fwsubmix-instance 1
//   lambda 0.5
//   flags g_monotone=1 g_nonneg=1 c_monotone=0 c_nonneg=1
//   smoothness 3.5                       (optional)
//   g quadratic
//   matrix H 2 2
//   -1 -0.5
//   -0.5 -1
//   vector h 2
//   1 1
//   scalar c 0
//   c logbarrier
//   scalar n 2
//   scalar scale 0.1
//   region box
//   vector lower 2
//   ...
//   end
//
// Function kinds and their blocks:
//   quadratic   matrix H, vector h, scalar c
//   softmax     matrix L
//   similarity  matrix L
//   doptimal    matrix Y
//   logbarrier  scalar n, scalar scale
// Region kinds:
//   box          vector lower, vector upper
//   cardinality  scalar n, scalar budget
//   polytope     matrix A, vector b, vector u
//
// A matrix block is a header `matrix <name> <rows> <cols>` followed by
// `rows` lines of `cols` values; a vector block is `vector <name> <len>`
// followed by one line of values.

void write_instance(std::ostream& out, const ProblemInstance& problem);
/// Throws ParseError carrying the 1-based line of the first problem.
ProblemInstance read_instance(std::istream& in);

void save_instance(const std::filesystem::path& path, const ProblemInstance& problem);
/// Throws ParseError (line 0) when the file cannot be opened.
ProblemInstance load_instance(const std::filesystem::path& path);

}  // namespace fwsubmix
