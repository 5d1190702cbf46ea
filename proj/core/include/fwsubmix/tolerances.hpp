#pragma once

namespace fwsubmix {

// Numerical tolerances shared across modules. Kept in one place so tests and
// the CLI agree on what "feasible" or "matches" means.
struct Tolerances {
  double membership = 1e-9;       // contains() slack for LMO vertices
  double iterate_membership = 1e-8;  // solver trajectories
  double gradient_check = 1e-4;   // relative error vs finite differences
  double bound_slack = 1e-6;      // absolute slack in guarantee checks
  double pivot = 1e-9;            // simplex pivot / reduced-cost threshold
  double projection = 1e-10;      // bisection width for capped-simplex projection
  double psd_clamp = 1e-9;        // eigenvalues in [-psd_clamp, 0) are clamped to 0
  double symmetry = 1e-12;        // max |H - H^T| entry
};

inline constexpr Tolerances kTolerances{};

}  // namespace fwsubmix
