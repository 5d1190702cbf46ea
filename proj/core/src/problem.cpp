#include "fwsubmix/problem.hpp"

#include <string>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

ProblemInstance::ProblemInstance(ObjectivePair objective, FeasibleRegion region)
    : objective_(std::move(objective)), region_(std::move(region)) {
  if (objective_.dimension() != region_.dimension()) {
    throw DimensionError("objective has dimension " + std::to_string(objective_.dimension()) +
                         " but region has dimension " + std::to_string(region_.dimension()));
  }
}

}  // namespace fwsubmix
