#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyper/geometry.hpp"

namespace hyper {

/// Counterexample (or, for passing existence checks, the exhibited point)
/// attached to a CheckResult.
struct Witness {
  std::vector<std::pair<std::string, Point>> inputs;
  std::vector<std::pair<std::string, Scalar>> scalars;
  std::optional<Point> point;
  std::string note;
};

struct CheckResult {
  std::string axiom_id;
  bool passed = false;
  // Present iff !passed.
  std::optional<Witness> witness;
  // Point exhibited by a passing existence check.
  std::optional<Point> found;
  std::size_t samples_used = 0;

  static CheckResult pass(std::string id, std::optional<Point> found = std::nullopt,
                          std::size_t samples = 0) {
    return {std::move(id), true, std::nullopt, found, samples};
  }
  static CheckResult fail(std::string id, Witness w, std::size_t samples = 0) {
    return {std::move(id), false, std::move(w), std::nullopt, samples};
  }
};

}  // namespace hyper
