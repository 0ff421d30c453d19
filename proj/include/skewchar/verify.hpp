#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skewchar/skew.hpp"

namespace skewchar {

// Multiplicity-free answers of the three legs for one diagram. The
// brute-force leg is absent above the cell budget.
struct LegAnswers {
  bool tree = false;
  bool paths = false;
  std::optional<bool> brute_force;

  bool agree() const {
    return tree == paths && (!brute_force || *brute_force == tree);
  }
};

struct Disagreement {
  SkewDiagram diagram;
  LegAnswers answers;
};

struct VerifyReport {
  std::string space_description;
  std::size_t instances_checked = 0;
  std::size_t brute_force_checked = 0;
  std::vector<Disagreement> disagreements;
  std::chrono::duration<double> wall_time{};

  bool certified() const { return disagreements.empty(); }
};

inline constexpr int kDefaultMaxCells = 14;

LegAnswers evaluate_legs(const SkewDiagram& d, int max_cells);

// Checks every α ⊆ λ ⊆ (W^H) with λ non-empty. Instances are split across
// `workers` threads (0 = hardware concurrency); the report does not depend
// on the split.
VerifyReport verify_sweep(int max_width, int max_height,
                          int max_cells = kDefaultMaxCells,
                          unsigned workers = 0);

}  // namespace skewchar
