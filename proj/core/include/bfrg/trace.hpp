#pragma once

#include <optional>
#include <vector>

#include "bfrg/truth_table.hpp"

namespace bfrg {

/// One row of a flow: the density after `step` decimations.
struct FlowStep {
  unsigned step = 0;
  unsigned remaining_arity = 0;
  /// Original label of the variable removed at this step; empty at step 0
  /// and for symmetric steps.
  std::optional<unsigned> decimated_var;
  /// Exact ratio for table flows; empty for symmetric flows.
  std::optional<Density> exact;
  double density = 0.0;
};

/// Sequence p_0, p_1, ... of densities along a decimation sequence.
struct FlowTrace {
  unsigned start_arity = 0;
  bool symmetric = false;
  std::vector<FlowStep> steps;

  std::vector<double> densities() const {
    std::vector<double> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.density);
    return out;
  }
};

}  // namespace bfrg
