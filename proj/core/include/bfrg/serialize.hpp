#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bfrg/counting.hpp"
#include "bfrg/detector.hpp"
#include "bfrg/flow.hpp"
#include "bfrg/symmetric.hpp"

namespace bfrg {

/*! FlowTrace CSV.

  Table flows: step,remaining_arity,decimated_var,density_num,density_den
  Symmetric flows: step,remaining_arity,decimated_var,density_real
  with decimated_var empty at step 0 and SYMMETRIC on symmetric steps.
  An analytic_density column is appended when `analytic_p0` is given.
*/
void write_trace_csv(std::ostream& out, const FlowTrace& trace,
                     std::optional<double> analytic_p0 = std::nullopt);
/// Reads one block; a blank line ends it, so concatenated blocks (each with
/// its own header) can be read by calling this repeatedly.
FlowTrace read_trace_csv(std::istream& in);

std::string trace_to_json(const FlowTrace& trace);
FlowTrace trace_from_json(const std::string& json);

/// {label, xi, thresholds, traces, ...}
std::string report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const std::string& json);

/// {xi, method, witness_monomials, remainder_num, remainder_den, C, alpha, meets_bound, ...}
std::string decomposition_to_json(const DecompositionReport& report);
DecompositionReport decomposition_from_json(const std::string& json);

std::string symmetric_flow_to_json(const SymmetricFlow& flow);

/// n,xi,C,alpha,log2F,log2M,margin
struct CountRow {
  unsigned n = 0;
  unsigned xi = 0;
  double C = 1.0;
  double alpha = 1.0;
  SeparationMargin margin;
};
void write_count_csv(std::ostream& out, const std::vector<CountRow>& rows);
std::vector<CountRow> read_count_csv(std::istream& in);

}  // namespace bfrg
