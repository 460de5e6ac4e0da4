#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfrg/detector.hpp"
#include "bfrg/rg.hpp"
#include "bfrg/symmetric.hpp"
#include "bfrg/trace.hpp"
#include "bfrg/truth_table.hpp"

namespace bfrg {

/// Closed form p_l = (1 - (1 - 2 p0)^(2^l)) / 2.
double analytic_density(double p0, unsigned ell);

/// The same quantity by iterating p <- 2 p (1 - p) ell times.
double iterated_density(double p0, unsigned ell);

/// min(2^l * p0, 1); only meaningful while the result is << 1.
double small_p_prediction(double p0, unsigned ell);

/// Exact densities of t and of each successive decimation along `order`.
FlowTrace empirical_flow(const TruthTable& t, const DecimationOrder& order);

enum class PhaseLabel { kGeneric, kAnnihilated, kCompositeSuspect, kNearPolynomial, kUnclassified };

const char* phase_name(PhaseLabel label);

/*! Thresholds for classify(). Defaults are calibrated on the families module;
  every value used is echoed into the report. */
struct ClassifyConfig {
  /// Steps skipped before the band tests.
  unsigned burn_in = 2;
  /// GENERIC band half-width: multiplier * 2^(-(remaining arity)/2).
  double generic_multiplier = 4.0;
  /// COMPOSITE threshold tau = max(tau_min, composite_c / sqrt(remaining arity)).
  double tau_min = 0.02;
  double composite_c = 1.0;
  /// Steps with fewer than this many configurations left are not used.
  std::uint64_t min_configurations = 64;
  /// Decimation traces used for the band tests.
  unsigned trace_orders = 4;
  /// Cap on the annihilation search; default arity - 1, so that the
  /// (always-true) degree <= n - 1 of an even-weight table is not reported.
  std::optional<unsigned> annihilation_cap;
  SamplingPolicy sampling;
  /// Steps taken on symmetric inputs.
  unsigned symmetric_steps = 32;
  /// Largest xi tried for NEAR_POLYNOMIAL.
  unsigned near_poly_max_xi = 3;
  BoundParams bound;
};

/// Throws InvalidArgument for inconsistent settings.
void validate(const ClassifyConfig& config);

struct ClassificationReport {
  PhaseLabel label = PhaseLabel::kUnclassified;
  /// Degree for ANNIHILATED and NEAR_POLYNOMIAL.
  std::optional<unsigned> xi;
  std::optional<Density> remainder_density;
  std::map<std::string, double> thresholds;
  std::vector<FlowTrace> traces;
  std::optional<DecompositionReport> detector;
  std::optional<unsigned> annihilation_depth;
  std::size_t orders_checked = 0;
  bool orders_exhaustive = false;
  std::uint64_t seed = 0;
  std::string reason;

  /// "ANNIHILATED(3)", "NEAR_POLYNOMIAL(2)", "GENERIC", ...
  std::string label_string() const;
};

ClassificationReport classify(const TruthTable& t, const ClassifyConfig& config = {});
ClassificationReport classify(const SymmetricFunction& f, const ClassifyConfig& config = {});

}  // namespace bfrg
