#include <algorithm>
#include <cmath>
#include <string>

#include "bfrg/error.hpp"
#include "bfrg/flow.hpp"
#include "bfrg/random.hpp"

namespace bfrg {

namespace {

bool enough_configurations(unsigned remaining, std::uint64_t min_configurations) {
  return remaining >= 63 || (std::uint64_t{1} << remaining) >= min_configurations;
}

double generic_band(const ClassifyConfig& c, unsigned remaining) {
  return c.generic_multiplier * std::exp2(-0.5 * static_cast<double>(remaining));
}

double composite_tau(const ClassifyConfig& c, unsigned remaining) {
  return std::max(c.tau_min, c.composite_c / std::sqrt(static_cast<double>(std::max(remaining, 1u))));
}

std::vector<const FlowStep*> evaluated_steps(const FlowTrace& trace, const ClassifyConfig& c) {
  std::vector<const FlowStep*> out;
  for (const auto& s : trace.steps) {
    if (s.step >= c.burn_in && enough_configurations(s.remaining_arity, c.min_configurations)) {
      out.push_back(&s);
    }
  }
  return out;
}

bool persistently_composite(const FlowTrace& trace, const ClassifyConfig& c) {
  const auto steps = evaluated_steps(trace, c);
  if (steps.empty()) return false;
  return std::all_of(steps.begin(), steps.end(), [&](const FlowStep* s) {
    return std::fabs(s->density - 0.5) > composite_tau(c, s->remaining_arity);
  });
}

// Some evaluated step exists in some trace, and every evaluated step sits in
// the exponential band.
bool within_generic_band(const std::vector<FlowTrace>& traces, const ClassifyConfig& c) {
  bool any = false;
  for (const auto& trace : traces) {
    for (const FlowStep* s : evaluated_steps(trace, c)) {
      any = true;
      if (std::fabs(s->density - 0.5) > generic_band(c, s->remaining_arity)) return false;
    }
  }
  return any;
}

void record_thresholds(ClassificationReport& r, const ClassifyConfig& c, unsigned cap) {
  r.thresholds["burn_in"] = c.burn_in;
  r.thresholds["generic_multiplier"] = c.generic_multiplier;
  r.thresholds["tau_min"] = c.tau_min;
  r.thresholds["composite_c"] = c.composite_c;
  r.thresholds["min_configurations"] = static_cast<double>(c.min_configurations);
  r.thresholds["annihilation_cap"] = cap;
  r.thresholds["trace_orders"] = c.trace_orders;
  r.thresholds["near_poly_max_xi"] = c.near_poly_max_xi;
  r.thresholds["C"] = c.bound.C;
  r.thresholds["alpha"] = c.bound.alpha;
  r.seed = c.sampling.seed;
}

}  // namespace

void validate(const ClassifyConfig& c) {
  if (!(c.generic_multiplier > 0)) throw InvalidArgument("generic_multiplier must be positive");
  if (!(c.tau_min >= 0) || !(c.composite_c >= 0)) throw InvalidArgument("composite thresholds must be >= 0");
  if (c.tau_min >= 0.5) throw InvalidArgument("tau_min >= 1/2 can never be exceeded");
  if (c.min_configurations < 1) throw InvalidArgument("min_configurations must be >= 1");
  if (c.trace_orders < 1) throw InvalidArgument("trace_orders must be >= 1");
  if (c.sampling.random_orders < 1) throw InvalidArgument("sampling needs at least one order");
  if (!(c.bound.C > 0) || !(c.bound.alpha > 0)) throw InvalidArgument("bound constants must be positive");
}

ClassificationReport classify(const TruthTable& t, const ClassifyConfig& config) {
  validate(config);
  const unsigned n = t.arity();
  const unsigned cap = config.annihilation_cap.value_or(n > 0 ? n - 1 : 0);
  if (cap > n) throw InvalidArgument("annihilation cap exceeds arity");

  ClassificationReport report;
  record_thresholds(report, config, cap);

  // (1) annihilation over sampled orders
  const auto annihilation = annihilation_depth(t, config.sampling, cap);
  report.orders_checked = annihilation.orders_checked;
  report.orders_exhaustive = annihilation.exhaustive;
  report.annihilation_depth = annihilation.depth;

  for (unsigned i = 0; i < config.trace_orders; ++i) {
    Rng rng(derive_seed(config.sampling.seed, 1000 + i));
    report.traces.push_back(empirical_flow(t, DecimationOrder(n, rng.permutation_prefix(n, n))));
  }

  if (annihilation.depth) {
    report.label = PhaseLabel::kAnnihilated;
    report.xi = *annihilation.depth == 0 ? 0 : *annihilation.depth - 1;
    report.reason = "every sampled order reaches the zero function after " +
                    std::to_string(*annihilation.depth) + " decimations";
    return report;
  }

  // (2) persistent polynomial-size deviation from 1/2
  for (const auto& trace : report.traces) {
    if (persistently_composite(trace, config)) {
      report.label = PhaseLabel::kCompositeSuspect;
      report.reason = "a trace deviates from 1/2 by more than tau at every evaluated step";
      return report;
    }
  }

  // (3) sparse remainder: screen with the sieve, then look for a witness
  for (unsigned xi = 1; xi <= config.near_poly_max_xi && xi + 1 <= n; ++xi) {
    const unsigned remaining = n - xi - 1;
    if (!enough_configurations(remaining, config.min_configurations)) break;
    const auto sieve = derivative_sieve(t, xi, config.sampling, config.bound);
    const double sieve_density = sieve.sieve_density->value();
    if (sieve_density >= 0.5 - generic_band(config, remaining)) continue;
    const auto witness = monomial_count(n, xi) <= kExhaustiveMaxMonomials
                             ? exhaustive_nearest_polynomial(t, xi, config.bound)
                             : anf_truncation(t, xi, config.bound);
    if (witness.meets_bound) {
      report.label = PhaseLabel::kNearPolynomial;
      report.xi = xi;
      report.remainder_density = witness.remainder_density;
      report.detector = witness;
      report.reason = "sieve density after xi+1 decimations is below the generic band and the " +
                      std::string(method_name(witness.method)) + " witness meets the bound";
      return report;
    }
  }

  // (4) exponentially small deviations everywhere
  if (within_generic_band(report.traces, config)) {
    report.label = PhaseLabel::kGeneric;
    report.reason = "all evaluated densities lie within the exponential band around 1/2";
    return report;
  }

  report.label = PhaseLabel::kUnclassified;
  report.reason = "no rule of the decision list applied";
  return report;
}

ClassificationReport classify(const SymmetricFunction& f, const ClassifyConfig& config) {
  validate(config);
  const unsigned n = f.arity();
  const unsigned cap = config.annihilation_cap.value_or(n > 0 ? n - 1 : 0);
  if (cap > n) throw InvalidArgument("annihilation cap exceeds arity");

  ClassificationReport report;
  record_thresholds(report, config, cap);
  report.thresholds["symmetric_steps"] = config.symmetric_steps;
  report.orders_checked = 1;
  report.orders_exhaustive = true;  // every order gives the same symmetric result

  std::optional<unsigned> depth;
  SymmetricFunction current = f;
  for (unsigned m = 0; m <= cap; ++m) {
    if (m > 0) current = sym_decimate(current);
    if (current.is_zero()) {
      depth = m;
      break;
    }
  }
  report.annihilation_depth = depth;
  report.traces.push_back(sym_flow(f, std::min(config.symmetric_steps, n)).trace);

  if (depth) {
    report.label = PhaseLabel::kAnnihilated;
    report.xi = *depth == 0 ? 0 : *depth - 1;
    report.reason = "the symmetric flow reaches zero after " + std::to_string(*depth) + " decimations";
    return report;
  }
  if (persistently_composite(report.traces.front(), config)) {
    report.label = PhaseLabel::kCompositeSuspect;
    report.reason = "the symmetric trace deviates from 1/2 by more than tau at every evaluated step";
    return report;
  }
  // No witness search on symmetric inputs: arities here are usually far above
  // what a table-based detector can hold.
  if (within_generic_band(report.traces, config)) {
    report.label = PhaseLabel::kGeneric;
    report.reason = "all evaluated densities lie within the exponential band around 1/2";
    return report;
  }
  report.label = PhaseLabel::kUnclassified;
  report.reason = "no rule of the decision list applied";
  return report;
}

}  // namespace bfrg
