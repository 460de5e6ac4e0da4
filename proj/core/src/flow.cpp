#include "bfrg/flow.hpp"

#include <algorithm>
#include <cmath>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

void check_probability(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw InvalidArgument("p0 must lie in [0, 1]");
}

}  // namespace

double analytic_density(double p0, unsigned ell) {
  check_probability(p0);
  const double q = 1.0 - 2.0 * p0;
  return 0.5 * (1.0 - std::pow(q, std::ldexp(1.0, static_cast<int>(std::min(ell, 2000u)))));
}

double iterated_density(double p0, unsigned ell) {
  check_probability(p0);
  double p = p0;
  for (unsigned i = 0; i < ell; ++i) p = 2.0 * p * (1.0 - p);
  return p;
}

double small_p_prediction(double p0, unsigned ell) {
  if (!(p0 >= 0.0)) throw InvalidArgument("p0 must be non-negative");
  return std::min(1.0, std::ldexp(p0, static_cast<int>(std::min(ell, 2000u))));
}

FlowTrace empirical_flow(const TruthTable& t, const DecimationOrder& order) {
  if (order.arity() != t.arity()) throw ArityMismatch(t.arity(), order.arity());
  FlowTrace trace;
  trace.start_arity = t.arity();
  const Density d0 = t.density();
  trace.steps.push_back({0, t.arity(), std::nullopt, d0, d0.value()});
  const auto labels = positional_labels(order);
  TruthTable current = t;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    current = decimate(current, labels[i]);
    const Density d = current.density();
    trace.steps.push_back(
        {static_cast<unsigned>(i + 1), current.arity(), order.vars()[i], d, d.value()});
  }
  return trace;
}

const char* phase_name(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::kGeneric:
      return "GENERIC";
    case PhaseLabel::kAnnihilated:
      return "ANNIHILATED";
    case PhaseLabel::kCompositeSuspect:
      return "COMPOSITE_SUSPECT";
    case PhaseLabel::kNearPolynomial:
      return "NEAR_POLYNOMIAL";
    case PhaseLabel::kUnclassified:
      return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

std::string ClassificationReport::label_string() const {
  std::string s = phase_name(label);
  if (xi && (label == PhaseLabel::kAnnihilated || label == PhaseLabel::kNearPolynomial)) {
    s += "(" + std::to_string(*xi) + ")";
  }
  return s;
}

}  // namespace bfrg
