#pragma once

#include <cstdint>
#include <optional>

#include "bfrg/binomial.hpp"

namespace bfrg {

/// log2 of the number of Boolean functions of n inputs, i.e. 2^n.
long double log2_num_functions(unsigned n);

/// Binomial arguments above this switch from exact integers to lgamma.
inline constexpr std::uint64_t kExactBinomialMaxArgument = 1'000'000;

struct PolynomialCount {
  /// sum_{j<=xi} C(n, j) = log2 of the number of degree-<=xi polynomials.
  long double log2_count = 0;
  /// e * (n/xi)^xi, the large-n surrogate; display only. Empty when xi = 0.
  std::optional<long double> asymptotic;
  bool exact = true;
};

PolynomialCount log2_num_polynomials(std::uint64_t n, std::uint64_t xi);

/// Exact monomial count sum_{j<=xi} C(n, j).
BigInt num_monomials(std::uint64_t n, std::uint64_t xi);

/// Exact sums over Omega = 2^n are used up to this n; above it, the bound.
inline constexpr unsigned kExactPerturbationMaxArity = 12;

struct PerturbationCount {
  /// Phi = floor(C * 2^(n - alpha xi / log2 n)), the number of alterable outputs.
  long double phi = 0;
  /// log2 Omega = n.
  long double log2_omega = 0;
  /// Upper bound on log2 sum_{s=1..Phi} C(Omega, s):
  /// min(Omega, log2 C(Omega, min(Phi, Omega/2)) + log2 Phi).
  long double log2_bound = 0;
  /// log2 of e (Omega/Phi)^Phi; display only.
  long double asymptotic = 0;
  /// Exact log2 of the sum when n <= kExactPerturbationMaxArity.
  std::optional<long double> exact;
};

/// Throws InvalidArgument when n < 2 or Phi > Omega.
PerturbationCount log2_perturbation_count(unsigned n, unsigned xi, double C, double alpha);

struct SeparationMargin {
  long double log2F = 0;
  long double log2M = 0;
  /// log2F + log2M - 2^n; negative certifies that the near-polynomial count
  /// is below the total number of functions.
  long double margin = 0;
};

SeparationMargin separation_margin(unsigned n, unsigned xi, double C, double alpha);

struct AdjustmentEstimate {
  /// N - M + 1 + M log2(N/M)
  long double exponent = 0;
  bool exceeds = false;  ///< exponent > N
};

AdjustmentEstimate naive_adjustment_estimate(unsigned n, unsigned m);

}  // namespace bfrg
