#include "bfrg/counting.hpp"

#include <cmath>
#include <string>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

constexpr long double kLog2E = 1.442695040888963407359924681001892137L;

}  // namespace

long double log2_num_functions(unsigned n) { return std::ldexp(1.0L, static_cast<int>(n)); }

BigInt num_monomials(std::uint64_t n, std::uint64_t xi) {
  BigInt total = 0;
  BigInt c = 1;
  for (std::uint64_t j = 0; j <= xi && j <= n; ++j) {
    if (j > 0) c = c * (n - j + 1) / j;
    total += c;
  }
  return total;
}

PolynomialCount log2_num_polynomials(std::uint64_t n, std::uint64_t xi) {
  if (xi > n) throw InvalidArgument("degree bound exceeds arity");
  PolynomialCount out;
  if (n <= kExactBinomialMaxArgument) {
    out.log2_count = num_monomials(n, xi).convert_to<long double>();
  } else {
    // sum of C(n, j) in the natural-log domain, scaled by the largest term.
    out.exact = false;
    const long double nn = static_cast<long double>(n);
    std::vector<long double> logs;
    long double largest = -INFINITY;
    for (std::uint64_t j = 0; j <= xi; ++j) {
      const long double jj = static_cast<long double>(j);
      logs.push_back(std::lgamma(nn + 1) - std::lgamma(jj + 1) - std::lgamma(nn - jj + 1));
      largest = std::max(largest, logs.back());
    }
    CompensatedSum sum;
    for (auto l : logs) sum.add(std::exp(l - largest));
    out.log2_count = std::exp(largest) * sum.value();
  }
  if (xi > 0) {
    out.asymptotic = std::exp(1.0L) *
                     std::pow(static_cast<long double>(n) / static_cast<long double>(xi), static_cast<long double>(xi));
  }
  return out;
}

PerturbationCount log2_perturbation_count(unsigned n, unsigned xi, double C, double alpha) {
  if (n < 2) throw InvalidArgument("perturbation count needs n >= 2");
  if (!(C > 0) || !(alpha > 0)) throw InvalidArgument("C and alpha must be positive");
  PerturbationCount out;
  const long double log_n = std::log2(static_cast<long double>(n));
  const long double log2_phi_real = std::log2(static_cast<long double>(C)) + n -
                                    static_cast<long double>(alpha) * xi / log_n;
  if (log2_phi_real > n) {
    throw InvalidArgument("Phi exceeds Omega (2^" + std::to_string(n) + ")");
  }
  const long double omega = std::ldexp(1.0L, static_cast<int>(n));
  out.log2_omega = n;
  out.phi = std::floor(std::exp2(log2_phi_real));
  if (out.phi < 1) {
    out.log2_bound = -INFINITY;
    out.asymptotic = -INFINITY;
    if (n <= kExactPerturbationMaxArity) out.exact = -INFINITY;
    return out;
  }

  const long double dominant = std::min(out.phi, std::floor(omega / 2));
  out.log2_bound = std::min(omega, log2_binomial_real(omega, dominant) + std::log2(out.phi));
  out.asymptotic = kLog2E + out.phi * (static_cast<long double>(n) - std::log2(out.phi));

  if (n <= kExactPerturbationMaxArity) {
    const auto om = static_cast<std::uint64_t>(omega);
    const auto phi = static_cast<std::uint64_t>(out.phi);
    BigInt term = 1;
    BigInt sum = 0;
    for (std::uint64_t s = 1; s <= phi; ++s) {
      term = term * (om - s + 1) / s;
      sum += term;
    }
    out.exact = log2_big(sum);
  }
  return out;
}

SeparationMargin separation_margin(unsigned n, unsigned xi, double C, double alpha) {
  if (xi > n) throw InvalidArgument("degree bound exceeds arity");
  SeparationMargin out;
  out.log2F = log2_perturbation_count(n, xi, C, alpha).log2_bound;
  out.log2M = log2_num_polynomials(n, xi).log2_count;
  out.margin = out.log2F + out.log2M - log2_num_functions(n);
  return out;
}

AdjustmentEstimate naive_adjustment_estimate(unsigned n, unsigned m) {
  if (m < 1 || m > n) throw InvalidArgument("naive adjustment needs 1 <= m <= n");
  AdjustmentEstimate out;
  const long double nn = n;
  const long double mm = m;
  out.exponent = nn - mm + 1 + mm * std::log2(nn / mm);
  out.exceeds = out.exponent > nn;
  return out;
}

}  // namespace bfrg
