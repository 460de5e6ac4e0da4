#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfrg/anf.hpp"
#include "bfrg/rg.hpp"
#include "bfrg/symmetric.hpp"
#include "bfrg/truth_table.hpp"

namespace bfrg {

/// Constants of the sparse-remainder bound C * 2^(-alpha * xi / log2 n).
struct BoundParams {
  double C = 1.0;
  double alpha = 1.0;
};

/// The bound itself. log2 n is taken as 1 when n < 2.
double remainder_bound(unsigned n, unsigned xi, const BoundParams& params);

enum class DecompositionMethod { kExhaustive, kAnfTruncation, kDerivativeSieve };

const char* method_name(DecompositionMethod m);
DecompositionMethod parse_method(const std::string& name);

/*! Result of splitting f into a degree-<=xi polynomial and a remainder.

  With a witness, remainder_density is the exact density of f XOR witness.
  The sieve gives no witness; its remainder_density is the inferred estimate
  max_density / 2^(xi+1), which is exactly max_count / 2^n, and sieve_density
  holds the raw measurement.
*/
struct DecompositionReport {
  unsigned arity = 0;
  unsigned xi = 0;
  DecompositionMethod method = DecompositionMethod::kExhaustive;
  std::optional<Anf> witness;
  Density remainder_density;
  std::optional<Density> sieve_density;
  std::size_t orders_checked = 0;
  BoundParams bound;
  bool meets_bound = false;
};

/// Hard cap on sum_{j<=xi} C(n, j), the number of free monomials.
inline constexpr unsigned kExhaustiveMaxMonomials = 24;

/// Number of monomials of cardinality <= xi in n variables.
std::uint64_t monomial_count(unsigned n, unsigned xi);

/*! Nearest polynomial of degree <= xi by exhaustive enumeration.

  Ties on distance go to the lexicographically smallest sorted monomial list.
  Throws CapacityError past kExhaustiveMaxMonomials. Candidates are split into
  contiguous Gray-code ranges across `threads` workers (0 = hardware).
*/
DecompositionReport exhaustive_nearest_polynomial(const TruthTable& t, unsigned xi,
                                                  const BoundParams& bound = {},
                                                  unsigned threads = 0);

/// Degree-1 case via the Walsh-Hadamard spectrum, O(n 2^n). Same tie rule.
DecompositionReport nearest_affine_walsh(const TruthTable& t, const BoundParams& bound = {});

/// Witness = ANF terms of cardinality <= xi. Cheap; not distance-optimal.
DecompositionReport anf_truncation(const TruthTable& t, unsigned xi, const BoundParams& bound = {});

/*! Screening after xi + 1 decimations, where only the remainder survives.

  sieve_density is the max density over the sampled length-(xi+1) orders, and
  the remainder estimate is that max / 2^(xi+1). No witness is produced.
*/
DecompositionReport derivative_sieve(const TruthTable& t, unsigned xi,
                                     std::span<const DecimationOrder> orders,
                                     const BoundParams& bound = {});

DecompositionReport derivative_sieve(const TruthTable& t, unsigned xi,
                                     const SamplingPolicy& policy = {},
                                     const BoundParams& bound = {});

inline constexpr unsigned kProfileMaxArity = 16;

/// rho(eta) for eta = 0..n: density of the function built from only the
/// degree-exactly-eta ANF terms.
std::vector<Density> degree_density_profile(const TruthTable& t);

struct ProductRemainderRecord {
  unsigned xi = 0;
  Density remainder_a;            ///< R_A = a XOR trunc_xi(a)
  Density remainder_b;
  Density poly_a_times_rem_b;     ///< P_A * R_B
  Density rem_a_times_poly_b;     ///< R_A * P_B
  Density rem_a_times_rem_b;      ///< R_A * R_B
  Density product_remainder;      ///< a*b XOR trunc_xi(a*b)
  Density poly_product_remainder; ///< R_D: P_A*P_B XOR trunc_xi(P_A*P_B)
  std::uint64_t terms_a = 0;      ///< T_A
  std::uint64_t terms_b = 0;      ///< T_B
  std::uint64_t terms_d = 0;      ///< T_D, terms of trunc_xi(P_A*P_B)
  bool cross_terms_bounded = false;   ///< P_A*R_B <= R_B and R_A*P_B <= R_A and R_A*R_B <= both
  bool term_count_bounded = false;    ///< T_D <= T_A * T_B
  bool poly_remainder_bounded = false;///< density(R_D) <= T_A * T_B * 2^-xi
};

inline constexpr unsigned kProductMaxArity = 14;

ProductRemainderRecord product_remainder_experiment(const TruthTable& a, const TruthTable& b,
                                                    unsigned xi);

/// Distance from t to the nearest symmetric function, by majority vote inside
/// each popcount class (ties to 0).
struct SymmetricProjection {
  SymmetricFunction nearest;
  std::uint64_t distance = 0;
};

SymmetricProjection nearest_symmetric(const TruthTable& t);

}  // namespace bfrg
