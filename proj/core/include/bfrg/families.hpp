#pragma once

#include <cstdint>
#include <vector>

#include "bfrg/anf.hpp"
#include "bfrg/truth_table.hpp"

namespace bfrg {

/// Each of the 2^n outputs independently 1 with probability p0.
TruthTable random_table(unsigned n, double p0, std::uint64_t seed);

/// x_1 XOR ... XOR x_n.
TruthTable parity(unsigned n);

/// 1 iff strictly more than half of the inputs are 1.
TruthTable majority(unsigned n);

/// 1 iff at least half of the inputs are 1 (the >= n/2 threshold variant).
TruthTable majority_geq(unsigned n);

/*! Divisibility of the input sum by an odd prime p, computed by the p-register
  remainder machine. Register r after i inputs is 1 exactly where
  x_1 + ... + x_i = r (mod p); each step feeds

    reg_r <- reg_r * (1 - x_{i+1})  XOR  reg_{r-1 mod p} * x_{i+1}.

  All registers are whole truth tables over the n inputs, so one step costs a
  few word-parallel ANDs and XORs.
*/
class RemainderMachine {
 public:
  RemainderMachine(unsigned n, unsigned p);

  unsigned arity() const noexcept { return n_; }
  unsigned modulus() const noexcept { return static_cast<unsigned>(registers_.size()); }
  /// Number of inputs consumed so far.
  unsigned step_index() const noexcept { return consumed_; }
  bool done() const noexcept { return consumed_ == n_; }

  void step();
  const std::vector<TruthTable>& registers() const noexcept { return registers_; }

  /// Registers partition the input space: pairwise disjoint, union all ones.
  bool exactly_one_register_set() const;

 private:
  unsigned n_;
  unsigned consumed_ = 0;
  std::vector<TruthTable> registers_;
};

/// Throws InvalidArgument unless p is an odd prime.
TruthTable mod_p(unsigned n, unsigned p);

bool is_odd_prime(unsigned p);

/// Monomials of cardinality <= xi, each kept with probability term_density,
/// visited by cardinality then mask.
Anf random_polynomial(unsigned n, unsigned xi, double term_density, std::uint64_t seed);

struct PlantedFunction {
  TruthTable table;
  Anf polynomial;
  TruthTable noise;
};

/// table = anf_to_table(polynomial) XOR noise, noise bits Bernoulli(noise_fraction).
PlantedFunction planted_near_polynomial(unsigned n, unsigned xi, double noise_fraction,
                                        std::uint64_t seed, double term_density = 0.5);

/// Same as above with exactly `flips` distinct noise positions.
PlantedFunction planted_with_flips(unsigned n, unsigned xi, std::uint64_t flips, std::uint64_t seed,
                                   double term_density = 0.5);

}  // namespace bfrg
