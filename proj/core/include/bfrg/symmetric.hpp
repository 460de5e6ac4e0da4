#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfrg/trace.hpp"
#include "bfrg/truth_table.hpp"

namespace bfrg {

/// Function of the input sum only: values()[s] is the output when exactly s
/// of the n inputs are 1.
class SymmetricFunction {
 public:
  SymmetricFunction() : SymmetricFunction(0, {0}) {}
  /// values.size() must be n + 1, entries 0 or 1.
  SymmetricFunction(unsigned n, std::vector<std::uint8_t> values);

  static SymmetricFunction constant(unsigned n, bool value);
  static SymmetricFunction parity(unsigned n);
  static SymmetricFunction majority(unsigned n);      ///< strict: s > n/2
  static SymmetricFunction majority_geq(unsigned n);  ///< s >= n/2
  static SymmetricFunction mod_p(unsigned n, unsigned p);

  unsigned arity() const noexcept { return n_; }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  bool value(unsigned sum) const { return values_.at(sum) != 0; }
  bool is_zero() const noexcept;

  /// Full truth table; arity must be <= TruthTable::kMaxArity.
  TruthTable expand() const;

  friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;

 private:
  unsigned n_;
  std::vector<std::uint8_t> values_;
};

/// The symmetric function t equals, or nullopt if t is not symmetric.
std::optional<SymmetricFunction> project_symmetric(const TruthTable& t);

/// v'[s] = v[s] XOR v[s+1]; arity drops by one.
SymmetricFunction sym_decimate(const SymmetricFunction& f);

/// Exact big-integer evaluation at or below this arity, log-domain above.
inline constexpr unsigned kExactDensityMaxArity = 4096;

/// sum over {s : v[s] = 1} of C(n, s) / 2^n.
double sym_density(const SymmetricFunction& f);
double sym_density_exact(const SymmetricFunction& f);
double sym_density_log_domain(const SymmetricFunction& f);

/// The residues r in [0, p) for which the output is 1, when the value vector
/// is periodic in s with period p; nullopt otherwise.
std::optional<std::vector<std::uint8_t>> residue_pattern(const SymmetricFunction& f, unsigned p);

struct ResidueCycle {
  unsigned start = 0;   ///< first step of the repeating block
  unsigned period = 0;
};

struct SymmetricFlow {
  FlowTrace trace;
  std::optional<unsigned> modulus;
  /// Per step, aligned with trace.steps; empty entries are aperiodic steps.
  std::vector<std::optional<std::vector<std::uint8_t>>> patterns;
  std::optional<ResidueCycle> cycle;
};

/// Densities after 0..steps applications of sym_decimate. With a modulus, also
/// the residue pattern per step and the first exactly repeating pattern.
SymmetricFlow sym_flow(const SymmetricFunction& f, unsigned steps,
                       std::optional<unsigned> modulus = std::nullopt);

}  // namespace bfrg
