#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bfrg/truth_table.hpp"

namespace bfrg {

/// Sequence of distinct ORIGINAL variable labels (1-based) to decimate.
class DecimationOrder {
 public:
  DecimationOrder() = default;
  /// Throws InvalidArgument on duplicate or out-of-range labels.
  DecimationOrder(unsigned arity, std::vector<unsigned> vars);

  unsigned arity() const noexcept { return arity_; }
  const std::vector<unsigned>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }

  DecimationOrder prefix(std::size_t length) const;

  friend bool operator==(const DecimationOrder&, const DecimationOrder&) = default;

 private:
  unsigned arity_ = 0;
  std::vector<unsigned> vars_;
};

/*! One RG step: g(x') = f(x' with x_var = 0) XOR f(x' with x_var = 1).

  The result has arity n - 1; surviving variables keep their relative order,
  so an original label j > var becomes j - 1.
*/
TruthTable decimate(const TruthTable& t, unsigned var);

/// Left fold of decimate over `order`, translating original labels.
TruthTable decimate_seq(const TruthTable& t, const DecimationOrder& order);

/// Translates original labels to the positional labels decimate() expects
/// at each step of the fold.
std::vector<unsigned> positional_labels(const DecimationOrder& order);

struct OrderSample {
  std::vector<DecimationOrder> orders;
  bool exhaustive = false;
  std::uint64_t seed = 0;
};

struct SamplingPolicy {
  /// Enumerate every ordered sequence when arity <= this.
  unsigned exhaustive_max_arity = 8;
  std::size_t random_orders = 64;
  std::uint64_t seed = 0;
};

/// Orders of the given length: all arrangements when the arity is small,
/// otherwise `random_orders` uniform permutation prefixes.
OrderSample sample_orders(unsigned arity, unsigned length, const SamplingPolicy& policy = {});

struct AnnihilationResult {
  /// Smallest m with every sampled length-m prefix all-zero; nullopt when
  /// no m <= cap works.
  std::optional<unsigned> depth;
  unsigned cap = 0;
  std::size_t orders_checked = 0;
  bool exhaustive = false;
};

/// Orders must all have length >= cap. The zero table has depth 0.
AnnihilationResult annihilation_depth(const TruthTable& t, std::span<const DecimationOrder> orders,
                                      unsigned cap);

/// Uses sample_orders(arity, cap, policy); cap defaults to the arity.
AnnihilationResult annihilation_depth(const TruthTable& t, const SamplingPolicy& policy = {},
                                      std::optional<unsigned> cap = std::nullopt);

/// True iff decimate_seq agrees over all |vars|! orderings of `vars`, or over
/// `max_orderings` seeded random orderings when |vars|! is larger.
bool order_independence_check(const TruthTable& t, std::span<const unsigned> vars,
                              std::size_t max_orderings = 5040, std::uint64_t seed = 0);

}  // namespace bfrg
