#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfrg/truth_table.hpp"

namespace bfrg {

/*! Algebraic normal form: a mod-2 sum of monomials x_{i_1} ... x_{i_j}.

  A monomial is stored as a bit mask, bit (j - 1) standing for x_j; the empty
  mask is the constant-1 term. Terms are kept sorted by mask and duplicated
  terms cancel on construction.
*/
class Anf {
 public:
  using Monomial = std::uint32_t;

  Anf() = default;
  Anf(unsigned arity, std::vector<Monomial> terms);

  static Anf from_label_sets(unsigned arity, const std::vector<std::vector<unsigned>>& sets);

  unsigned arity() const noexcept { return arity_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Max term cardinality; 0 for the zero polynomial and for constants.
  unsigned degree() const noexcept;

  bool contains(Monomial m) const;

  /// Terms of cardinality <= max_degree.
  Anf truncated(unsigned max_degree) const;
  /// Terms of cardinality exactly `degree`.
  Anf homogeneous_part(unsigned degree) const;

  /// Terms as 1-based label lists, ordered lexicographically on the lists.
  std::vector<std::vector<unsigned>> label_sets() const;

  friend bool operator==(const Anf&, const Anf&) = default;

  static std::vector<unsigned> labels(Monomial m);
  static Monomial from_labels(std::span<const unsigned> labels);

 private:
  unsigned arity_ = 0;
  std::vector<Monomial> terms_;
};

Anf operator^(const Anf& a, const Anf& b);

/// In-place-style butterfly over n rounds: bit m of the result is the ANF
/// coefficient of monomial m. The transform is its own inverse.
TruthTable mobius_transform(const TruthTable& t);

Anf table_to_anf(const TruthTable& t);
TruthTable anf_to_table(const Anf& a);

/// Degree of the ANF of t without materializing the term list.
unsigned anf_degree(const TruthTable& t);

/// Strict lexicographic order on sorted label lists (tie-break key for
/// equidistant witnesses).
bool lex_less(const Anf& a, const Anf& b);

}  // namespace bfrg
