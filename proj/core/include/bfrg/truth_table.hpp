#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace bfrg {

/// Exact fraction count / 2^arity. Arity is at most 24, so the cross
/// products used for comparison fit in 64 bits.
struct Density {
  std::uint64_t count = 0;
  unsigned arity = 0;

  std::uint64_t numerator() const noexcept { return count; }
  std::uint64_t denominator() const noexcept { return std::uint64_t{1} << arity; }
  double value() const noexcept;

  friend bool operator==(const Density& a, const Density& b) noexcept;
  friend std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept;
};

/*! Exhaustive, bit-packed table of a Boolean function of n <= kMaxArity inputs.

  Bit k holds f(x_1, ..., x_n) where x_j is the j-th binary digit of k, x_1
  being the least-significant digit. Storage past bit 2^n - 1 is always zero.
*/
class TruthTable {
 public:
  static constexpr unsigned kMaxArity = 24;

  TruthTable() : TruthTable(0) {}
  explicit TruthTable(unsigned arity);

  static TruthTable constant(unsigned arity, bool value);
  /// The projection x_var, 1 <= var <= arity.
  static TruthTable variable(unsigned arity, unsigned var);
  /// One entry (0 or 1) per input index; size must be 2^arity.
  static TruthTable from_bits(unsigned arity, std::span<const std::uint8_t> bits);
  static TruthTable from_words(unsigned arity, std::vector<std::uint64_t> words);

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{1} << arity_; }
  std::size_t num_words() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool bit(std::uint64_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set_bit(std::uint64_t index, bool value) noexcept;
  void flip_bit(std::uint64_t index) noexcept { words_[index >> 6] ^= std::uint64_t{1} << (index & 63); }

  /// Throws ArityMismatch unless x.size() == arity().
  bool evaluate(std::span<const std::uint8_t> x) const;

  std::uint64_t popcount() const noexcept;
  Density density() const noexcept { return {popcount(), arity_}; }
  bool is_zero() const noexcept;

  TruthTable& operator^=(const TruthTable& other);
  TruthTable& operator&=(const TruthTable& other);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  /// Mask of the valid bits in the (only) word when arity < 6.
  static std::uint64_t word_mask(unsigned arity) noexcept;

 private:
  friend class TableAccess;

  unsigned arity_ = 0;
  std::vector<std::uint64_t> words_;
};

TruthTable operator^(TruthTable a, const TruthTable& b);
TruthTable operator&(TruthTable a, const TruthTable& b);
TruthTable operator~(TruthTable a);

inline TruthTable xor_tables(const TruthTable& a, const TruthTable& b) { return a ^ b; }
inline TruthTable and_tables(const TruthTable& a, const TruthTable& b) { return a & b; }

/// Hamming distance between equal-arity tables.
std::uint64_t distance(const TruthTable& a, const TruthTable& b);

/// Mutable view of the word storage, for kernels inside the library that
/// build tables word-at-a-time.
class TableAccess {
 public:
  static std::vector<std::uint64_t>& words(TruthTable& t) noexcept { return t.words_; }
};

}  // namespace bfrg
