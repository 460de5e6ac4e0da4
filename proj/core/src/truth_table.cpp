#include "bfrg/truth_table.hpp"

#include <bit>
#include <string>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

std::size_t words_for(unsigned arity) {
  return arity <= 6 ? 1 : std::size_t{1} << (arity - 6);
}

// Bits of x_var inside one 64-bit word, var <= 6.
constexpr std::uint64_t kVarMasks[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void check_same_arity(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity());
}

}  // namespace

double Density::value() const noexcept {
  return static_cast<double>(count) / static_cast<double>(denominator());
}

bool operator==(const Density& a, const Density& b) noexcept {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept {
  // count <= 2^24 and arity <= 24: products stay below 2^49.
  const unsigned common = a.arity > b.arity ? a.arity : b.arity;
  const std::uint64_t lhs = a.count << (common - a.arity);
  const std::uint64_t rhs = b.count << (common - b.arity);
  return lhs <=> rhs;
}

TruthTable::TruthTable(unsigned arity) : arity_(arity) {
  if (arity > kMaxArity) {
    throw InvalidArgument("arity " + std::to_string(arity) + " exceeds maximum " +
                          std::to_string(kMaxArity));
  }
  words_.assign(words_for(arity), 0);
}

std::uint64_t TruthTable::word_mask(unsigned arity) noexcept {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.words_[0] &= word_mask(arity);
  }
  return t;
}

TruthTable TruthTable::variable(unsigned arity, unsigned var) {
  if (var < 1 || var > arity) {
    throw InvalidArgument("variable label " + std::to_string(var) + " out of range 1.." +
                          std::to_string(arity));
  }
  TruthTable t(arity);
  const unsigned pos = var - 1;
  if (pos < 6) {
    for (auto& w : t.words_) w = kVarMasks[pos];
    t.words_[0] &= word_mask(arity);
  } else {
    const std::size_t stride = std::size_t{1} << (pos - 6);
    for (std::size_t i = 0; i < t.words_.size(); ++i) {
      if ((i / stride) & 1u) t.words_[i] = ~std::uint64_t{0};
    }
  }
  return t;
}

TruthTable TruthTable::from_bits(unsigned arity, std::span<const std::uint8_t> bits) {
  TruthTable t(arity);
  if (bits.size() != t.num_bits()) {
    throw InvalidArgument("expected " + std::to_string(t.num_bits()) + " bits, got " +
                          std::to_string(bits.size()));
  }
  for (std::uint64_t k = 0; k < bits.size(); ++k) {
    if (bits[k] > 1) throw InvalidArgument("bit values must be 0 or 1");
    if (bits[k]) t.words_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return t;
}

TruthTable TruthTable::from_words(unsigned arity, std::vector<std::uint64_t> words) {
  TruthTable t(arity);
  if (words.size() != t.words_.size()) {
    throw InvalidArgument("expected " + std::to_string(t.words_.size()) + " words, got " +
                          std::to_string(words.size()));
  }
  if ((words[0] & ~word_mask(arity)) != 0) {
    throw InvalidArgument("bits beyond 2^arity must be zero");
  }
  t.words_ = std::move(words);
  return t;
}

void TruthTable::set_bit(std::uint64_t index, bool value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (index & 63);
  if (value) {
    words_[index >> 6] |= mask;
  } else {
    words_[index >> 6] &= ~mask;
  }
}

bool TruthTable::evaluate(std::span<const std::uint8_t> x) const {
  if (x.size() != arity_) throw ArityMismatch(arity_, static_cast<unsigned>(x.size()));
  std::uint64_t index = 0;
  for (unsigned j = 0; j < arity_; ++j) {
    if (x[j] > 1) throw InvalidArgument("assignment entries must be 0 or 1");
    index |= std::uint64_t{x[j]} << j;
  }
  return bit(index);
}

std::uint64_t TruthTable::popcount() const noexcept {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool TruthTable::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

TruthTable operator^(TruthTable a, const TruthTable& b) {
  a ^= b;
  return a;
}

TruthTable operator&(TruthTable a, const TruthTable& b) {
  a &= b;
  return a;
}

TruthTable operator~(TruthTable a) {
  auto& words = TableAccess::words(a);
  for (auto& w : words) w = ~w;
  words[0] &= TruthTable::word_mask(a.arity());
  return a;
}

std::uint64_t distance(const TruthTable& a, const TruthTable& b) {
  check_same_arity(a, b);
  std::uint64_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::uint64_t>(std::popcount(wa[i] ^ wb[i]));
  }
  return total;
}

}  // namespace bfrg
