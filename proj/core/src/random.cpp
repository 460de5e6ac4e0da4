#include "bfrg/random.hpp"

#include <numeric>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below requires a positive bound");
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

bool Rng::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability must lie in [0, 1]");
  const double scaled = p * 0x1.0p53;
  return static_cast<double>(next() >> 11) < scaled;
}

std::vector<unsigned> Rng::permutation_prefix(unsigned n, unsigned length) {
  if (length > n) throw InvalidArgument("permutation prefix longer than n");
  std::vector<unsigned> items(n);
  std::iota(items.begin(), items.end(), 1u);
  // Partial Fisher-Yates from the front.
  for (unsigned i = 0; i < length; ++i) {
    const auto j = i + static_cast<unsigned>(below(n - i));
    std::swap(items[i], items[j]);
  }
  items.resize(length);
  return items;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace bfrg
