#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bfrg {

/*! Seeded generator with a platform-independent output sequence.

  The engine is std::mt19937_64, whose output is fixed by the C++ standard.
  Every derived draw (bounded integers, Bernoulli trials, shuffles) is
  computed here rather than through <random> distributions, which are
  implementation-defined.
*/
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound);

  /// 53-bit uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p: compares a 53-bit draw against p * 2^53, so
  /// p = 0 never fires and p = 1 always does.
  bool bernoulli(double p);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  /// First `length` entries of a uniform random permutation of 1..n.
  std::vector<unsigned> permutation_prefix(unsigned n, unsigned length);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic per-task seed derived from a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Nondeterministic seed for runs where the caller did not fix one.
std::uint64_t entropy_seed();

}  // namespace bfrg
