#include "bfrg/rg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "bfrg/error.hpp"
#include "bfrg/random.hpp"

namespace bfrg {

namespace {

// Bits whose position has bit k clear, k < 6.
constexpr std::uint64_t kLowHalfMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

// XOR-derivative inside one word along position bit k < 6, packed into the
// low 32 bits.
std::uint64_t derive_word(std::uint64_t w, unsigned k) {
  const unsigned s = 1u << k;
  std::uint64_t d = (w ^ (w >> s)) & kLowHalfMasks[k];
  for (unsigned b = s, level = k + 1; b < 32; b <<= 1, ++level) {
    d = (d | (d >> b)) & kLowHalfMasks[level];
  }
  return d;
}

void check_order_fits(const TruthTable& t, const DecimationOrder& order) {
  if (order.arity() != t.arity()) throw ArityMismatch(t.arity(), order.arity());
}

std::uint64_t factorial_capped(std::size_t k, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

}  // namespace

DecimationOrder::DecimationOrder(unsigned arity, std::vector<unsigned> vars)
    : arity_(arity), vars_(std::move(vars)) {
  if (vars_.size() > arity_) throw InvalidArgument("decimation order longer than arity");
  std::vector<bool> seen(arity_ + 1, false);
  for (auto v : vars_) {
    if (v < 1 || v > arity_) {
      throw InvalidArgument("decimation label " + std::to_string(v) + " out of range 1.." +
                            std::to_string(arity_));
    }
    if (seen[v]) throw InvalidArgument("duplicate decimation label " + std::to_string(v));
    seen[v] = true;
  }
}

DecimationOrder DecimationOrder::prefix(std::size_t length) const {
  if (length > vars_.size()) throw InvalidArgument("prefix longer than order");
  return DecimationOrder(arity_, std::vector<unsigned>(vars_.begin(), vars_.begin() + length));
}

TruthTable decimate(const TruthTable& t, unsigned var) {
  const unsigned n = t.arity();
  if (n == 0) throw InvalidArgument("cannot decimate a 0-ary table");
  if (var < 1 || var > n) {
    throw InvalidArgument("decimation label " + std::to_string(var) + " out of range 1.." +
                          std::to_string(n));
  }
  TruthTable out(n - 1);
  auto& dst = TableAccess::words(out);
  const auto src = t.words();
  const unsigned pos = var - 1;

  if (pos >= 6) {
    const std::size_t stride = std::size_t{1} << (pos - 6);
    std::size_t o = 0;
    for (std::size_t base = 0; base < src.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) dst[o++] = src[base + i] ^ src[base + stride + i];
    }
  } else if (n - 1 < 6) {
    dst[0] = derive_word(src[0], pos) & TruthTable::word_mask(n - 1);
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i >> 1] |= derive_word(src[i], pos) << (32 * (i & 1));
    }
  }
  return out;
}

std::vector<unsigned> positional_labels(const DecimationOrder& order) {
  std::vector<unsigned> out;
  out.reserve(order.size());
  const auto& vars = order.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned label = vars[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[j] < vars[i]) --label;
    }
    out.push_back(label);
  }
  return out;
}

TruthTable decimate_seq(const TruthTable& t, const DecimationOrder& order) {
  check_order_fits(t, order);
  TruthTable current = t;
  for (auto label : positional_labels(order)) current = decimate(current, label);
  return current;
}

OrderSample sample_orders(unsigned arity, unsigned length, const SamplingPolicy& policy) {
  if (length > arity) throw InvalidArgument("order length exceeds arity");
  OrderSample sample;
  sample.seed = policy.seed;
  if (arity <= policy.exhaustive_max_arity) {
    sample.exhaustive = true;
    // All length-`length` arrangements, generated as permutation prefixes in
    // lexicographic order of the prefix.
    std::vector<unsigned> current;
    std::vector<bool> used(arity + 1, false);
    auto recurse = [&](auto&& self) -> void {
      if (current.size() == length) {
        sample.orders.emplace_back(arity, current);
        return;
      }
      for (unsigned v = 1; v <= arity; ++v) {
        if (used[v]) continue;
        used[v] = true;
        current.push_back(v);
        self(self);
        current.pop_back();
        used[v] = false;
      }
    };
    recurse(recurse);
    return sample;
  }
  Rng rng(policy.seed);
  sample.orders.reserve(policy.random_orders);
  for (std::size_t i = 0; i < policy.random_orders; ++i) {
    sample.orders.emplace_back(arity, rng.permutation_prefix(arity, length));
  }
  return sample;
}

AnnihilationResult annihilation_depth(const TruthTable& t, std::span<const DecimationOrder> orders,
                                      unsigned cap) {
  if (orders.empty()) throw InvalidArgument("annihilation_depth needs at least one order");
  if (cap > t.arity()) throw InvalidArgument("annihilation cap exceeds arity");
  AnnihilationResult result;
  result.cap = cap;
  result.orders_checked = orders.size();
  if (t.is_zero()) {
    result.depth = 0;
    return result;
  }
  unsigned worst = 0;
  for (const auto& order : orders) {
    check_order_fits(t, order);
    if (order.size() < cap) throw InvalidArgument("sampled order shorter than the cap");
    const auto labels = positional_labels(order);
    TruthTable current = t;
    std::optional<unsigned> first_zero;
    for (unsigned m = 1; m <= cap; ++m) {
      current = decimate(current, labels[m - 1]);
      if (current.is_zero()) {
        first_zero = m;
        break;
      }
    }
    if (!first_zero) return result;  // depth stays nullopt
    worst = std::max(worst, *first_zero);
  }
  result.depth = worst;
  return result;
}

AnnihilationResult annihilation_depth(const TruthTable& t, const SamplingPolicy& policy,
                                      std::optional<unsigned> cap) {
  const unsigned c = cap.value_or(t.arity());
  if (c > t.arity()) throw InvalidArgument("annihilation cap exceeds arity");
  // A cap of 0 still needs one (empty) order to inspect.
  const OrderSample sample = sample_orders(t.arity(), c, policy);
  auto result = annihilation_depth(t, sample.orders, c);
  result.exhaustive = sample.exhaustive;
  return result;
}

bool order_independence_check(const TruthTable& t, std::span<const unsigned> vars,
                              std::size_t max_orderings, std::uint64_t seed) {
  std::vector<unsigned> base(vars.begin(), vars.end());
  const DecimationOrder reference_order(t.arity(), base);  // validates the set
  if (base.size() <= 1) return true;
  const TruthTable reference = decimate_seq(t, reference_order);

  if (factorial_capped(base.size(), max_orderings) <= max_orderings) {
    std::sort(base.begin(), base.end());
    do {
      if (decimate_seq(t, DecimationOrder(t.arity(), base)) != reference) return false;
    } while (std::next_permutation(base.begin(), base.end()));
    return true;
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < max_orderings; ++i) {
    rng.shuffle(std::span<unsigned>(base));
    if (decimate_seq(t, DecimationOrder(t.arity(), base)) != reference) return false;
  }
  return true;
}

}  // namespace bfrg
