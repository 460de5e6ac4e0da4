#include "bfrg/families.hpp"

#include <bit>
#include <string>

#include "bfrg/error.hpp"
#include "bfrg/random.hpp"

namespace bfrg {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
  }
}

template <typename Pred>
TruthTable from_weight(unsigned n, Pred pred) {
  TruthTable t(n);
  auto& words = TableAccess::words(t);
  const std::uint64_t bits = t.num_bits();
  for (std::uint64_t k = 0; k < bits; ++k) {
    if (pred(static_cast<unsigned>(std::popcount(k)))) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return t;
}

}  // namespace

TruthTable random_table(unsigned n, double p0, std::uint64_t seed) {
  check_probability(p0, "p0");
  TruthTable t(n);
  auto& words = TableAccess::words(t);
  Rng rng(seed);
  const std::uint64_t bits = t.num_bits();
  for (std::uint64_t k = 0; k < bits; ++k) {
    if (rng.bernoulli(p0)) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return t;
}

TruthTable parity(unsigned n) {
  if (n < 1) throw InvalidArgument("parity needs n >= 1");
  TruthTable t(n);
  for (unsigned j = 1; j <= n; ++j) t ^= TruthTable::variable(n, j);
  return t;
}

TruthTable majority(unsigned n) {
  if (n < 1) throw InvalidArgument("majority needs n >= 1");
  return from_weight(n, [n](unsigned s) { return 2 * s > n; });
}

TruthTable majority_geq(unsigned n) {
  if (n < 1) throw InvalidArgument("majority needs n >= 1");
  return from_weight(n, [n](unsigned s) { return 2 * s >= n; });
}

bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

RemainderMachine::RemainderMachine(unsigned n, unsigned p) : n_(n) {
  if (!is_odd_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not an odd prime");
  if (n < 1) throw InvalidArgument("mod_p needs n >= 1");
  registers_.assign(p, TruthTable(n));
  registers_[0] = TruthTable::constant(n, true);
}

void RemainderMachine::step() {
  if (done()) throw InvalidArgument("remainder machine already consumed every input");
  const TruthTable x = TruthTable::variable(n_, consumed_ + 1);
  const TruthTable not_x = ~x;
  const std::size_t p = registers_.size();
  std::vector<TruthTable> next;
  next.reserve(p);
  for (std::size_t r = 0; r < p; ++r) {
    next.push_back((registers_[r] & not_x) ^ (registers_[(r + p - 1) % p] & x));
  }
  registers_ = std::move(next);
  ++consumed_;
}

bool RemainderMachine::exactly_one_register_set() const {
  TruthTable seen(n_);
  for (const auto& reg : registers_) {
    if (!(seen & reg).is_zero()) return false;
    seen ^= reg;
  }
  return seen == TruthTable::constant(n_, true);
}

TruthTable mod_p(unsigned n, unsigned p) {
  RemainderMachine machine(n, p);
  while (!machine.done()) machine.step();
  return machine.registers()[0];
}

Anf random_polynomial(unsigned n, unsigned xi, double term_density, std::uint64_t seed) {
  if (xi > n) throw InvalidArgument("degree bound exceeds arity");
  check_probability(term_density, "term_density");
  if (n > TruthTable::kMaxArity) throw InvalidArgument("arity exceeds maximum");
  Rng rng(seed);
  std::vector<Anf::Monomial> terms;
  for (unsigned k = 0; k <= xi; ++k) {
    if (k == 0) {
      if (rng.bernoulli(term_density)) terms.push_back(0);
      continue;
    }
    // Gosper's hack over k-subsets of n bits, ascending.
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    while (m < limit) {
      if (rng.bernoulli(term_density)) terms.push_back(static_cast<Anf::Monomial>(m));
      const std::uint64_t c = m & (0 - m);
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return Anf(n, std::move(terms));
}

PlantedFunction planted_near_polynomial(unsigned n, unsigned xi, double noise_fraction,
                                        std::uint64_t seed, double term_density) {
  check_probability(noise_fraction, "noise_fraction");
  Anf poly = random_polynomial(n, xi, term_density, derive_seed(seed, 0));
  TruthTable noise = random_table(n, noise_fraction, derive_seed(seed, 1));
  TruthTable table = anf_to_table(poly) ^ noise;
  return {std::move(table), std::move(poly), std::move(noise)};
}

PlantedFunction planted_with_flips(unsigned n, unsigned xi, std::uint64_t flips, std::uint64_t seed,
                                   double term_density) {
  TruthTable noise(n);
  if (flips > noise.num_bits()) throw InvalidArgument("more flips than input configurations");
  Anf poly = random_polynomial(n, xi, term_density, derive_seed(seed, 0));
  Rng rng(derive_seed(seed, 1));
  std::uint64_t placed = 0;
  while (placed < flips) {
    const std::uint64_t k = rng.below(noise.num_bits());
    if (!noise.bit(k)) {
      noise.set_bit(k, true);
      ++placed;
    }
  }
  TruthTable table = anf_to_table(poly) ^ noise;
  return {std::move(table), std::move(poly), std::move(noise)};
}

}  // namespace bfrg
