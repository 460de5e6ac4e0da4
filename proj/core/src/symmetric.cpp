#include "bfrg/symmetric.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "bfrg/binomial.hpp"
#include "bfrg/error.hpp"
#include "bfrg/families.hpp"

namespace bfrg {

SymmetricFunction::SymmetricFunction(unsigned n, std::vector<std::uint8_t> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(n_) + 1) {
    throw InvalidArgument("symmetric value vector must have n + 1 entries");
  }
  for (auto v : values_) {
    if (v > 1) throw InvalidArgument("symmetric values must be 0 or 1");
  }
}

SymmetricFunction SymmetricFunction::constant(unsigned n, bool value) {
  return {n, std::vector<std::uint8_t>(n + 1, value ? 1 : 0)};
}

SymmetricFunction SymmetricFunction::parity(unsigned n) {
  std::vector<std::uint8_t> v(n + 1);
  for (unsigned s = 0; s <= n; ++s) v[s] = s & 1u;
  return {n, std::move(v)};
}

SymmetricFunction SymmetricFunction::majority(unsigned n) {
  std::vector<std::uint8_t> v(n + 1);
  for (unsigned s = 0; s <= n; ++s) v[s] = 2ull * s > n;
  return {n, std::move(v)};
}

SymmetricFunction SymmetricFunction::majority_geq(unsigned n) {
  std::vector<std::uint8_t> v(n + 1);
  for (unsigned s = 0; s <= n; ++s) v[s] = 2ull * s >= n;
  return {n, std::move(v)};
}

SymmetricFunction SymmetricFunction::mod_p(unsigned n, unsigned p) {
  if (!is_odd_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not an odd prime");
  std::vector<std::uint8_t> v(n + 1);
  for (unsigned s = 0; s <= n; ++s) v[s] = s % p == 0;
  return {n, std::move(v)};
}

bool SymmetricFunction::is_zero() const noexcept {
  for (auto v : values_) {
    if (v) return false;
  }
  return true;
}

TruthTable SymmetricFunction::expand() const {
  if (n_ > TruthTable::kMaxArity) throw InvalidArgument("arity too large to expand into a table");
  TruthTable t(n_);
  auto& words = TableAccess::words(t);
  for (std::uint64_t k = 0; k < t.num_bits(); ++k) {
    if (values_[std::popcount(k)]) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return t;
}

std::optional<SymmetricFunction> project_symmetric(const TruthTable& t) {
  const unsigned n = t.arity();
  std::vector<int> seen(n + 1, -1);
  for (std::uint64_t k = 0; k < t.num_bits(); ++k) {
    const auto s = static_cast<unsigned>(std::popcount(k));
    const int b = t.bit(k) ? 1 : 0;
    if (seen[s] < 0) {
      seen[s] = b;
    } else if (seen[s] != b) {
      return std::nullopt;
    }
  }
  std::vector<std::uint8_t> v(n + 1);
  for (unsigned s = 0; s <= n; ++s) v[s] = static_cast<std::uint8_t>(seen[s]);
  return SymmetricFunction(n, std::move(v));
}

SymmetricFunction sym_decimate(const SymmetricFunction& f) {
  if (f.arity() == 0) throw InvalidArgument("cannot decimate a 0-ary symmetric function");
  const auto& v = f.values();
  std::vector<std::uint8_t> out(f.arity());
  for (unsigned s = 0; s < f.arity(); ++s) out[s] = v[s] ^ v[s + 1];
  return {f.arity() - 1, std::move(out)};
}

double sym_density_exact(const SymmetricFunction& f) {
  const unsigned n = f.arity();
  const auto row = binomial_row(n);
  BigInt num = 0;
  for (unsigned s = 0; s <= n; ++s) {
    if (f.value(s)) num += row[s];
  }
  if (num == 0) return 0.0;
  // Keep the top 64 bits of the numerator and rescale by 2^-n.
  const auto msb = static_cast<long>(boost::multiprecision::msb(num));
  const BigInt top = msb >= 63 ? BigInt(num >> (msb - 63)) : BigInt(num << (63 - msb));
  const auto mantissa = top.convert_to<std::uint64_t>();
  return static_cast<double>(
      std::ldexp(static_cast<long double>(mantissa), static_cast<int>(msb - 63 - static_cast<long>(n))));
}

double sym_density_log_domain(const SymmetricFunction& f) {
  const unsigned n = f.arity();
  const long double ln2 = std::log(2.0L);
  const long double log_total = std::lgamma(static_cast<long double>(n) + 1);
  CompensatedSum sum;
  for (unsigned s = 0; s <= n; ++s) {
    if (!f.value(s)) continue;
    const long double ln_c = log_total - std::lgamma(static_cast<long double>(s) + 1) -
                             std::lgamma(static_cast<long double>(n - s) + 1);
    sum.add(std::exp(ln_c - static_cast<long double>(n) * ln2));
  }
  return static_cast<double>(sum.value());
}

double sym_density(const SymmetricFunction& f) {
  return f.arity() <= kExactDensityMaxArity ? sym_density_exact(f) : sym_density_log_domain(f);
}

std::optional<std::vector<std::uint8_t>> residue_pattern(const SymmetricFunction& f, unsigned p) {
  if (p == 0) throw InvalidArgument("modulus must be positive");
  const unsigned n = f.arity();
  if (n + 1 < p) return std::nullopt;
  const auto& v = f.values();
  for (unsigned s = 0; s + p <= n; ++s) {
    if (v[s] != v[s + p]) return std::nullopt;
  }
  return std::vector<std::uint8_t>(v.begin(), v.begin() + p);
}

SymmetricFlow sym_flow(const SymmetricFunction& f, unsigned steps, std::optional<unsigned> modulus) {
  if (steps > f.arity()) {
    throw InvalidArgument("requested " + std::to_string(steps) + " steps on arity " +
                          std::to_string(f.arity()));
  }
  SymmetricFlow flow;
  flow.modulus = modulus;
  flow.trace.start_arity = f.arity();
  flow.trace.symmetric = true;

  std::map<std::vector<std::uint8_t>, unsigned> first_seen;
  SymmetricFunction current = f;
  for (unsigned step = 0; step <= steps; ++step) {
    if (step > 0) current = sym_decimate(current);
    flow.trace.steps.push_back({step, current.arity(), std::nullopt, std::nullopt, sym_density(current)});
    if (!modulus) continue;
    auto pattern = residue_pattern(current, *modulus);
    if (pattern && !flow.cycle) {
      auto [it, inserted] = first_seen.emplace(*pattern, step);
      if (!inserted) flow.cycle = ResidueCycle{it->second, step - it->second};
    }
    flow.patterns.push_back(std::move(pattern));
  }
  return flow;
}

}  // namespace bfrg
