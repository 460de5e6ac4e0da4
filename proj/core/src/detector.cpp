#include "bfrg/detector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

struct Candidate {
  std::uint64_t distance = ~std::uint64_t{0};
  std::optional<Anf> poly;
};

// Replaces best with (distance, poly) if strictly closer, or equally close and
// lexicographically smaller.
void offer(Candidate& best, std::uint64_t distance, const Anf& poly) {
  if (distance < best.distance || (distance == best.distance && best.poly && lex_less(poly, *best.poly))) {
    best.distance = distance;
    best.poly = poly;
  }
}

std::vector<Anf::Monomial> low_degree_monomials(unsigned n, unsigned xi) {
  std::vector<Anf::Monomial> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (static_cast<unsigned>(std::popcount(m)) <= xi) out.push_back(static_cast<Anf::Monomial>(m));
  }
  return out;
}

Anf select_terms(unsigned n, const std::vector<Anf::Monomial>& monomials, std::uint64_t gray) {
  std::vector<Anf::Monomial> terms;
  while (gray != 0) {
    terms.push_back(monomials[std::countr_zero(gray)]);
    gray &= gray - 1;
  }
  return Anf(n, std::move(terms));
}

DecompositionReport finish(const TruthTable& t, unsigned xi, DecompositionMethod method,
                           Anf witness, const BoundParams& bound) {
  DecompositionReport report;
  report.arity = t.arity();
  report.xi = xi;
  report.method = method;
  report.remainder_density = (t ^ anf_to_table(witness)).density();
  report.witness = std::move(witness);
  report.bound = bound;
  report.meets_bound = report.remainder_density.value() <= remainder_bound(t.arity(), xi, bound);
  return report;
}

void check_bound_params(const BoundParams& bound) {
  if (!(bound.C > 0) || !(bound.alpha > 0)) {
    throw InvalidArgument("bound constants C and alpha must be positive");
  }
}

}  // namespace

double remainder_bound(unsigned n, unsigned xi, const BoundParams& params) {
  const double log_n = n < 2 ? 1.0 : std::log2(static_cast<double>(n));
  return params.C * std::exp2(-params.alpha * static_cast<double>(xi) / log_n);
}

const char* method_name(DecompositionMethod m) {
  switch (m) {
    case DecompositionMethod::kExhaustive:
      return "EXHAUSTIVE";
    case DecompositionMethod::kAnfTruncation:
      return "ANF_TRUNCATION";
    case DecompositionMethod::kDerivativeSieve:
      return "DERIVATIVE_SIEVE";
  }
  return "UNKNOWN";
}

DecompositionMethod parse_method(const std::string& name) {
  if (name == "EXHAUSTIVE" || name == "exhaustive") return DecompositionMethod::kExhaustive;
  if (name == "ANF_TRUNCATION" || name == "truncate") return DecompositionMethod::kAnfTruncation;
  if (name == "DERIVATIVE_SIEVE" || name == "sieve") return DecompositionMethod::kDerivativeSieve;
  throw InvalidArgument("unknown decomposition method: " + name);
}

std::uint64_t monomial_count(unsigned n, unsigned xi) {
  // Saturates well above the cap; exact below it.
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (unsigned j = 0; j <= xi && j <= n; ++j) {
    if (j > 0) {
      c = c * (n - j + 1) / j;
      if (c > (std::uint64_t{1} << 40)) return std::uint64_t{1} << 40;
    }
    total += c;
  }
  return total;
}

DecompositionReport exhaustive_nearest_polynomial(const TruthTable& t, unsigned xi,
                                                  const BoundParams& bound, unsigned threads) {
  check_bound_params(bound);
  const unsigned n = t.arity();
  if (xi > n) throw InvalidArgument("degree bound exceeds arity");
  const std::uint64_t k = monomial_count(n, xi);
  if (k > kExhaustiveMaxMonomials) throw CapacityError(k, kExhaustiveMaxMonomials);

  if (xi == 1 && n > 6) {
    auto report = nearest_affine_walsh(t, bound);
    report.method = DecompositionMethod::kExhaustive;
    return report;
  }

  const auto monomials = low_degree_monomials(n, xi);
  std::vector<TruthTable> tables;
  tables.reserve(monomials.size());
  for (auto m : monomials) tables.push_back(anf_to_table(Anf(n, {m})));

  const std::uint64_t total = std::uint64_t{1} << k;
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<Candidate> best(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::uint64_t gray = begin ^ (begin >> 1);
    TruthTable current = t;
    for (std::uint64_t g = gray; g != 0; g &= g - 1) current ^= tables[std::countr_zero(g)];
    Candidate& local = best[w];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const std::uint64_t d = current.popcount();
      if (d < local.distance) {
        local.distance = d;
        local.poly = select_terms(n, monomials, gray);
      } else if (d == local.distance) {
        offer(local, d, select_terms(n, monomials, gray));
      }
      if (idx + 1 < end) {
        const unsigned flip = static_cast<unsigned>(std::countr_zero(idx + 1));
        gray ^= std::uint64_t{1} << flip;
        current ^= tables[flip];
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  Candidate winner;
  for (auto& c : best) {
    if (c.poly) offer(winner, c.distance, *c.poly);
  }
  return finish(t, xi, DecompositionMethod::kExhaustive, std::move(*winner.poly), bound);
}

DecompositionReport nearest_affine_walsh(const TruthTable& t, const BoundParams& bound) {
  check_bound_params(bound);
  const unsigned n = t.arity();
  const std::uint64_t size = t.num_bits();
  std::vector<std::int32_t> spectrum(size);
  for (std::uint64_t x = 0; x < size; ++x) spectrum[x] = t.bit(x) ? -1 : 1;
  for (std::uint64_t h = 1; h < size; h <<= 1) {
    for (std::uint64_t i = 0; i < size; i += 2 * h) {
      for (std::uint64_t j = i; j < i + h; ++j) {
        const std::int32_t a = spectrum[j];
        const std::int32_t b = spectrum[j + h];
        spectrum[j] = a + b;
        spectrum[j + h] = a - b;
      }
    }
  }
  // spectrum[a] = sum_x (-1)^(f(x) + a.x); distance to a.x is (2^n - W)/2,
  // distance to a.x + 1 is (2^n + W)/2.
  Candidate best;
  const auto total = static_cast<std::int64_t>(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    for (int c = 0; c < 2; ++c) {
      const std::int64_t w = spectrum[a];
      const auto d = static_cast<std::uint64_t>(c == 0 ? (total - w) / 2 : (total + w) / 2);
      if (d > best.distance) continue;
      std::vector<Anf::Monomial> terms;
      if (c) terms.push_back(0);
      for (std::uint64_t bits = a; bits != 0; bits &= bits - 1) {
        terms.push_back(Anf::Monomial{1} << std::countr_zero(bits));
      }
      offer(best, d, Anf(n, std::move(terms)));
    }
  }
  return finish(t, 1, DecompositionMethod::kExhaustive, std::move(*best.poly), bound);
}

DecompositionReport anf_truncation(const TruthTable& t, unsigned xi, const BoundParams& bound) {
  check_bound_params(bound);
  return finish(t, xi, DecompositionMethod::kAnfTruncation, table_to_anf(t).truncated(xi), bound);
}

DecompositionReport derivative_sieve(const TruthTable& t, unsigned xi,
                                     std::span<const DecimationOrder> orders,
                                     const BoundParams& bound) {
  check_bound_params(bound);
  const unsigned n = t.arity();
  if (xi + 1 > n) throw InvalidArgument("sieve needs xi + 1 <= arity");
  if (orders.empty()) throw InvalidArgument("sieve needs at least one order");
  std::uint64_t max_count = 0;
  for (const auto& order : orders) {
    if (order.size() != xi + 1) throw InvalidArgument("sieve orders must have length xi + 1");
    max_count = std::max(max_count, decimate_seq(t, order).popcount());
  }
  DecompositionReport report;
  report.arity = n;
  report.xi = xi;
  report.method = DecompositionMethod::kDerivativeSieve;
  report.sieve_density = Density{max_count, n - xi - 1};
  // (count / 2^(n-xi-1)) / 2^(xi+1) == count / 2^n
  report.remainder_density = Density{max_count, n};
  report.orders_checked = orders.size();
  report.bound = bound;
  report.meets_bound = report.remainder_density.value() <= remainder_bound(n, xi, bound);
  return report;
}

DecompositionReport derivative_sieve(const TruthTable& t, unsigned xi, const SamplingPolicy& policy,
                                     const BoundParams& bound) {
  if (xi + 1 > t.arity()) throw InvalidArgument("sieve needs xi + 1 <= arity");
  const auto sample = sample_orders(t.arity(), xi + 1, policy);
  return derivative_sieve(t, xi, sample.orders, bound);
}

std::vector<Density> degree_density_profile(const TruthTable& t) {
  const unsigned n = t.arity();
  if (n > kProfileMaxArity) {
    throw InvalidArgument("degree density profile limited to arity " + std::to_string(kProfileMaxArity));
  }
  const TruthTable coeffs = mobius_transform(t);
  std::vector<Density> profile;
  profile.reserve(n + 1);
  for (unsigned eta = 0; eta <= n; ++eta) {
    TruthTable part(n);
    for (std::uint64_t m = 0; m < coeffs.num_bits(); ++m) {
      if (coeffs.bit(m) && static_cast<unsigned>(std::popcount(m)) == eta) part.set_bit(m, true);
    }
    profile.push_back(mobius_transform(part).density());
  }
  return profile;
}

ProductRemainderRecord product_remainder_experiment(const TruthTable& a, const TruthTable& b,
                                                    unsigned xi) {
  if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity());
  if (a.arity() > kProductMaxArity) {
    throw InvalidArgument("product experiment limited to arity " + std::to_string(kProductMaxArity));
  }
  const unsigned n = a.arity();
  const Anf poly_a = table_to_anf(a).truncated(xi);
  const Anf poly_b = table_to_anf(b).truncated(xi);
  const TruthTable pa = anf_to_table(poly_a);
  const TruthTable pb = anf_to_table(poly_b);
  const TruthTable ra = a ^ pa;
  const TruthTable rb = b ^ pb;

  const TruthTable product = a & b;
  const TruthTable poly_product = pa & pb;
  const Anf poly_product_anf = table_to_anf(poly_product);
  const Anf poly_d = poly_product_anf.truncated(xi);

  ProductRemainderRecord rec;
  rec.xi = xi;
  rec.remainder_a = ra.density();
  rec.remainder_b = rb.density();
  rec.poly_a_times_rem_b = (pa & rb).density();
  rec.rem_a_times_poly_b = (ra & pb).density();
  rec.rem_a_times_rem_b = (ra & rb).density();
  rec.product_remainder = (product ^ anf_to_table(table_to_anf(product).truncated(xi))).density();
  rec.poly_product_remainder = (poly_product ^ anf_to_table(poly_d)).density();
  rec.terms_a = poly_a.size();
  rec.terms_b = poly_b.size();
  rec.terms_d = poly_d.size();

  rec.cross_terms_bounded = rec.poly_a_times_rem_b <= rec.remainder_b &&
                            rec.rem_a_times_poly_b <= rec.remainder_a &&
                            rec.rem_a_times_rem_b <= rec.remainder_a &&
                            rec.rem_a_times_rem_b <= rec.remainder_b;
  const std::uint64_t tt = rec.terms_a * rec.terms_b;
  rec.term_count_bounded = rec.terms_d <= tt;
  // count / 2^n <= tt / 2^xi, compared without rounding.
  const long double lhs = std::ldexp(static_cast<long double>(rec.poly_product_remainder.count),
                                     static_cast<int>(xi));
  const long double rhs = std::ldexp(static_cast<long double>(tt), static_cast<int>(n));
  rec.poly_remainder_bounded = lhs <= rhs;
  return rec;
}

SymmetricProjection nearest_symmetric(const TruthTable& t) {
  const unsigned n = t.arity();
  std::vector<std::uint64_t> ones(n + 1, 0);
  std::vector<std::uint64_t> total(n + 1, 0);
  for (std::uint64_t k = 0; k < t.num_bits(); ++k) {
    const auto s = static_cast<unsigned>(std::popcount(k));
    ++total[s];
    if (t.bit(k)) ++ones[s];
  }
  std::vector<std::uint8_t> v(n + 1);
  std::uint64_t dist = 0;
  for (unsigned s = 0; s <= n; ++s) {
    v[s] = 2 * ones[s] > total[s];
    dist += v[s] ? total[s] - ones[s] : ones[s];
  }
  return {SymmetricFunction(n, std::move(v)), dist};
}

}  // namespace bfrg
