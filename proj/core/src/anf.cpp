#include "bfrg/anf.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bfrg/error.hpp"

namespace bfrg {

namespace {

// Bits whose position has bit k clear, k < 6.
constexpr std::uint64_t kLowHalfMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

}  // namespace

Anf::Anf(unsigned arity, std::vector<Monomial> terms) : arity_(arity) {
  if (arity > TruthTable::kMaxArity) {
    throw InvalidArgument("ANF arity " + std::to_string(arity) + " exceeds maximum");
  }
  const Monomial valid = arity == 32 ? ~Monomial{0} : (Monomial{1} << arity) - 1;
  for (auto m : terms) {
    if ((m & ~valid) != 0) throw InvalidArgument("monomial references a variable above arity");
  }
  std::sort(terms.begin(), terms.end());
  // Equal terms cancel in pairs.
  std::vector<Monomial> reduced;
  reduced.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) & 1u) reduced.push_back(terms[i]);
    i = j;
  }
  terms_ = std::move(reduced);
}

Anf Anf::from_label_sets(unsigned arity, const std::vector<std::vector<unsigned>>& sets) {
  std::vector<Monomial> terms;
  terms.reserve(sets.size());
  for (const auto& s : sets) {
    for (auto label : s) {
      if (label < 1 || label > arity) {
        throw InvalidArgument("monomial label " + std::to_string(label) + " out of range");
      }
    }
    terms.push_back(from_labels(s));
  }
  return Anf(arity, std::move(terms));
}

unsigned Anf::degree() const noexcept {
  unsigned d = 0;
  for (auto m : terms_) d = std::max(d, static_cast<unsigned>(std::popcount(m)));
  return d;
}

bool Anf::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

Anf Anf::truncated(unsigned max_degree) const {
  Anf out;
  out.arity_ = arity_;
  for (auto m : terms_) {
    if (static_cast<unsigned>(std::popcount(m)) <= max_degree) out.terms_.push_back(m);
  }
  return out;
}

Anf Anf::homogeneous_part(unsigned degree) const {
  Anf out;
  out.arity_ = arity_;
  for (auto m : terms_) {
    if (static_cast<unsigned>(std::popcount(m)) == degree) out.terms_.push_back(m);
  }
  return out;
}

std::vector<unsigned> Anf::labels(Monomial m) {
  std::vector<unsigned> out;
  while (m != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

Anf::Monomial Anf::from_labels(std::span<const unsigned> labels) {
  Monomial m = 0;
  for (auto label : labels) {
    if (label < 1 || label > 32) throw InvalidArgument("monomial label out of range");
    const Monomial bit = Monomial{1} << (label - 1);
    if (m & bit) throw InvalidArgument("repeated label in monomial");
    m |= bit;
  }
  return m;
}

std::vector<std::vector<unsigned>> Anf::label_sets() const {
  std::vector<std::vector<unsigned>> out;
  out.reserve(terms_.size());
  for (auto m : terms_) out.push_back(labels(m));
  std::sort(out.begin(), out.end());
  return out;
}

Anf operator^(const Anf& a, const Anf& b) {
  if (a.arity() != b.arity()) throw ArityMismatch(a.arity(), b.arity());
  std::vector<Anf::Monomial> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Anf(a.arity(), std::move(terms));
}

TruthTable mobius_transform(const TruthTable& t) {
  TruthTable out = t;
  auto& words = TableAccess::words(out);
  const unsigned n = t.arity();
  for (unsigned k = 0; k < n && k < 6; ++k) {
    const unsigned shift = 1u << k;
    for (auto& w : words) w ^= (w & kLowHalfMasks[k]) << shift;
  }
  for (unsigned k = 6; k < n; ++k) {
    const std::size_t stride = std::size_t{1} << (k - 6);
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) words[base + stride + i] ^= words[base + i];
    }
  }
  words[0] &= TruthTable::word_mask(n);
  return out;
}

Anf table_to_anf(const TruthTable& t) {
  const TruthTable coeffs = mobius_transform(t);
  std::vector<Anf::Monomial> terms;
  const auto words = coeffs.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      terms.push_back(static_cast<Anf::Monomial>((i << 6) + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return Anf(t.arity(), std::move(terms));
}

TruthTable anf_to_table(const Anf& a) {
  TruthTable coeffs(a.arity());
  for (auto m : a.terms()) coeffs.set_bit(m, true);
  return mobius_transform(coeffs);
}

unsigned anf_degree(const TruthTable& t) {
  const TruthTable coeffs = mobius_transform(t);
  unsigned d = 0;
  const auto words = coeffs.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = words[i];
    while (w != 0) {
      const auto m = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
      d = std::max(d, static_cast<unsigned>(std::popcount(m)));
      w &= w - 1;
    }
  }
  return d;
}

bool lex_less(const Anf& a, const Anf& b) { return a.label_sets() < b.label_sets(); }

}  // namespace bfrg
