#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfrg {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, 0..n), exact.
std::vector<BigInt> binomial_row(std::uint64_t n);

/// C(n, k), exact, by the multiplicative formula.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// log2 of a positive big integer, to long double precision.
long double log2_big(const BigInt& x);

/// log2 C(n, k) via lgamma, for real-valued n >= k >= 0.
long double log2_binomial_real(long double n, long double k);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(long double x);
  long double value() const noexcept { return sum_ + compensation_; }

 private:
  long double sum_ = 0;
  long double compensation_ = 0;
};

}  // namespace bfrg
