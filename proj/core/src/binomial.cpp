#include "bfrg/binomial.hpp"

#include <cmath>

#include "bfrg/error.hpp"

namespace bfrg {

std::vector<BigInt> binomial_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (2 * k <= n) {
      row[k] = row[k - 1] * (n - k + 1) / k;
    } else {
      row[k] = row[n - k];
    }
  }
  return row;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

long double log2_big(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("log2 of a non-positive integer");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 64) return std::log2(static_cast<long double>(x.convert_to<std::uint64_t>()));
  const BigInt top = x >> (msb - 63);
  const auto mantissa = top.convert_to<std::uint64_t>();
  return std::log2(static_cast<long double>(mantissa)) + static_cast<long double>(msb - 63);
}

long double log2_binomial_real(long double n, long double k) {
  if (k < 0 || k > n) throw InvalidArgument("log2_binomial_real needs 0 <= k <= n");
  const long double ln = std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
  return ln / std::log(2.0L);
}

void CompensatedSum::add(long double x) {
  const long double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

}  // namespace bfrg
