#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bfrg {

/// Malformed arguments: out-of-range labels, bad probabilities, bad config.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands of a binary operation (or an assignment) disagree on arity.
class ArityMismatch : public InvalidArgument {
 public:
  ArityMismatch(unsigned expected, unsigned actual)
      : InvalidArgument("arity mismatch: expected " + std::to_string(expected) +
                        ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  unsigned expected() const noexcept { return expected_; }
  unsigned actual() const noexcept { return actual_; }

 private:
  unsigned expected_;
  unsigned actual_;
};

/// BFRG file could not be decoded.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kBadMagic, kBadVersion, kBadArity, kTruncated, kTrailingData, kBadPadding, kIo };

  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Exhaustive search refused because the candidate space is above the hard cap.
/// The candidate count is 2^monomial_count.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::uint64_t monomial_count, unsigned cap_log2)
      : std::runtime_error("exhaustive search needs 2^" + std::to_string(monomial_count) +
                           " candidate polynomials, cap is 2^" + std::to_string(cap_log2)),
        monomial_count_(monomial_count) {}

  std::uint64_t monomial_count() const noexcept { return monomial_count_; }

 private:
  std::uint64_t monomial_count_;
};

}  // namespace bfrg
