#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "collatz/natural.hpp"

namespace collatz {

// Exact m / 2^k. The stored (numerator, exponent) pair is kept as produced by
// the arithmetic; canonical() strips common powers of two. Comparison and
// equality are by value.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(Natural numerator, std::uint64_t log2_denominator = 0)
      : numerator_(std::move(numerator)), log2_denominator_(log2_denominator) {}
  DyadicRational(long value) : numerator_(value) {}

  const Natural& numerator() const { return numerator_; }
  std::uint64_t log2_denominator() const { return log2_denominator_; }

  DyadicRational canonical() const;
  bool is_canonical() const;
  bool is_integer() const;
  // Exact integer value; throws unless is_integer().
  Natural to_integer() const;
  Rational to_rational() const;

  // Same value re-expressed over 2^k (k must be >= the canonical exponent).
  DyadicRational with_log2_denominator(std::uint64_t k) const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const Natural& b);

  // Divide by 2^k.
  DyadicRational halved(std::uint64_t k = 1) const {
    return DyadicRational(numerator_, log2_denominator_ + k);
  }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b);
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

  // Canonical value as "m/d" with d = 2^k, or just "m" for integers.
  std::string str() const;

 private:
  Natural numerator_ = 0;
  std::uint64_t log2_denominator_ = 0;
};

}  // namespace collatz
