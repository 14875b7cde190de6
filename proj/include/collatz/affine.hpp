#pragma once

#include <cstdint>
#include <string>

#include "collatz/dyadic.hpp"

namespace collatz {

// x -> (3^odd_count / 2^length) * x + offset, exact.
//
// Maps compose in application order: a.then(b) applies a first. A word of
// parity bits composes into the map (3^M x + c) / 2^L, where c is the integer
// offset_numerator().
struct AffineMap {
  std::uint64_t odd_count = 0;
  std::uint64_t length = 0;
  DyadicRational offset;

  static AffineMap identity() { return {}; }
  // Single shortcut step for a term of the given parity.
  static AffineMap step(bool odd);

  AffineMap then(const AffineMap& next) const;

  Rational factor() const;
  // offset * 2^length; an integer whenever offset's denominator divides 2^length.
  Natural offset_numerator() const;

  DyadicRational apply(const DyadicRational& x) const;
  DyadicRational apply(const Natural& x) const { return apply(DyadicRational(x)); }
  Rational apply(const Rational& x) const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.odd_count == b.odd_count && a.length == b.length && a.offset == b.offset;
  }

  std::string str() const;
};

}  // namespace collatz
