#include "collatz/affine.hpp"

namespace collatz {

AffineMap AffineMap::step(bool odd) {
  if (odd) return {1, 1, DyadicRational(Natural(1), 1)};
  return {0, 1, DyadicRational(Natural(0), 1)};
}

AffineMap AffineMap::then(const AffineMap& next) const {
  // next(this(x)) = F_next * (F_this x + offset) + offset_next
  DyadicRational carried = (offset * pow3(next.odd_count)).halved(next.length);
  return {odd_count + next.odd_count, length + next.length, carried + next.offset};
}

Rational AffineMap::factor() const {
  Rational q(pow3(odd_count), pow2(length));
  q.canonicalize();
  return q;
}

Natural AffineMap::offset_numerator() const {
  return offset.with_log2_denominator(length).numerator();
}

DyadicRational AffineMap::apply(const DyadicRational& x) const {
  return (x * pow3(odd_count)).halved(length) + offset;
}

Rational AffineMap::apply(const Rational& x) const {
  Rational y = factor() * x + offset.to_rational();
  y.canonicalize();
  return y;
}

std::string AffineMap::str() const {
  return "x -> (3^" + std::to_string(odd_count) + " x + " + to_string(offset_numerator()) + ") / 2^" +
         std::to_string(length);
}

}  // namespace collatz
