#include "collatz/dyadic.hpp"

#include <algorithm>

#include "collatz/error.hpp"

namespace collatz {

DyadicRational DyadicRational::canonical() const {
  if (numerator_ == 0) return DyadicRational(Natural(0), 0);
  std::uint64_t twos = mpz_scan1(numerator_.get_mpz_t(), 0);
  std::uint64_t shift = std::min<std::uint64_t>(twos, log2_denominator_);
  Natural reduced;
  mpz_fdiv_q_2exp(reduced.get_mpz_t(), numerator_.get_mpz_t(), shift);
  return DyadicRational(std::move(reduced), log2_denominator_ - shift);
}

bool DyadicRational::is_canonical() const {
  if (numerator_ == 0) return log2_denominator_ == 0;
  return log2_denominator_ == 0 || is_odd(numerator_);
}

bool DyadicRational::is_integer() const { return canonical().log2_denominator_ == 0; }

Natural DyadicRational::to_integer() const {
  DyadicRational c = canonical();
  if (c.log2_denominator_ != 0) fail(ErrorCode::internal, "dyadic value " + str() + " is not an integer");
  return c.numerator_;
}

Rational DyadicRational::to_rational() const {
  Rational q(numerator_, pow2(log2_denominator_));
  q.canonicalize();
  return q;
}

DyadicRational DyadicRational::with_log2_denominator(std::uint64_t k) const {
  DyadicRational c = canonical();
  if (k < c.log2_denominator_) fail(ErrorCode::internal, "cannot express " + str() + " over a smaller power of two");
  Natural scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), c.numerator_.get_mpz_t(), k - c.log2_denominator_);
  return DyadicRational(std::move(scaled), k);
}

namespace {

// Brings both operands to the larger exponent.
std::pair<Natural, Natural> aligned(const DyadicRational& a, const DyadicRational& b, std::uint64_t& k) {
  k = std::max(a.log2_denominator(), b.log2_denominator());
  Natural x, y;
  mpz_mul_2exp(x.get_mpz_t(), a.numerator().get_mpz_t(), k - a.log2_denominator());
  mpz_mul_2exp(y.get_mpz_t(), b.numerator().get_mpz_t(), k - b.log2_denominator());
  return {std::move(x), std::move(y)};
}

}  // namespace

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  std::uint64_t k = 0;
  auto [x, y] = aligned(a, b, k);
  return DyadicRational(x + y, k);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  std::uint64_t k = 0;
  auto [x, y] = aligned(a, b, k);
  return DyadicRational(x - y, k);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.numerator_ * b.numerator_, a.log2_denominator_ + b.log2_denominator_);
}

DyadicRational operator*(const DyadicRational& a, const Natural& b) {
  return DyadicRational(a.numerator_ * b, a.log2_denominator_);
}

bool operator==(const DyadicRational& a, const DyadicRational& b) {
  std::uint64_t k = 0;
  auto [x, y] = aligned(a, b, k);
  return x == y;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  std::uint64_t k = 0;
  auto [x, y] = aligned(a, b, k);
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicRational::str() const {
  DyadicRational c = canonical();
  if (c.log2_denominator_ == 0) return to_string(c.numerator_);
  return to_string(c.numerator_) + "/" + to_string(pow2(c.log2_denominator_));
}

}  // namespace collatz
