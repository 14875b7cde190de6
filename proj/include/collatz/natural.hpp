#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace collatz {

// Arbitrary-precision integers. Sequence terms and generators are >= 1; the
// type itself is signed so fixed points and differences can share it.
using Natural = mpz_class;
using Rational = mpq_class;

inline bool is_odd(const Natural& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

inline Natural pow2(std::uint64_t e) {
  Natural r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

inline Natural pow3(std::uint64_t e) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

// Bit length; 0 for zero.
inline std::uint64_t bit_length(const Natural& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

// num / den in lowest terms.
inline Rational ratio(const Natural& num, const Natural& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Natural& n) { return n.get_str(10); }
std::string to_string(const Rational& q);

// Strict decimal parsing: optional leading '-', digits only.
Natural parse_integer(std::string_view text);
// Integer >= 1.
Natural parse_natural(std::string_view text);
// "a/b", "a" or a finite decimal "0.25".
Rational parse_rational(std::string_view text);

}  // namespace collatz
