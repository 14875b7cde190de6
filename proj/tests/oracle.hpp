#pragma once

// Brute-force reference computations for the tests. Everything here works by
// plain iteration or exhaustive search and shares no code with the library
// beyond the big-integer type.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

inline mpz_class step(const mpz_class& x) {
  if (mpz_odd_p(x.get_mpz_t())) return mpz_class((3 * x + 1) / 2);
  return x / 2;
}

// x_0 = p, x_1, ..., x_k.
inline std::vector<mpz_class> trajectory(const mpz_class& p, std::uint64_t k) {
  std::vector<mpz_class> t{p};
  for (std::uint64_t i = 0; i < k; ++i) t.push_back(step(t.back()));
  return t;
}

inline mpz_class iterate(mpz_class x, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) x = step(x);
  return x;
}

inline int parity(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

// i_0 .. i_{n-1}.
inline std::vector<std::uint8_t> inclusive_bits(const mpz_class& p, std::uint64_t n) {
  std::vector<std::uint8_t> bits;
  mpz_class x = p;
  for (std::uint64_t i = 0; i < n; ++i) {
    bits.push_back(static_cast<std::uint8_t>(parity(x)));
    x = step(x);
  }
  return bits;
}

// i_1 .. i_n.
inline std::vector<std::uint8_t> generated_bits(const mpz_class& p, std::uint64_t n) {
  auto bits = inclusive_bits(p, n + 1);
  bits.erase(bits.begin());
  return bits;
}

inline std::uint64_t odd_count(const std::vector<std::uint8_t>& bits) {
  std::uint64_t c = 0;
  for (auto b : bits) c += b;
  return c;
}

// Applies the word step by step to a rational value.
inline mpq_class apply_word(const std::vector<std::uint8_t>& bits, mpq_class x) {
  for (auto b : bits) {
    x = b ? mpq_class((3 * x + 1) / 2) : mpq_class(x / 2);
    x.canonicalize();
  }
  return x;
}

// Smallest P >= 1 whose first bits.size() inclusive parities equal bits.
inline mpz_class smallest_generator(const std::vector<std::uint8_t>& bits) {
  for (mpz_class p = 1;; ++p) {
    if (inclusive_bits(p, bits.size()) == bits) return p;
  }
}

// Largest k with 3^k < 2^n, by counting up.
inline std::uint64_t alpha(std::uint64_t n) {
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
  mpz_class three = 1;
  std::uint64_t k = 0;
  while (3 * three < two) {
    three *= 3;
    ++k;
  }
  return k;
}

// Words of length n whose odd count M satisfies 3^M > 2^n.
inline std::uint64_t count_a_words(unsigned n) {
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
  std::uint64_t a = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    mpz_class three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(__builtin_popcountll(w)));
    if (three > two) ++a;
  }
  return a;
}

inline mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace oracle
