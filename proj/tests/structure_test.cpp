#include <gtest/gtest.h>

#include <random>

#include "collatz/error.hpp"
#include "collatz/kernel.hpp"
#include "collatz/structure.hpp"
#include "oracle.hpp"

using namespace collatz;

namespace {

ParityWord inc(std::vector<std::uint8_t> bits) { return ParityWord(std::move(bits), Convention::inclusive); }
ParityWord gen(std::vector<std::uint8_t> bits) { return ParityWord(std::move(bits), Convention::generated); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no collatz::Error thrown";
  return ErrorCode::internal;
}

}  // namespace

TEST(ParityWord, ParseAndPrint) {
  const ParityWord w = ParityWord::parse("G:0101");
  EXPECT_EQ(w.convention(), Convention::generated);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.str(), "G:0101");
  EXPECT_EQ(w.bit_string(), "0101");
  EXPECT_EQ(w.popcount(), 2u);
  EXPECT_EQ(w.code(), 0b0101u);
  EXPECT_EQ(ParityWord::from_code(0b101, 3, Convention::inclusive), inc({1, 0, 1}));
  EXPECT_EQ(code_of([] { ParityWord::parse("I:"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { ParityWord::parse("X:01"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { ParityWord::parse("I:012"); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { ParityWord({}, Convention::inclusive); }), ErrorCode::invalid_argument);
}

TEST(ParityWord, ConventionsNeverMix) {
  EXPECT_EQ(code_of([] { (void)(inc({1, 0}) == gen({1, 0})); }), ErrorCode::convention_mismatch);
  EXPECT_EQ(code_of([] { inc({1}).concat(gen({0})); }), ErrorCode::convention_mismatch);
  EXPECT_EQ(inc({1, 0}).repeated(3), inc({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(inc({1}).concat(inc({0, 1})), inc({1, 0, 1}));
  EXPECT_FALSE(inc({1, 0}) == inc({1, 1}));
}

TEST(Structure, GenerateSequence) {
  GeneratedSequence s = generate_sequence(27, 5);
  EXPECT_EQ(s.terms, (std::vector<Natural>{41, 62, 31, 47, 71}));
  s = generate_sequence(7, 5);
  EXPECT_EQ(s.terms, (std::vector<Natural>{11, 17, 26, 13, 20}));
  EXPECT_EQ(s.preterm, 10);
  EXPECT_EQ(s.preterm, oracle::iterate(7, 6));
  s = generate_sequence(2, 1);
  EXPECT_EQ(s.terms, (std::vector<Natural>{1}));
  EXPECT_EQ(s.preterm, 2);
  EXPECT_THROW(generate_sequence(0, 3), Error);
  EXPECT_THROW(generate_sequence(3, 0), Error);
}

TEST(Structure, ParityVector) {
  EXPECT_EQ(parity_vector(27, 5, Convention::generated), gen({1, 0, 1, 1, 1}));
  EXPECT_EQ(parity_vector(7, 6, Convention::inclusive), inc({1, 1, 1, 0, 1, 0}));
  for (std::uint64_t k = 1; k <= 30; ++k) {
    EXPECT_EQ(parity_vector(pow2(k), k, Convention::inclusive).popcount(), 0u);
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Natural p = Natural(std::to_string(rng())) * Natural(std::to_string(rng())) + 1;
    const std::uint64_t n = 1 + rng() % 70;
    EXPECT_EQ(parity_vector(p, n, Convention::inclusive), inc(oracle::inclusive_bits(p, n)));
    EXPECT_EQ(parity_vector(p, n, Convention::generated), gen(oracle::generated_bits(p, n)));
  }
}

TEST(Structure, FastParityPathMatchesBigIntegers) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    Natural p = Natural(std::to_string(rng())) * pow2(64) + Natural(std::to_string(rng()));
    if (p == 0) p = 1;
    const unsigned n = 1 + rng() % 63;
    Natural low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), p.get_mpz_t(), 64);
    const std::uint64_t lo = std::stoull(low.get_str());
    EXPECT_EQ(generated_code_fast(lo, n), parity_vector(p, n, Convention::generated).code());
  }
}

TEST(Structure, ChromaticRendering) {
  EXPECT_EQ(render_chromatic(inc({1, 1, 0})), "##.");
  EXPECT_EQ(render_chromatic(inc({0})), ".");
  EXPECT_EQ(render_chromatic(inc({1, 0, 1, 1, 0, 1})), "#.##.#");
  EXPECT_EQ(render_chromatic(inc({1, 0}), Glyphs{'X', 'o'}), "Xo");
  EXPECT_EQ(parse_chromatic("#.##.#", Convention::generated), gen({1, 0, 1, 1, 0, 1}));
  EXPECT_EQ(code_of([] { parse_chromatic("#x", Convention::generated); }), ErrorCode::parse);
  EXPECT_EQ(code_of([] { render_chromatic(inc({1}), Glyphs{'#', '#'}); }), ErrorCode::invalid_argument);
}

TEST(Structure, Isoformy) {
  EXPECT_TRUE(is_isoform(11, 139, 7, Convention::inclusive));
  EXPECT_EQ(parity_vector(139, 7, Convention::inclusive).str(), "I:1101001");
  EXPECT_TRUE(is_isoform(11, 139, 6));
  EXPECT_FALSE(is_isoform(11, 139, 7));
  EXPECT_TRUE(is_isoform(8, 24, 3, Convention::inclusive));
  EXPECT_TRUE(is_isoform(7, 71, 5));
  EXPECT_FALSE(is_isoform(7, 9, 5));
  const std::vector<Natural> family{7, 71, 135, 199};
  for (const auto& a : family) {
    for (const auto& b : family) EXPECT_TRUE(is_isoform(a, b, 5));
  }
  EXPECT_EQ(code_of([] { is_isoform(7, 8, 3); }), ErrorCode::invalid_argument);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t n = 1 + rng() % 12;
    const Natural p1 = 1 + rng() % 5000;
    Natural p2 = 1 + rng() % 5000;
    if (is_odd(p1) != is_odd(p2)) p2 += 1;
    const bool by_oracle = oracle::generated_bits(p1, n) == oracle::generated_bits(p2, n);
    EXPECT_EQ(is_isoform(p1, p2, n), by_oracle);
    const bool inclusive_oracle = oracle::inclusive_bits(p1, n) == oracle::inclusive_bits(p2, n);
    EXPECT_EQ(is_isoform(p1, p2, n, Convention::inclusive), inclusive_oracle);
  }
}

TEST(Structure, ShiftImage) {
  EXPECT_EQ(shift_image(7, 5, 1, 1), 107);
  EXPECT_EQ(shift_image(7, 5, 1, 6), 91);
  EXPECT_EQ(oracle::iterate(71, 6), 91);
  for (std::uint64_t k = 1; k <= 6; ++k) EXPECT_EQ(shift_image(27, 5, 0, k), syracuse_iter(27, k));
  EXPECT_THROW(shift_image(7, 5, 1, 0), Error);
  EXPECT_THROW(shift_image(7, 5, 1, 7), Error);
  EXPECT_THROW(shift_image(7, 5, -1, 1), Error);
}

TEST(Structure, WordAffine) {
  AffineMap m = word_affine(inc({1, 0, 1}));
  EXPECT_EQ(m.odd_count, 2u);
  EXPECT_EQ(m.length, 3u);
  EXPECT_EQ(m.offset_numerator(), 7);
  m = word_affine(inc({1, 0}));
  EXPECT_EQ(m.factor(), Rational(3, 4));
  EXPECT_EQ(m.offset_numerator(), 1);
  m = word_affine(inc({0, 0, 0, 0}));
  EXPECT_EQ(m.factor(), Rational(1, 16));
  EXPECT_EQ(m.offset_numerator(), 0);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::uint8_t> bits(1 + rng() % 40);
    for (auto& b : bits) b = rng() & 1;
    const Rational x(static_cast<long>(rng() % 1000) - 500, 1 + static_cast<long>(rng() % 7));
    EXPECT_EQ(word_affine(gen(bits)).apply(x), oracle::apply_word(bits, x));
  }
}
