#include <gtest/gtest.h>

#include <random>

#include "collatz/error.hpp"
#include "collatz/inverse.hpp"
#include "oracle.hpp"

using namespace collatz;

namespace {

ParityWord inc(std::vector<std::uint8_t> bits) { return ParityWord(std::move(bits), Convention::inclusive); }

ParityWord ones(std::size_t n) { return inc(std::vector<std::uint8_t>(n, 1)); }

}  // namespace

TEST(Inverse, GeneratorForWord) {
  GeneratorResidue g = generator_for_word(ones(3));
  EXPECT_EQ(g.minimal, 7);
  EXPECT_EQ(g.modulus, 8);
  g = generator_for_word(inc({1, 0, 1, 1}));
  EXPECT_EQ(g.minimal, 9);
  EXPECT_EQ(g.modulus, 16);
  g = generator_for_word(inc({0}));
  EXPECT_EQ(g.residue, 0);
  EXPECT_EQ(g.minimal, 2);
  EXPECT_THROW(generator_for_word(ParityWord::parse("G:11")), Error);
}

TEST(Inverse, AllOnesWords) {
  const std::vector<std::pair<std::size_t, long>> expected{{3, 7}, {5, 31}, {7, 127}, {9, 511}, {10, 1023}};
  for (const auto& [length, minimal] : expected) EXPECT_EQ(generator_for_word(ones(length)).minimal, minimal);
  for (std::size_t L = 1; L <= 100; ++L) EXPECT_EQ(generator_for_word(ones(L)).minimal, pow2(L) - 1);
}

TEST(Inverse, ExhaustiveAgainstSearch) {
  for (unsigned L = 1; L <= 10; ++L) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << L); ++code) {
      const ParityWord w = ParityWord::from_code(code, L, Convention::inclusive);
      const std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
      EXPECT_EQ(generator_for_word(w).minimal, oracle::smallest_generator(bits)) << w.str();
    }
  }
}

TEST(Inverse, GeneratedWords) {
  const ParityWord w = ParityWord::parse("G:101");
  const GeneratorResidue odd = generator_for_generated_word(w, true);
  const GeneratorResidue even = generator_for_generated_word(w, false);
  EXPECT_EQ(odd.modulus, 16);
  EXPECT_TRUE(is_odd(odd.minimal));
  EXPECT_FALSE(is_odd(even.minimal));
  EXPECT_EQ(oracle::generated_bits(odd.minimal, 3), (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_EQ(oracle::generated_bits(even.minimal, 3), (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_THROW(generator_for_generated_word(ParityWord::parse("I:101"), true), Error);
}

TEST(Inverse, RandomLongWordsRoundTrip) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::uint8_t> bits(1 + rng() % 200);
    for (auto& b : bits) b = rng() & 1;
    const GeneratorResidue g = generator_for_word(inc(bits));
    EXPECT_EQ(oracle::inclusive_bits(g.minimal, bits.size()), bits);
    EXPECT_EQ(oracle::inclusive_bits(g.minimal + g.modulus * (1 + rng() % 1000), bits.size()), bits);
    EXPECT_LT(g.residue, g.modulus);
  }
}

TEST(Inverse, GrowthTables) {
  auto rows = minimal_generator_growth(inc({1, 0, 1}), inc({1}), 4);
  ASSERT_EQ(rows.size(), 4u);
  const std::vector<long> expected{9, 121, 1017, 8185};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].repeats, i + 1);
    EXPECT_EQ(rows[i].length, 3 * (i + 1) + 1);
    EXPECT_EQ(rows[i].minimal, expected[i]);
    // One period of the word maps N to (9N+7)/8 along the trajectory.
    const auto t = oracle::trajectory(rows[i].minimal, rows[i].length);
    for (std::size_t k = 0; k + 3 <= 3 * (i + 1); k += 3) EXPECT_EQ(8 * t[k + 3], 9 * t[k] + 7);
  }

  rows = minimal_generator_growth(inc({1}), std::nullopt, 10);
  for (const auto& r : rows) EXPECT_EQ(r.minimal, pow2(r.length) - 1);

  rows = minimal_generator_growth(inc({1, 0}), std::nullopt, 12);
  for (const auto& r : rows) EXPECT_EQ(r.minimal, 1);
  EXPECT_THROW(minimal_generator_growth(inc({1}), std::nullopt, 0), Error);
}

TEST(Inverse, CycleFixedPoints) {
  CycleAnalysis c = cycle_fixed_point(inc({1, 0}));
  EXPECT_EQ(*c.fixed_point, Rational(1));
  EXPECT_EQ(c.verdict, CycleVerdict::stable_integer_cycle);
  c = cycle_fixed_point(inc({0, 1}));
  EXPECT_EQ(*c.fixed_point, Rational(2));
  EXPECT_EQ(c.verdict, CycleVerdict::stable_integer_cycle);
  c = cycle_fixed_point(inc({1, 0, 1}));
  EXPECT_EQ(*c.fixed_point, Rational(-7));
  EXPECT_EQ(c.verdict, CycleVerdict::no_positive_cycle);
  c = cycle_fixed_point(inc({1, 1, 0}));
  EXPECT_EQ(*c.fixed_point, Rational(-5));
  EXPECT_EQ(c.verdict, CycleVerdict::no_positive_cycle);
  c = cycle_fixed_point(inc({1, 0, 1, 0}));
  EXPECT_EQ(c.verdict, CycleVerdict::stable_integer_cycle);
  EXPECT_EQ(to_string(CycleVerdict::degenerate), "degenerate");
  EXPECT_THROW(cycle_fixed_point(ParityWord::parse("G:10")), Error);
}

TEST(Inverse, CycleSweepFindsOnlyTrivialCycle) {
  for (unsigned L = 1; L <= 14; ++L) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << L); ++code) {
      const ParityWord w = ParityWord::from_code(code, L, Convention::inclusive);
      const CycleAnalysis c = cycle_fixed_point(w);
      ASSERT_NE(c.verdict, CycleVerdict::degenerate);
      if (c.verdict != CycleVerdict::stable_integer_cycle) continue;
      // Only (1,0) or (0,1) repeated.
      const std::uint64_t pattern = (code >> (L - 2)) & 3;
      EXPECT_EQ(L % 2, 0u) << w.str();
      EXPECT_TRUE(pattern == 0b10 || pattern == 0b01) << w.str();
      EXPECT_EQ(w, ParityWord::from_code(pattern, 2, Convention::inclusive).repeated(L / 2)) << w.str();
    }
  }
}

TEST(Inverse, DensityBound) {
  DensityBound d = nonconvertible_bound(10, Rational(1, 2));
  EXPECT_GE(d.upper_share, Rational(3, 4));
  EXPECT_TRUE(d.holds);
  d = nonconvertible_bound(4, Rational(1, 2));
  EXPECT_EQ(d.scaled, Rational(8));
  EXPECT_EQ(d.first_above, 9);
  EXPECT_EQ(d.upper_share, Rational(3, 4));
  EXPECT_EQ(d.upper_count, Rational(12));
  d = nonconvertible_bound(40, Rational(1, 1 << 20));
  EXPECT_GT(d.upper_share, Rational(999999, 1000000));
  // Direct count of the odd generators above 2^n r among 1, 3, ..., 2^{n+1} - 1.
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (const Rational r : {Rational(1, 2), Rational(1, 3), Rational(5, 7)}) {
      d = nonconvertible_bound(n, r);
      long above = 0;
      for (long p = 1; p < (2L << n); p += 2) above += Rational(p) > r * Rational(pow2(n)) ? 1 : 0;
      EXPECT_LE(abs(Rational(above) - d.upper_count), Rational(1, 2)) << n;
      EXPECT_TRUE(d.holds);
    }
  }
  EXPECT_THROW(nonconvertible_bound(10, Rational(1)), Error);
  EXPECT_THROW(nonconvertible_bound(10, Rational(0)), Error);
}
