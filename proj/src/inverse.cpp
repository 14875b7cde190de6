#include "collatz/inverse.hpp"

#include "collatz/error.hpp"

namespace collatz {

GeneratorResidue generator_for_word(const ParityWord& w) {
  if (w.convention() != Convention::inclusive) {
    fail(ErrorCode::convention_mismatch, "generator lifting expects an inclusive word; supply i_0 for " + w.str());
  }
  // Invariant after k bits: residue r < 2^k realizes i_0..i_{k-1} and
  // value = T_k(r). Moving to r + 2^k adds 3^{odd} to T_k, flipping its parity.
  Natural residue = 0;
  Natural value = 0;
  Natural three_pow = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const bool want = w[k];
    if (is_odd(value) != want) {
      residue += pow2(k);
      value += three_pow;
    }
    if (want) {
      value = 3 * value + 1;
      three_pow *= 3;
    }
    mpz_fdiv_q_2exp(value.get_mpz_t(), value.get_mpz_t(), 1);
  }
  GeneratorResidue g;
  g.modulus = pow2(w.size());
  g.minimal = residue == 0 ? g.modulus : residue;
  g.residue = std::move(residue);
  return g;
}

GeneratorResidue generator_for_generated_word(const ParityWord& w, bool generator_odd) {
  if (w.convention() != Convention::generated) {
    fail(ErrorCode::convention_mismatch, "expected a generated word, got " + w.str());
  }
  ParityWord head({static_cast<std::uint8_t>(generator_odd ? 1 : 0)}, Convention::inclusive);
  return generator_for_word(head.concat(w.retagged(Convention::inclusive)));
}

std::vector<GrowthRow> minimal_generator_growth(const ParityWord& base, const std::optional<ParityWord>& tail,
                                                std::uint64_t k_max) {
  require(k_max >= 1, "growth table needs k_max >= 1");
  std::vector<GrowthRow> rows;
  rows.reserve(k_max);
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    ParityWord word = base.repeated(k);
    if (tail) word = word.concat(*tail);
    rows.push_back({k, word.size(), generator_for_word(word).minimal});
  }
  return rows;
}

std::string to_string(CycleVerdict v) {
  switch (v) {
    case CycleVerdict::stable_integer_cycle:
      return "stable_integer_cycle";
    case CycleVerdict::no_positive_cycle:
      return "no_positive_cycle";
    case CycleVerdict::degenerate:
      return "degenerate";
  }
  return "degenerate";
}

CycleAnalysis cycle_fixed_point(const ParityWord& base) {
  if (base.convention() != Convention::inclusive) {
    fail(ErrorCode::convention_mismatch, "cycle analysis expects an inclusive period, got " + base.str());
  }
  CycleAnalysis c{base, word_affine(base), std::nullopt, CycleVerdict::degenerate};
  const Natural denominator = pow2(c.map.length) - pow3(c.map.odd_count);
  if (denominator == 0) return c;

  Rational x(c.map.offset_numerator(), denominator);
  x.canonicalize();
  c.fixed_point = x;
  c.verdict = CycleVerdict::no_positive_cycle;
  if (x.get_den() == 1 && x.get_num() >= 1) {
    // A positive integer fixed point is a cycle only if it actually follows the word.
    if (parity_vector(x.get_num(), base.size(), Convention::inclusive) == base) {
      c.verdict = CycleVerdict::stable_integer_cycle;
    }
  }
  return c;
}

DensityBound nonconvertible_bound(std::uint64_t n, const Rational& r) {
  require(r > 0 && r < 1, "the ratio r must lie strictly between 0 and 1");
  DensityBound d;
  d.order = n;
  d.ratio = r;
  d.scaled = r * Rational(pow2(n));
  d.scaled.canonicalize();
  Natural floor_scaled;
  mpz_fdiv_q(floor_scaled.get_mpz_t(), d.scaled.get_num_mpz_t(), d.scaled.get_den_mpz_t());
  d.first_above = floor_scaled + 1;
  const Natural below = d.first_above - 1;
  d.upper_count = Rational(pow2(n)) - ratio(below, Natural(2));
  d.upper_share = Rational(1) - ratio(below, pow2(n + 1));
  d.bound = Rational(1) - r / 2;
  d.upper_count.canonicalize();
  d.upper_share.canonicalize();
  d.bound.canonicalize();
  d.holds = d.upper_share >= d.bound;
  return d;
}

}  // namespace collatz
