#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz/affine.hpp"
#include "collatz/natural.hpp"
#include "collatz/structure.hpp"

// From parity words back to generators, and the periodic-word analysis built
// on top of it.
namespace collatz {

// The residue class of generators realizing an inclusive word of length L.
struct GeneratorResidue {
  Natural modulus;  // 2^L
  Natural residue;  // in [0, 2^L)
  Natural minimal;  // in [1, 2^L]: residue, or 2^L when residue is 0
};

// Lifts the residue one bit at a time. Every finite inclusive word has exactly
// one residue class.
GeneratorResidue generator_for_word(const ParityWord& w);
// Generated words do not fix the generator's own parity; the caller supplies it.
GeneratorResidue generator_for_generated_word(const ParityWord& w, bool generator_odd);

struct GrowthRow {
  std::uint64_t repeats = 0;
  std::uint64_t length = 0;
  Natural minimal;
};

// Minimal generator of base^k + tail for k = 1..k_max.
std::vector<GrowthRow> minimal_generator_growth(const ParityWord& base, const std::optional<ParityWord>& tail,
                                                std::uint64_t k_max);

enum class CycleVerdict { stable_integer_cycle, no_positive_cycle, degenerate };
std::string to_string(CycleVerdict v);

struct CycleAnalysis {
  ParityWord word;
  AffineMap map;
  // c / (2^L - 3^M); absent when degenerate.
  std::optional<Rational> fixed_point;
  CycleVerdict verdict = CycleVerdict::degenerate;
};

// base is one inclusive period.
CycleAnalysis cycle_fixed_point(const ParityWord& base);

// Lower bound on the share of order-n rows whose generators exceed 2^n r.
struct DensityBound {
  std::uint64_t order = 0;
  Rational ratio;           // r
  Rational scaled;          // r_n = 2^n r
  Natural first_above;      // P_0(n) = floor(r_n) + 1
  Rational upper_count;     // z+(n) = 2^n - (P_0(n) - 1) / 2
  Rational upper_share;     // rho+(n) = 1 - (P_0(n) - 1) / 2^{n+1}
  Rational bound;           // 1 - r/2
  bool holds = false;       // upper_share >= bound
};

DensityBound nonconvertible_bound(std::uint64_t n, const Rational& r);

}  // namespace collatz
