#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collatz/affine.hpp"
#include "collatz/natural.hpp"
#include "collatz/structure.hpp"
#include "collatz/tables.hpp"

namespace collatz {

// A: 3^{M~}/2^n > 1. B: below 1 (equality never happens).
enum class Principal { A, B };
// Splus: preterm > T_1. Sminus: preterm <= T_1.
enum class Growth { Splus, Sminus };
enum class BSubtype { Bplus, Bminus };

std::string to_string(Principal p);
std::string to_string(Growth g);
std::string to_string(BSubtype b);

struct SequenceClass {
  Principal principal = Principal::B;
  Growth growth = Growth::Sminus;
  // Only for principal B; Bminus includes preterm == T_1.
  std::optional<BSubtype> b_subtype;
};

// alpha_n: the largest k with 3^k < 2^n, by exact integer comparison.
std::uint64_t reversal_coefficient(std::uint64_t n);

// alpha_1 .. alpha_max from one running power of three.
class ReversalTable {
 public:
  explicit ReversalTable(std::uint64_t max_n);
  std::uint64_t alpha(std::uint64_t n) const { return alpha_.at(n); }
  std::uint64_t max_n() const { return alpha_.size() - 1; }

 private:
  std::vector<std::uint64_t> alpha_;
};

// e = alpha_{2n} - n.
std::int64_t increment(std::uint64_t half_order);

SequenceClass classify_sequence(const Natural& p, std::uint64_t n);

// For B-type words, every realization with T_1 >= threshold is non-increasing
// and those with T_1 < threshold are increasing.
struct WordClassification {
  Principal principal = Principal::B;
  // T_1 -> T_{n+1} for any realization of the word.
  AffineMap map;
  // phi~ / (1 - F~) = c / (2^n - 3^M); absent for A words.
  std::optional<Rational> threshold;
};

// w must use the generated convention; its length is the generated length n.
WordClassification classify_word(const ParityWord& w);

struct ReversalInfo {
  std::optional<Rational> threshold;
  // 1-based rank of the last increasing row along the super-sequence.
  std::optional<std::uint64_t> i_max;
  std::optional<Natural> p_i_max;
};

// Walks the super-sequence of `fundamental` while T_1 stays below the threshold.
// Rejects A-type chromologues.
ReversalInfo chromologue_reversal_point(const Natural& fundamental, std::uint64_t n);

// C(n, k): words of length n with exactly k odd terms.
Natural count_by_odd(std::uint64_t n, std::uint64_t k);

struct TypeCounts {
  std::uint64_t order = 0;
  Natural a;
  Natural b;
  Rational r_A;
  Rational r_B;
};

// The independent routes to the A/B counts of an even order 2n.
struct TypeCountRoutes {
  std::uint64_t order = 0;
  std::int64_t increment = 0;
  Natural direct_a;     // sum_{k > alpha} C(2n, k)
  Natural symmetric_a;  // sum_{k=0}^{n-e-1} C(2n, k)
  Natural complement_b; // 2^{2n} - a
  Natural composite_b;  // a + C(2n, n) + 2 sum_{k=1}^{e} C(2n, n+k)
};

TypeCountRoutes type_count_routes(std::uint64_t order);

// Even orders only; throws ErrorCode::internal if the routes disagree.
TypeCounts count_types(std::uint64_t order);
// Direct sum for any order >= 1.
TypeCounts count_types_direct(std::uint64_t order);

struct TrendReport {
  std::vector<TypeCounts> rows;
  // r_A strictly decreases along the supplied order sequence.
  bool strictly_decreasing = true;
};

TrendReport proportion_trend(std::span<const std::uint64_t> orders);

struct PolychromologueCounts {
  std::uint64_t order = 0;
  Natural h_A;
  Natural h_B;
  Rational r_A;
  Rational r_B;
  // "table" (big-integer rows), "parity" (64-bit parity path) or "words".
  std::string method;
};

// A/B rows of build_chromoform(1, n). Orders past the table cap are counted in
// word space, which is exact because the table holds every word once.
PolychromologueCounts polychromologue_counts(std::uint64_t n, const TableOptions& options = {});

}  // namespace collatz
