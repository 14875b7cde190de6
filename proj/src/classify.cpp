#include "collatz/classify.hpp"

#include <bit>

#include "collatz/error.hpp"
#include "collatz/kernel.hpp"

namespace collatz {

std::string to_string(Principal p) { return p == Principal::A ? "A" : "B"; }
std::string to_string(Growth g) { return g == Growth::Splus ? "Splus" : "Sminus"; }
std::string to_string(BSubtype b) { return b == BSubtype::Bplus ? "Bplus" : "Bminus"; }

std::uint64_t reversal_coefficient(std::uint64_t n) {
  require(n >= 1, "reversal coefficient needs n >= 1");
  // 3^k < 2^n  <=>  bit_length(3^k) <= n. Binary search on k in [0, n).
  std::uint64_t lo = 0, hi = n;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (bit_length(pow3(mid)) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

ReversalTable::ReversalTable(std::uint64_t max_n) : alpha_(max_n + 1, 0) {
  Natural next = 3;  // 3^{k+1}
  std::uint64_t k = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    while (bit_length(next) <= n) {
      next *= 3;
      ++k;
    }
    alpha_[n] = k;
  }
}

std::int64_t increment(std::uint64_t half_order) {
  require(half_order >= 1, "increment needs n >= 1");
  return static_cast<std::int64_t>(reversal_coefficient(2 * half_order)) - static_cast<std::int64_t>(half_order);
}

SequenceClass classify_sequence(const Natural& p, std::uint64_t n) {
  GeneratedSequence s = generate_sequence(p, n);
  std::uint64_t odd = 0;
  for (const auto& t : s.terms) odd += is_odd(t) ? 1 : 0;
  SequenceClass c;
  c.principal = odd > reversal_coefficient(n) ? Principal::A : Principal::B;
  c.growth = s.preterm > s.first_term() ? Growth::Splus : Growth::Sminus;
  if (c.principal == Principal::B) {
    c.b_subtype = s.preterm <= s.first_term() ? BSubtype::Bminus : BSubtype::Bplus;
  }
  return c;
}

WordClassification classify_word(const ParityWord& w) {
  if (w.convention() != Convention::generated) {
    fail(ErrorCode::convention_mismatch, "classification expects a generated word, got " + w.str());
  }
  WordClassification c;
  c.map = word_affine(w);
  c.principal = w.popcount() > reversal_coefficient(w.size()) ? Principal::A : Principal::B;
  if (c.principal == Principal::B) {
    Rational t(c.map.offset_numerator(), pow2(w.size()) - pow3(c.map.odd_count));
    t.canonicalize();
    c.threshold = t;
  }
  return c;
}

ReversalInfo chromologue_reversal_point(const Natural& fundamental, std::uint64_t n) {
  WordClassification c = classify_word(parity_vector(fundamental, n, Convention::generated));
  require(c.principal == Principal::B, "reversal points are only defined for B-type chromologues");
  ReversalInfo info;
  info.threshold = c.threshold;
  const Natural period = structural_period(static_cast<unsigned>(n));
  Natural p = fundamental;
  for (std::uint64_t i = 1;; ++i, p += period) {
    GeneratedSequence s = generate_sequence(p, n);
    if (Rational(s.first_term()) >= *c.threshold) break;
    if (s.preterm <= s.first_term()) {
      fail(ErrorCode::internal, "row below the reversal threshold is not increasing at " + to_string(p));
    }
    info.i_max = i;
    info.p_i_max = p;
  }
  return info;
}

Natural count_by_odd(std::uint64_t n, std::uint64_t k) {
  require(k <= n, "cannot choose more odd terms than the length");
  Natural c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

namespace {

// C(N, 0..N) by the multiplicative recurrence.
std::vector<Natural> binomial_row(std::uint64_t order) {
  std::vector<Natural> row(order + 1);
  row[0] = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    row[k + 1] = row[k] * static_cast<unsigned long>(order - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  return row;
}

TypeCounts make_counts(std::uint64_t order, Natural a) {
  TypeCounts t;
  t.order = order;
  const Natural total = pow2(order);
  t.b = total - a;
  t.a = std::move(a);
  t.r_A = Rational(t.a, total);
  t.r_B = Rational(t.b, total);
  t.r_A.canonicalize();
  t.r_B.canonicalize();
  return t;
}

}  // namespace

TypeCountRoutes type_count_routes(std::uint64_t order) {
  require(order >= 2 && order % 2 == 0, "type counting is defined for even orders 2n >= 2");
  const std::uint64_t half = order / 2;
  const std::uint64_t alpha = reversal_coefficient(order);
  const std::int64_t e = static_cast<std::int64_t>(alpha) - static_cast<std::int64_t>(half);
  require(e >= 0 && static_cast<std::uint64_t>(e) < half + 1, "increment outside [0, n]");
  const auto row = binomial_row(order);

  TypeCountRoutes r;
  r.order = order;
  r.increment = e;
  for (std::uint64_t k = alpha + 1; k <= order; ++k) r.direct_a += row[k];
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(half) - e - 1; ++k) r.symmetric_a += row[k];
  r.complement_b = pow2(order) - r.direct_a;
  Natural band = 0;
  for (std::int64_t k = 1; k <= e; ++k) band += row[half + k];
  r.composite_b = r.symmetric_a + row[half] + 2 * band;
  return r;
}

TypeCounts count_types(std::uint64_t order) {
  TypeCountRoutes r = type_count_routes(order);
  if (r.direct_a != r.symmetric_a || r.complement_b != r.composite_b) {
    fail(ErrorCode::internal, "type count routes disagree at order " + std::to_string(order));
  }
  return make_counts(order, std::move(r.direct_a));
}

TypeCounts count_types_direct(std::uint64_t order) {
  require(order >= 1, "order must be >= 1");
  const std::uint64_t alpha = reversal_coefficient(order);
  const auto row = binomial_row(order);
  Natural a = 0;
  for (std::uint64_t k = alpha + 1; k <= order; ++k) a += row[k];
  return make_counts(order, std::move(a));
}

TrendReport proportion_trend(std::span<const std::uint64_t> orders) {
  TrendReport report;
  report.rows.reserve(orders.size());
  for (std::uint64_t order : orders) {
    report.rows.push_back(count_types(order));
    const auto& rows = report.rows;
    if (rows.size() >= 2 && !(rows.back().r_A < rows[rows.size() - 2].r_A)) report.strictly_decreasing = false;
  }
  return report;
}

PolychromologueCounts polychromologue_counts(std::uint64_t n, const TableOptions& options) {
  require(n >= 1, "order must be >= 1");
  constexpr std::uint64_t big_integer_table_limit = 16;
  const std::uint64_t alpha = reversal_coefficient(n);
  PolychromologueCounts out;
  out.order = n;
  const Natural total = pow2(n);

  if (n <= big_integer_table_limit && n <= options.order_cap) {
    ChromoformMatrix m = build_chromoform(1, static_cast<unsigned>(n), options);
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < m.table.rows(); ++i) {
      std::uint64_t odd = 0;
      for (const auto& t : m.table.row(i)) odd += is_odd(t) ? 1 : 0;
      a += odd > alpha ? 1 : 0;
    }
    out.h_A = static_cast<unsigned long>(a);
    out.method = "table";
  } else if (n <= options.order_cap && n <= 40) {
    StructuralMatrix s = chromoform_structure_fast(1, static_cast<unsigned>(n), options);
    std::uint64_t a = 0;
    for (std::uint64_t code : s.codes) a += static_cast<std::uint64_t>(std::popcount(code)) > alpha ? 1 : 0;
    out.h_A = static_cast<unsigned long>(a);
    out.method = "parity";
  } else {
    out.h_A = count_types_direct(n).a;
    out.method = "words";
  }
  out.h_B = total - out.h_A;
  out.r_A = Rational(out.h_A, total);
  out.r_B = Rational(out.h_B, total);
  out.r_A.canonicalize();
  out.r_B.canonicalize();
  return out;
}

}  // namespace collatz
