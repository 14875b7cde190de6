#include <gtest/gtest.h>

#include <set>

#include "collatz/error.hpp"
#include "collatz/tables.hpp"
#include "oracle.hpp"

using namespace collatz;

namespace {

std::vector<Natural> nat(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Natural> row_of(const SequenceTable& t, std::size_t i) {
  const auto r = t.row(i);
  return {r.begin(), r.end()};
}

std::size_t find_row(const SequenceTable& t, const Natural& g) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.generator(i) == g) return i;
  }
  ADD_FAILURE() << "generator " << g << " missing";
  return 0;
}

std::vector<Natural> generators_of(const SequenceTable& t) { return {t.generators().begin(), t.generators().end()}; }

}  // namespace

TEST(Tables, PerfectGeneratingSequence) {
  auto y = perfect_generating_sequence(1, 4);
  ASSERT_EQ(y.terms.size(), 16u);
  for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(y.terms[j], 1 + 2 * static_cast<long>(j));
  y = perfect_generating_sequence(2, 3);
  EXPECT_EQ(y.terms, nat({2, 4, 6, 8, 10, 12, 14, 16}));
  EXPECT_EQ(perfect_generating_sequence(1, 1).terms, nat({1, 3}));
  try {
    perfect_generating_sequence(1, 25);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::order_cap);
  }
  EXPECT_NO_THROW(perfect_generating_sequence(1, 5, TableOptions{5, 1}));
}

TEST(Tables, SuperSequencePrefix) {
  EXPECT_EQ(super_sequence_prefix(7, 4, 4).terms, nat({7, 39, 71, 103}));
  EXPECT_EQ(super_sequence_prefix(1, 3, 3).terms, nat({1, 17, 33}));
  EXPECT_EQ(super_sequence_prefix(9, 6, 1).terms, nat({9}));
  EXPECT_EQ(structural_period(5), 64);
  EXPECT_THROW(super_sequence_prefix(9, 6, 0), Error);
}

TEST(Tables, ChromoformRows) {
  const ChromoformMatrix m = build_chromoform(1, 4);
  EXPECT_EQ(m.table.rows(), 16u);
  EXPECT_EQ(row_of(m.table, find_row(m.table, 7)), nat({11, 17, 26, 13}));
  const ChromoformMatrix e = build_chromoform(2, 3);
  EXPECT_EQ(row_of(e.table, find_row(e.table, 14)), nat({7, 11, 17}));
  const ChromoformMatrix o = build_chromoform(1, 1);
  EXPECT_EQ(row_of(o.table, 0), nat({2}));
  EXPECT_EQ(row_of(o.table, 1), nat({5}));
  for (std::size_t i = 0; i < m.table.rows(); ++i) {
    const auto traj = oracle::trajectory(m.table.generator(i), 5);
    EXPECT_EQ(row_of(m.table, i), std::vector<Natural>(traj.begin() + 1, traj.begin() + 5));
    EXPECT_EQ(m.table.preterm(i), traj[5]);
  }
  EXPECT_THROW(build_chromoform(3, 4), Error);
  EXPECT_NO_THROW(build_chromoform(33, 4));
  EXPECT_NO_THROW(build_chromoform(34, 4));
}

TEST(Tables, ThreadCountDoesNotChangeResults) {
  const ChromoformMatrix a = build_chromoform(1, 12, TableOptions{24, 1});
  const ChromoformMatrix b = build_chromoform(1, 12, TableOptions{24, 4});
  ASSERT_EQ(a.table.rows(), b.table.rows());
  for (std::size_t i = 0; i < a.table.rows(); ++i) {
    EXPECT_EQ(row_of(a.table, i), row_of(b.table, i));
    EXPECT_EQ(a.table.preterm(i), b.table.preterm(i));
  }
  EXPECT_EQ(structural_matrix(a).codes, structural_matrix(b).codes);
}

TEST(Tables, StructuralMatrix) {
  const ChromoformMatrix m = build_chromoform(1, 4);
  const StructuralMatrix s = structural_matrix(m);
  EXPECT_EQ(s.row(find_row(m.table, 7)), ParityWord::parse("G:1101"));
  EXPECT_EQ(s.row(find_row(m.table, 21)), ParityWord::parse("G:0000"));
  const StructuralMatrix one = structural_matrix(build_chromoform(1, 1));
  const std::set<std::uint64_t> codes(one.codes.begin(), one.codes.end());
  EXPECT_EQ(codes, (std::set<std::uint64_t>{0, 1}));
}

TEST(Tables, Completeness) {
  EXPECT_TRUE(verify_completeness(structural_matrix(build_chromoform(1, 4))));
  EXPECT_TRUE(verify_completeness(structural_matrix(build_chromoform(2, 4))));
  StructuralMatrix s = structural_matrix(build_chromoform(1, 4));
  s.codes[3] = s.codes[4];
  EXPECT_FALSE(verify_completeness(s));
  s.codes.pop_back();
  EXPECT_FALSE(verify_completeness(s));
  for (unsigned n = 1; n <= 10; ++n) {
    for (long first : {1L, 2L}) {
      const StructuralMatrix fast = chromoform_structure_fast(first, n);
      EXPECT_EQ(fast.codes, structural_matrix(build_chromoform(first, n)).codes);
      EXPECT_TRUE(verify_completeness(fast));
    }
  }
}

TEST(Tables, Chromologue) {
  FractionalChromologue c = build_chromologue(7, 4, 3);
  EXPECT_EQ(generators_of(c.table), nat({7, 39, 71}));
  EXPECT_EQ(row_of(c.table, 0), nat({11, 17, 26, 13}));
  EXPECT_EQ(row_of(c.table, 1), nat({59, 89, 134, 67}));
  EXPECT_EQ(row_of(c.table, 2), nat({107, 161, 242, 121}));
  EXPECT_EQ(c.characteristic_word(), ParityWord::parse("G:1101"));

  c = build_chromologue(5, 4, 2);
  EXPECT_EQ(generators_of(c.table), nat({5, 37}));
  EXPECT_EQ(row_of(c.table, 0), nat({8, 4, 2, 1}));
  EXPECT_EQ(row_of(c.table, 1), nat({56, 28, 14, 7}));

  const FractionalChromologue single = build_chromologue(27, 5, 1);
  EXPECT_EQ(row_of(single.table, 0), nat({41, 62, 31, 47, 71}));
}

TEST(Tables, Prolongation) {
  const FractionalChromologue c = build_chromologue(7, 4, 16);
  const SequenceTable p = prolong_chromologue(c, 4);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_EQ(row_of(p, 0), nat({11, 17, 26, 13, 20, 10, 5, 8}));
  EXPECT_TRUE(verify_completeness(p.structure(4)));

  for (long fundamental : {1L, 2L, 7L, 12L}) {
    const SequenceTable two = prolong_chromologue(build_chromologue(fundamental, 3, 2), 1);
    const StructuralMatrix suffix = two.structure(3);
    EXPECT_EQ(std::set<std::uint64_t>(suffix.codes.begin(), suffix.codes.end()), (std::set<std::uint64_t>{0, 1}));
  }

  const FractionalChromologue one = build_chromologue(9, 3, 1);
  const SequenceTable same = prolong_chromologue(one, 0);
  EXPECT_EQ(same.order(), 3u);
  EXPECT_EQ(row_of(same, 0), row_of(one.table, 0));
  EXPECT_THROW(prolong_chromologue(build_chromologue(7, 4, 3), 2), Error);
}

TEST(Tables, PerfectDecomposition) {
  const PerfectDecomposition d = decompose_perfect(build_chromoform(1, 4));
  std::vector<Natural> even_first, odd_first;
  for (long g = 1; g <= 29; g += 4) even_first.push_back(g);
  for (long g = 3; g <= 31; g += 4) odd_first.push_back(g);
  EXPECT_EQ(generators_of(d.even_first_term), even_first);
  EXPECT_EQ(generators_of(d.odd_first_term), odd_first);
  for (std::size_t i = 0; i < d.even_first_term.rows(); ++i) EXPECT_FALSE(is_odd(d.even_first_term.term(i, 0)));
  for (std::size_t i = 0; i < d.odd_first_term.rows(); ++i) EXPECT_TRUE(is_odd(d.odd_first_term.term(i, 0)));
  EXPECT_TRUE(verify_completeness(d.even_first_term.structure(1)));
  EXPECT_TRUE(verify_completeness(d.odd_first_term.structure(1)));

  const PerfectDecomposition two = decompose_perfect(build_chromoform(2, 2));
  EXPECT_TRUE(verify_completeness(two.even_first_term.structure(1)));
  EXPECT_TRUE(verify_completeness(two.odd_first_term.structure(1)));
  EXPECT_THROW(decompose_perfect(build_chromoform(1, 1)), Error);
}

TEST(Tables, Polychromoform) {
  const auto blocks = polychromoform_prefix(1, 3, 4);
  ASSERT_EQ(blocks.size(), 4u);
  EXPECT_EQ(blocks[0].first, 1);
  EXPECT_EQ(blocks[1].first, 17);
  EXPECT_EQ(blocks[2].first, 33);
  EXPECT_EQ(blocks[3].first, 49);
  const auto reference = structural_matrix(blocks[0]).codes;
  for (const auto& b : blocks) EXPECT_EQ(structural_matrix(b).codes, reference);
  const auto single = polychromoform_prefix(9, 2, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(generators_of(single[0].table), generators_of(build_chromoform(9, 2).table));
}

TEST(Tables, SuperDecomposition) {
  const auto blocks = polychromoform_prefix(1, 3, 5);
  const auto logues = super_decompose(blocks);
  ASSERT_EQ(logues.size(), 8u);
  EXPECT_EQ(generators_of(logues[3].table), nat({7, 23, 39, 55, 71}));
  EXPECT_EQ(generators_of(logues[0].table), nat({1, 17, 33, 49, 65}));
  for (const auto& c : logues) {
    const StructuralMatrix s = c.table.structure();
    for (auto code : s.codes) EXPECT_EQ(code, s.codes[0]);
  }
  const auto q1 = super_decompose(polychromoform_prefix(1, 3, 1));
  const ChromoformMatrix m = build_chromoform(1, 3);
  ASSERT_EQ(q1.size(), 8u);
  for (std::size_t j = 0; j < q1.size(); ++j) {
    EXPECT_EQ(q1[j].table.rows(), 1u);
    EXPECT_EQ(row_of(q1[j].table, 0), row_of(m.table, j));
  }
}

TEST(Tables, SelectStackExtend) {
  const ChromoformMatrix m = build_chromoform(1, 3);
  const std::vector<std::size_t> idx{2, 0};
  const SequenceTable s = m.table.select(idx);
  EXPECT_EQ(generators_of(s), nat({5, 1}));
  const std::vector<SequenceTable> parts{s, s};
  EXPECT_EQ(SequenceTable::stack(parts).rows(), 4u);
  const SequenceTable x = m.table.extended(2);
  EXPECT_EQ(x.order(), 5u);
  EXPECT_EQ(row_of(x, 3), nat({11, 17, 26, 13, 20}));
  EXPECT_THROW(m.table.structure(3), Error);
  EXPECT_THROW(m.table.structure(1, 3), Error);
}
