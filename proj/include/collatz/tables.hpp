#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "collatz/natural.hpp"
#include "collatz/structure.hpp"

namespace collatz {

inline constexpr unsigned default_order_cap = 24;

struct TableOptions {
  // Orders above the cap are refused with ErrorCode::order_cap.
  unsigned order_cap = default_order_cap;
  // Row-range workers; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// 2^n terms first, first+2, ..., first + 2^{n+1} - 2.
struct PerfectGeneratingSequence {
  Natural first;
  unsigned order = 0;
  std::vector<Natural> terms;
};

// q terms first, first + 2^{n+1}, ..., first + (q-1) 2^{n+1}.
struct SuperSequencePrefix {
  Natural first;
  unsigned order = 0;
  std::vector<Natural> terms;
};

PerfectGeneratingSequence perfect_generating_sequence(const Natural& first, unsigned n,
                                                      const TableOptions& options = {});
SuperSequencePrefix super_sequence_prefix(const Natural& first, unsigned n, std::size_t q);

// 2^{n+1}: the generator step between isoform rows of order n.
Natural structural_period(unsigned n);

// One generated word per row, packed most significant bit first (n <= 63).
struct StructuralMatrix {
  unsigned order = 0;
  std::vector<std::uint64_t> codes;

  std::size_t rows() const { return codes.size(); }
  ParityWord row(std::size_t i) const { return ParityWord::from_code(codes[i], order, Convention::generated); }
};

// Rows of generated sequences of a common length, stored contiguously; the
// generator column is kept apart from the term columns.
class SequenceTable {
 public:
  SequenceTable() = default;

  // Generates every row; rows are split in contiguous ranges across workers and
  // the result does not depend on the worker count.
  static SequenceTable generate(std::vector<Natural> generators, unsigned order, unsigned threads = 0);

  unsigned order() const { return order_; }
  std::size_t rows() const { return generators_.size(); }

  const Natural& generator(std::size_t i) const { return generators_[i]; }
  std::span<const Natural> generators() const { return generators_; }
  std::span<const Natural> row(std::size_t i) const {
    return std::span<const Natural>(terms_).subspan(i * order_, order_);
  }
  const Natural& term(std::size_t i, std::size_t j) const { return terms_[i * order_ + j]; }
  const Natural& preterm(std::size_t i) const { return preterms_[i]; }
  GeneratedSequence sequence(std::size_t i) const;

  // Parity words of columns [first_column, first_column + columns).
  StructuralMatrix structure(unsigned first_column = 0) const;
  StructuralMatrix structure(unsigned first_column, unsigned columns) const;

  // New table holding the chosen rows in the given order.
  SequenceTable select(std::span<const std::size_t> indices) const;
  // Rows of several tables of equal order, in argument order.
  static SequenceTable stack(std::span<const SequenceTable> parts);
  // Same generators, rows continued to order() + extra columns.
  SequenceTable extended(unsigned extra, unsigned threads = 0) const;

 private:
  unsigned order_ = 0;
  std::vector<Natural> generators_;
  std::vector<Natural> terms_;
  std::vector<Natural> preterms_;
};

struct ChromoformMatrix {
  Natural first;
  SequenceTable table;

  unsigned order() const { return table.order(); }
};

struct FractionalChromologue {
  Natural fundamental_generator;
  SequenceTable table;

  unsigned order() const { return table.order(); }
  std::size_t row_count() const { return table.rows(); }
  // The word shared by every row.
  ParityWord characteristic_word() const;
};

// The 2^n generated sequences over perfect_generating_sequence(first, n).
// first must be 1 or 2 modulo 2^{n+1}.
ChromoformMatrix build_chromoform(const Natural& first, unsigned n, const TableOptions& options = {});

StructuralMatrix structural_matrix(const ChromoformMatrix& m);

// Parity-only path: the structural matrix of build_chromoform(first, n) from
// 64-bit residues, without big-integer terms. n <= 63.
StructuralMatrix chromoform_structure_fast(const Natural& first, unsigned n, const TableOptions& options = {});

// True iff the rows are exactly the 2^order words, each once.
bool verify_completeness(const StructuralMatrix& s);

FractionalChromologue build_chromologue(const Natural& fundamental, unsigned n, std::size_t q,
                                        const TableOptions& options = {});

// Continues each of the 2^k rows by k further steps. The k-column suffix of the
// result is a complete order-k table.
SequenceTable prolong_chromologue(const FractionalChromologue& c, unsigned k, unsigned threads = 0);

// Rows split by the parity of T_1; each half keeps all n columns and its
// columns 2..n form a complete order-(n-1) table.
struct PerfectDecomposition {
  SequenceTable even_first_term;
  SequenceTable odd_first_term;
};
PerfectDecomposition decompose_perfect(const ChromoformMatrix& m);

// Chromoforms over first + (k-1) 2^{n+1}, k = 1..count.
std::vector<ChromoformMatrix> polychromoform_prefix(const Natural& first, unsigned n, std::size_t count,
                                                    const TableOptions& options = {});

// Column j across the blocks: 2^n chromologues of `blocks.size()` rows.
std::vector<FractionalChromologue> super_decompose(std::span<const ChromoformMatrix> blocks);

}  // namespace collatz
