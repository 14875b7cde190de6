#include "collatz/tables.hpp"

#include "collatz/error.hpp"
#include "collatz/kernel.hpp"
#include "parallel.hpp"

namespace collatz {

namespace {

void check_order(unsigned n, const TableOptions& options) {
  require(n >= 1, "order must be >= 1");
  if (n > options.order_cap) {
    fail(ErrorCode::order_cap, "order " + std::to_string(n) + " exceeds the configured cap of " +
                                   std::to_string(options.order_cap));
  }
}

void advance(Natural& t) {
  if (is_odd(t)) {
    t *= 3;
    t += 1;
  }
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
}

std::uint64_t low_word(const Natural& n) {
  Natural r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(), 64);
  std::uint64_t lo = 0;
  mpz_export(&lo, nullptr, -1, sizeof lo, 0, 0, r.get_mpz_t());
  return lo;
}

}  // namespace

PerfectGeneratingSequence perfect_generating_sequence(const Natural& first, unsigned n, const TableOptions& options) {
  check_order(n, options);
  require(first >= 1, "first generator must be a positive integer");
  PerfectGeneratingSequence y{first, n, {}};
  const std::size_t count = std::size_t{1} << n;
  y.terms.reserve(count);
  for (std::size_t j = 0; j < count; ++j) y.terms.push_back(first + 2 * Natural(static_cast<unsigned long>(j)));
  return y;
}

SuperSequencePrefix super_sequence_prefix(const Natural& first, unsigned n, std::size_t q) {
  require(n >= 1, "order must be >= 1");
  require(q >= 1, "super-sequence prefix needs at least one term");
  require(first >= 1, "first generator must be a positive integer");
  SuperSequencePrefix x{first, n, {}};
  x.terms.reserve(q);
  const Natural period = structural_period(n);
  Natural t = first;
  for (std::size_t i = 0; i < q; ++i) {
    x.terms.push_back(t);
    t += period;
  }
  return x;
}

Natural structural_period(unsigned n) { return pow2(n + 1); }

SequenceTable SequenceTable::generate(std::vector<Natural> generators, unsigned order, unsigned threads) {
  require(order >= 1, "table order must be >= 1");
  SequenceTable t;
  t.order_ = order;
  t.generators_ = std::move(generators);
  for (const auto& g : t.generators_) require(g >= 1, "generators must be positive integers");
  t.terms_.resize(t.generators_.size() * order);
  t.preterms_.resize(t.generators_.size());
  detail::parallel_ranges(t.generators_.size(), threads, [&t, order](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Natural v = t.generators_[i];
      for (unsigned j = 0; j < order; ++j) {
        advance(v);
        t.terms_[i * order + j] = v;
      }
      advance(v);
      t.preterms_[i] = std::move(v);
    }
  });
  return t;
}

GeneratedSequence SequenceTable::sequence(std::size_t i) const {
  auto r = row(i);
  return GeneratedSequence{generators_[i], std::vector<Natural>(r.begin(), r.end()), preterms_[i]};
}

StructuralMatrix SequenceTable::structure(unsigned first_column) const {
  require(first_column < order_, "structure column offset out of range");
  return structure(first_column, order_ - first_column);
}

StructuralMatrix SequenceTable::structure(unsigned first_column, unsigned columns) const {
  require(columns >= 1 && columns <= 63, "structural matrices hold 1..63 columns");
  require(first_column + columns <= order_, "structure column range out of bounds");
  StructuralMatrix s{columns, std::vector<std::uint64_t>(rows())};
  for (std::size_t i = 0; i < rows(); ++i) {
    std::uint64_t code = 0;
    for (unsigned j = first_column; j < first_column + columns; ++j) {
      code = (code << 1) | (is_odd(term(i, j)) ? 1u : 0u);
    }
    s.codes[i] = code;
  }
  return s;
}

SequenceTable SequenceTable::select(std::span<const std::size_t> indices) const {
  SequenceTable t;
  t.order_ = order_;
  t.generators_.reserve(indices.size());
  t.terms_.reserve(indices.size() * order_);
  t.preterms_.reserve(indices.size());
  for (std::size_t i : indices) {
    require(i < rows(), "row index out of range");
    t.generators_.push_back(generators_[i]);
    auto r = row(i);
    t.terms_.insert(t.terms_.end(), r.begin(), r.end());
    t.preterms_.push_back(preterms_[i]);
  }
  return t;
}

SequenceTable SequenceTable::stack(std::span<const SequenceTable> parts) {
  require(!parts.empty(), "nothing to stack");
  SequenceTable t;
  t.order_ = parts.front().order_;
  for (const auto& p : parts) {
    require(p.order_ == t.order_, "stacked tables must share their order");
    t.generators_.insert(t.generators_.end(), p.generators_.begin(), p.generators_.end());
    t.terms_.insert(t.terms_.end(), p.terms_.begin(), p.terms_.end());
    t.preterms_.insert(t.preterms_.end(), p.preterms_.begin(), p.preterms_.end());
  }
  return t;
}

SequenceTable SequenceTable::extended(unsigned extra, unsigned threads) const {
  if (extra == 0) return *this;
  SequenceTable t;
  t.order_ = order_ + extra;
  t.generators_ = generators_;
  t.terms_.resize(rows() * t.order_);
  t.preterms_.resize(rows());
  detail::parallel_ranges(rows(), threads, [this, &t, extra](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto old = row(i);
      std::copy(old.begin(), old.end(), t.terms_.begin() + static_cast<std::ptrdiff_t>(i * t.order_));
      Natural v = preterms_[i];
      for (unsigned j = 0; j < extra; ++j) {
        t.terms_[i * t.order_ + order_ + j] = v;
        advance(v);
      }
      t.preterms_[i] = std::move(v);
    }
  });
  return t;
}

ParityWord FractionalChromologue::characteristic_word() const {
  auto r = table.row(0);
  std::vector<std::uint8_t> bits(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) bits[j] = is_odd(r[j]) ? 1 : 0;
  return ParityWord(std::move(bits), Convention::generated);
}

ChromoformMatrix build_chromoform(const Natural& first, unsigned n, const TableOptions& options) {
  check_order(n, options);
  require(first >= 1, "first generator must be a positive integer");
  Natural residue;
  mpz_fdiv_r_2exp(residue.get_mpz_t(), first.get_mpz_t(), n + 1);
  require(residue == 1 || residue == 2, "a perfect generating sequence starts at 1 or 2 modulo 2^(n+1)");
  auto y = perfect_generating_sequence(first, n, options);
  return ChromoformMatrix{first, SequenceTable::generate(std::move(y.terms), n, options.threads)};
}

StructuralMatrix structural_matrix(const ChromoformMatrix& m) { return m.table.structure(0); }

StructuralMatrix chromoform_structure_fast(const Natural& first, unsigned n, const TableOptions& options) {
  check_order(n, options);
  require(n <= 63, "the parity-only path supports orders up to 63");
  require(first >= 1, "first generator must be a positive integer");
  const std::uint64_t base = low_word(first);
  StructuralMatrix s{n, std::vector<std::uint64_t>(std::size_t{1} << n)};
  detail::parallel_ranges(s.codes.size(), options.threads, [&s, base, n](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) s.codes[j] = generated_code_fast(base + 2 * j, n);
  });
  return s;
}

bool verify_completeness(const StructuralMatrix& s) {
  if (s.order == 0 || s.order > 40) return false;
  const std::uint64_t total = std::uint64_t{1} << s.order;
  if (s.codes.size() != total) return false;
  std::vector<std::uint64_t> seen((total + 63) / 64, 0);
  for (std::uint64_t code : s.codes) {
    if (code >= total) return false;
    std::uint64_t& slot = seen[code >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (code & 63);
    if (slot & bit) return false;
    slot |= bit;
  }
  return true;
}

FractionalChromologue build_chromologue(const Natural& fundamental, unsigned n, std::size_t q,
                                        const TableOptions& options) {
  auto x = super_sequence_prefix(fundamental, n, q);
  return FractionalChromologue{fundamental, SequenceTable::generate(std::move(x.terms), n, options.threads)};
}

SequenceTable prolong_chromologue(const FractionalChromologue& c, unsigned k, unsigned threads) {
  require(k <= 40, "prolongation width too large");
  require(c.row_count() == (std::size_t{1} << k), "a perfect prolongation by k columns needs exactly 2^k rows");
  return c.table.extended(k, threads);
}

PerfectDecomposition decompose_perfect(const ChromoformMatrix& m) {
  require(m.order() >= 2, "perfect decomposition needs order >= 2");
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < m.table.rows(); ++i) {
    (is_odd(m.table.term(i, 0)) ? odd : even).push_back(i);
  }
  return PerfectDecomposition{m.table.select(even), m.table.select(odd)};
}

std::vector<ChromoformMatrix> polychromoform_prefix(const Natural& first, unsigned n, std::size_t count,
                                                    const TableOptions& options) {
  require(count >= 1, "polychromoform prefix needs at least one block");
  auto starts = super_sequence_prefix(first, n, count);
  std::vector<ChromoformMatrix> blocks;
  blocks.reserve(count);
  for (const auto& s : starts.terms) blocks.push_back(build_chromoform(s, n, options));
  return blocks;
}

std::vector<FractionalChromologue> super_decompose(std::span<const ChromoformMatrix> blocks) {
  require(!blocks.empty(), "super-decomposition needs at least one block");
  const std::size_t rows = blocks.front().table.rows();
  for (const auto& b : blocks) {
    require(b.order() == blocks.front().order() && b.table.rows() == rows, "blocks must share order and size");
  }
  std::vector<FractionalChromologue> out;
  out.reserve(rows);
  std::vector<SequenceTable> parts(blocks.size());
  for (std::size_t j = 0; j < rows; ++j) {
    const std::size_t index[] = {j};
    for (std::size_t b = 0; b < blocks.size(); ++b) parts[b] = blocks[b].table.select(index);
    out.push_back(FractionalChromologue{blocks.front().table.generator(j), SequenceTable::stack(parts)});
  }
  return out;
}

}  // namespace collatz
