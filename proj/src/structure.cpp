#include "collatz/structure.hpp"

#include <algorithm>
#include <numeric>

#include "collatz/error.hpp"
#include "collatz/kernel.hpp"

namespace collatz {

char convention_tag(Convention c) { return c == Convention::inclusive ? 'I' : 'G'; }

ParityWord::ParityWord(std::vector<std::uint8_t> bits, Convention convention)
    : bits_(std::move(bits)), convention_(convention) {
  require(!bits_.empty(), "parity word must not be empty");
  for (auto& b : bits_) {
    require(b <= 1, "parity word bits must be 0 or 1");
  }
}

ParityWord ParityWord::from_code(std::uint64_t code, std::size_t length, Convention convention) {
  require(length >= 1 && length <= 64, "word code length must be in [1, 64]");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = (code >> (length - 1 - i)) & 1u;
  return ParityWord(std::move(bits), convention);
}

ParityWord ParityWord::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'I' && text[0] != 'G')) {
    fail(ErrorCode::parse, "parity word must look like I:1011 or G:0101, got '" + std::string(text) + "'");
  }
  Convention convention = text[0] == 'I' ? Convention::inclusive : Convention::generated;
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size() - 2);
  for (char c : text.substr(2)) {
    if (c != '0' && c != '1') fail(ErrorCode::parse, "invalid bit '" + std::string(1, c) + "' in parity word");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return ParityWord(std::move(bits), convention);
}

std::size_t ParityWord::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t ParityWord::code() const {
  require(bits_.size() <= 64, "word too long to pack into 64 bits");
  std::uint64_t code = 0;
  for (auto b : bits_) code = (code << 1) | b;
  return code;
}

ParityWord ParityWord::concat(const ParityWord& tail) const {
  if (tail.convention_ != convention_) fail(ErrorCode::convention_mismatch, "cannot concatenate words of different conventions");
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
  return ParityWord(std::move(bits), convention_);
}

ParityWord ParityWord::repeated(std::size_t times) const {
  require(times >= 1, "repeat count must be >= 1");
  std::vector<std::uint8_t> bits;
  bits.reserve(bits_.size() * times);
  for (std::size_t i = 0; i < times; ++i) bits.insert(bits.end(), bits_.begin(), bits_.end());
  return ParityWord(std::move(bits), convention_);
}

std::string ParityWord::bit_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::string ParityWord::str() const { return std::string(1, convention_tag(convention_)) + ":" + bit_string(); }

bool operator==(const ParityWord& a, const ParityWord& b) {
  if (a.convention_ != b.convention_) {
    fail(ErrorCode::convention_mismatch, "comparing " + a.str() + " with " + b.str());
  }
  return a.bits_ == b.bits_;
}

GeneratedSequence generate_sequence(const Natural& p, std::uint64_t n) {
  require(p >= 1, "generator must be a positive integer");
  require(n >= 1, "generated sequence length must be >= 1");
  GeneratedSequence s;
  s.generator = p;
  s.terms.reserve(n);
  Natural t = syracuse_step(p);
  for (std::uint64_t k = 0; k < n; ++k) {
    s.terms.push_back(t);
    t = syracuse_step(t);
  }
  s.preterm = std::move(t);
  return s;
}

ParityWord parity_vector(const Natural& p, std::uint64_t n, Convention convention) {
  require(p >= 1, "generator must be a positive integer");
  require(n >= 1, "parity vector length must be >= 1");
  Natural t = convention == Convention::generated ? syracuse_step(p) : p;
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    bits[k] = is_odd(t) ? 1 : 0;
    if (k + 1 < n) t = syracuse_step(t);
  }
  return ParityWord(std::move(bits), convention);
}

std::uint64_t generated_code_fast(std::uint64_t p_low, unsigned n) {
  require(n >= 1 && n <= 63, "fast parity path supports 1 <= n <= 63");
  auto step = [](std::uint64_t t) { return (t & 1u) ? t + (t >> 1) + 1 : t >> 1; };
  std::uint64_t t = step(p_low);
  std::uint64_t code = 0;
  for (unsigned k = 0; k < n; ++k) {
    code = (code << 1) | (t & 1u);
    t = step(t);
  }
  return code;
}

std::string render_chromatic(const ParityWord& word, Glyphs glyphs) {
  require(glyphs.one != glyphs.zero, "chromatic glyphs must differ");
  std::string s(word.size(), glyphs.zero);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i]) s[i] = glyphs.one;
  }
  return s;
}

ParityWord parse_chromatic(std::string_view line, Convention convention, Glyphs glyphs) {
  require(glyphs.one != glyphs.zero, "chromatic glyphs must differ");
  std::vector<std::uint8_t> bits;
  bits.reserve(line.size());
  for (char c : line) {
    if (c == glyphs.one) {
      bits.push_back(1);
    } else if (c == glyphs.zero) {
      bits.push_back(0);
    } else {
      fail(ErrorCode::parse, "unexpected glyph '" + std::string(1, c) + "' in chromatic line");
    }
  }
  return ParityWord(std::move(bits), convention);
}

namespace {

void check_isoformy_inputs(const Natural& p1, const Natural& p2, Convention convention) {
  require(p1 >= 1 && p2 >= 1, "isoformy needs positive generators");
  if (convention == Convention::generated) {
    require(is_odd(p1) == is_odd(p2), "isoformy of generated words needs generators of the same parity");
  }
}

}  // namespace

bool isoform_by_vector(const Natural& p1, const Natural& p2, std::uint64_t n, Convention convention) {
  check_isoformy_inputs(p1, p2, convention);
  return parity_vector(p1, n, convention) == parity_vector(p2, n, convention);
}

bool isoform_by_congruence(const Natural& p1, const Natural& p2, std::uint64_t n, Convention convention) {
  check_isoformy_inputs(p1, p2, convention);
  Natural diff = abs(p2 - p1);
  const std::uint64_t bits = convention == Convention::generated ? n + 1 : n;
  return mpz_divisible_2exp_p(diff.get_mpz_t(), bits) != 0;
}

bool is_isoform(const Natural& p1, const Natural& p2, std::uint64_t n, Convention convention) {
  require(n >= 1, "isoformy length must be >= 1");
  bool by_vector = isoform_by_vector(p1, p2, n, convention);
  bool by_congruence = isoform_by_congruence(p1, p2, n, convention);
  if (by_vector != by_congruence) {
    fail(ErrorCode::internal, "isoformy criteria disagree for " + to_string(p1) + ", " + to_string(p2));
  }
  return by_vector;
}

Natural shift_image(const Natural& p, std::uint64_t n, const Natural& m, std::uint64_t k) {
  require(p >= 1, "generator must be a positive integer");
  require(m >= 0, "shift multiplier must be non-negative");
  require(k >= 1 && k <= n + 1, "shift image index must lie in [1, n+1]");
  Natural shift;
  mpz_mul_2exp(shift.get_mpz_t(), pow3(imparity_count(p, k - 1)).get_mpz_t(), n + 1 - k);
  return syracuse_iter(p, k) + shift * m;
}

AffineMap word_affine(const ParityWord& word) {
  // Built directly as (3^M x + c) / 2^L: c' = 3c + 2^j for a 1 at position j.
  Natural c = 0;
  std::uint64_t odd = 0;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j]) {
      c = 3 * c + pow2(j);
      ++odd;
    }
  }
  return {odd, word.size(), DyadicRational(c, word.size())};
}

}  // namespace collatz
