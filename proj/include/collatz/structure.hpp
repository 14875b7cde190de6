#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/affine.hpp"
#include "collatz/natural.hpp"

namespace collatz {

// Which indicators a word holds: inclusive words start at i_0 (the generator's
// own parity), generated words start at i_1.
enum class Convention { inclusive, generated };

char convention_tag(Convention c);

// A finite, non-empty parity word tagged with its convention.
//
// Comparing words of different conventions throws ErrorCode::convention_mismatch:
// the two conventions are offset by one index and silently equating them is
// always a bug.
class ParityWord {
 public:
  ParityWord(std::vector<std::uint8_t> bits, Convention convention);

  // Word of `length` bits read from `code`, most significant bit first.
  static ParityWord from_code(std::uint64_t code, std::size_t length, Convention convention);
  // "I:1011" / "G:0100".
  static ParityWord parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  Convention convention() const { return convention_; }
  std::size_t popcount() const;

  // Packs the bits most significant first; requires size() <= 64.
  std::uint64_t code() const;

  ParityWord concat(const ParityWord& tail) const;
  ParityWord repeated(std::size_t times) const;
  // Same bits, other tag. Only for callers that have reasoned about the shift.
  ParityWord retagged(Convention convention) const { return ParityWord(bits_, convention); }

  // Unpadded bit string without the convention prefix.
  std::string bit_string() const;
  // Bit string with its "I:"/"G:" prefix.
  std::string str() const;

  friend bool operator==(const ParityWord& a, const ParityWord& b);

 private:
  std::vector<std::uint8_t> bits_;
  Convention convention_;
};

// T_1(P) .. T_n(P) plus the preterm T_{n+1}(P). The generator itself is not a
// term.
struct GeneratedSequence {
  Natural generator;
  std::vector<Natural> terms;
  Natural preterm;

  std::size_t length() const { return terms.size(); }
  const Natural& first_term() const { return terms.front(); }
};

GeneratedSequence generate_sequence(const Natural& p, std::uint64_t n);

// Generated: (i_1 .. i_n). Inclusive: (i_0 .. i_{n-1}).
ParityWord parity_vector(const Natural& p, std::uint64_t n, Convention convention);

// Generated word of P from P mod 2^64 alone, as a code (most significant bit
// = i_1). Valid for n <= 63 since T_k(P) mod 2^{64-k} depends only on
// P mod 2^64.
std::uint64_t generated_code_fast(std::uint64_t p_low, unsigned n);

struct Glyphs {
  char one = '#';
  char zero = '.';
};

std::string render_chromatic(const ParityWord& word, Glyphs glyphs = {});
ParityWord parse_chromatic(std::string_view line, Convention convention, Glyphs glyphs = {});

// Isoformy of two generators over words of length n. With generated words
// (the default) the generators must share parity and the modulus is 2^{n+1};
// inclusive words cover the generator itself and the modulus is 2^n.
//
// Words compared bit by bit.
bool isoform_by_vector(const Natural& p1, const Natural& p2, std::uint64_t n,
                       Convention convention = Convention::generated);
// |P2 - P1| divisible by the modulus.
bool isoform_by_congruence(const Natural& p1, const Natural& p2, std::uint64_t n,
                           Convention convention = Convention::generated);
// Both criteria; they must agree.
bool is_isoform(const Natural& p1, const Natural& p2, std::uint64_t n, Convention convention = Convention::generated);

// T_k(P) + 2^{n+1-k} 3^{M_{k-1}(P)} m, the k-th image of P + 2^{n+1} m.
Natural shift_image(const Natural& p, std::uint64_t n, const Natural& m, std::uint64_t k);

// Composition, in word order, of x -> (3x+1)/2 for 1 and x -> x/2 for 0.
AffineMap word_affine(const ParityWord& word);

}  // namespace collatz
