#pragma once

#include <nlohmann/json.hpp>

#include <span>
#include <string>

#include "collatz/classify.hpp"
#include "collatz/inverse.hpp"
#include "collatz/structure.hpp"
#include "collatz/tables.hpp"

// Stable text encodings of library results. Integers that may exceed 64 bits
// are written as decimal strings; every encoder is a pure function of its
// input, so equal inputs give byte-identical output. Lines end in '\n'.
namespace collatz {

using Json = nlohmann::ordered_json;

inline constexpr unsigned default_decimal_digits = 20;

// Fixed-point rendering with `digits` fractional digits, rounded half to even.
// Display only: comparisons always use the exact rational.
std::string render_decimal(const Rational& q, unsigned digits = default_decimal_digits);

Json rational_json(const Rational& q);

// generator,t_1,...,t_n per row; no header.
std::string table_csv(const SequenceTable& t);
Json table_json(const SequenceTable& t);
// "<generator> | <glyphs>" per row.
std::string table_text(const SequenceTable& t, Glyphs glyphs = {});

// generator,b_1,...,b_n with 0/1 fields; no header. `generators` may be empty.
std::string structure_csv(const StructuralMatrix& s, std::span<const Natural> generators);
Json structure_json(const StructuralMatrix& s, std::span<const Natural> generators);
std::string structure_text(const StructuralMatrix& s, std::span<const Natural> generators, Glyphs glyphs = {});

Json to_json(const SequenceClass& c);
Json to_json(const WordClassification& c, unsigned digits = default_decimal_digits);
Json to_json(const ReversalInfo& r);
Json to_json(const TypeCounts& t, unsigned digits = default_decimal_digits);
Json to_json(const PolychromologueCounts& p, unsigned digits = default_decimal_digits);
Json to_json(const GeneratorResidue& g);
Json to_json(const CycleAnalysis& c);
Json to_json(const DensityBound& d, unsigned digits = default_decimal_digits);

// order,a,b,r_A_decimal with a header line.
std::string trend_csv(const TrendReport& t, unsigned digits = default_decimal_digits);
Json trend_json(const TrendReport& t, unsigned digits = default_decimal_digits);
// k,length,minimal_generator with a header line.
std::string growth_csv(std::span<const GrowthRow> rows);
Json growth_json(std::span<const GrowthRow> rows);

// JSON text with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace collatz
