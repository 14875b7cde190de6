#include "collatz/report.hpp"

#include <sstream>

namespace collatz {

std::string render_decimal(const Rational& value, unsigned digits) {
  Rational q = value;
  q.canonicalize();
  const bool negative = q < 0;
  Natural num = abs(q.get_num());
  const Natural& den = q.get_den();

  Natural scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Natural quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), Natural(num * scale).get_mpz_t(), den.get_mpz_t());
  const int half = cmp(Natural(2 * remainder), den);
  if (half > 0 || (half == 0 && is_odd(quotient))) quotient += 1;

  std::string s = quotient.get_str(10);
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && quotient != 0) s.insert(0, "-");
  return s;
}

Json rational_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return Json{{"num", to_string(c.get_num())}, {"den", to_string(c.get_den())}};
}

std::string table_csv(const SequenceTable& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    out << t.generator(i);
    for (const auto& v : t.row(i)) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

Json table_json(const SequenceTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Json terms = Json::array();
    for (const auto& v : t.row(i)) terms.push_back(to_string(v));
    rows.push_back(Json{{"generator", to_string(t.generator(i))}, {"terms", std::move(terms)},
                        {"preterm", to_string(t.preterm(i))}});
  }
  return Json{{"order", t.order()}, {"row_count", t.rows()}, {"rows", std::move(rows)}};
}

std::string table_text(const SequenceTable& t, Glyphs glyphs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::string line(t.order(), glyphs.zero);
    for (unsigned j = 0; j < t.order(); ++j) {
      if (is_odd(t.term(i, j))) line[j] = glyphs.one;
    }
    out << t.generator(i) << " | " << line << '\n';
  }
  return out.str();
}

std::string structure_csv(const StructuralMatrix& s, std::span<const Natural> generators) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    bool first = true;
    if (!generators.empty()) {
      out << generators[i];
      first = false;
    }
    for (unsigned j = 0; j < s.order; ++j) {
      if (!first) out << ',';
      out << ((s.codes[i] >> (s.order - 1 - j)) & 1u);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Json structure_json(const StructuralMatrix& s, std::span<const Natural> generators) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.rows(); ++i) {
    Json row;
    if (!generators.empty()) row["generator"] = to_string(generators[i]);
    row["word"] = s.row(i).bit_string();
    rows.push_back(std::move(row));
  }
  return Json{{"order", s.order}, {"row_count", s.rows()}, {"rows", std::move(rows)}};
}

std::string structure_text(const StructuralMatrix& s, std::span<const Natural> generators, Glyphs glyphs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (!generators.empty()) out << generators[i] << " | ";
    out << render_chromatic(s.row(i), glyphs) << '\n';
  }
  return out.str();
}

Json to_json(const SequenceClass& c) {
  Json j{{"principal", to_string(c.principal)}, {"growth", to_string(c.growth)}};
  j["b_subtype"] = c.b_subtype ? Json(to_string(*c.b_subtype)) : Json(nullptr);
  return j;
}

Json to_json(const WordClassification& c, unsigned digits) {
  Json j{{"principal", to_string(c.principal)},
         {"odd_count", c.map.odd_count},
         {"length", c.map.length},
         {"factor", rational_json(c.map.factor())},
         {"offset", rational_json(c.map.offset.to_rational())}};
  if (c.threshold) {
    j["threshold"] = rational_json(*c.threshold);
    j["decimal_threshold"] = render_decimal(*c.threshold, digits);
  } else {
    j["threshold"] = nullptr;
  }
  return j;
}

Json to_json(const ReversalInfo& r) {
  Json j;
  j["threshold"] = r.threshold ? rational_json(*r.threshold) : Json(nullptr);
  j["i_max"] = r.i_max ? Json(*r.i_max) : Json(nullptr);
  j["p_i_max"] = r.p_i_max ? Json(to_string(*r.p_i_max)) : Json(nullptr);
  return j;
}

Json to_json(const TypeCounts& t, unsigned digits) {
  return Json{{"order", t.order},
              {"a", to_string(t.a)},
              {"b", to_string(t.b)},
              {"r_A", rational_json(t.r_A)},
              {"r_B", rational_json(t.r_B)},
              {"decimal_r_A", render_decimal(t.r_A, digits)}};
}

Json to_json(const PolychromologueCounts& p, unsigned digits) {
  return Json{{"order", p.order},
              {"h_A", to_string(p.h_A)},
              {"h_B", to_string(p.h_B)},
              {"r_A", rational_json(p.r_A)},
              {"r_B", rational_json(p.r_B)},
              {"decimal_r_A", render_decimal(p.r_A, digits)},
              {"method", p.method}};
}

Json to_json(const GeneratorResidue& g) {
  return Json{{"modulus", to_string(g.modulus)}, {"residue", to_string(g.residue)}, {"minimal", to_string(g.minimal)}};
}

Json to_json(const CycleAnalysis& c) {
  Json j{{"word", c.word.str()},
         {"odd_count", c.map.odd_count},
         {"length", c.map.length},
         {"offset_numerator", to_string(c.map.offset_numerator())}};
  j["fixed_point"] = c.fixed_point ? rational_json(*c.fixed_point) : Json(nullptr);
  j["verdict"] = to_string(c.verdict);
  return j;
}

Json to_json(const DensityBound& d, unsigned digits) {
  return Json{{"order", d.order},
              {"ratio", rational_json(d.ratio)},
              {"scaled", rational_json(d.scaled)},
              {"first_above", to_string(d.first_above)},
              {"upper_count", rational_json(d.upper_count)},
              {"upper_share", rational_json(d.upper_share)},
              {"decimal_upper_share", render_decimal(d.upper_share, digits)},
              {"bound", rational_json(d.bound)},
              {"holds", d.holds}};
}

std::string trend_csv(const TrendReport& t, unsigned digits) {
  std::ostringstream out;
  out << "order,a,b,r_A_decimal\n";
  for (const auto& row : t.rows) out << row.order << ',' << row.a << ',' << row.b << ',' << render_decimal(row.r_A, digits) << '\n';
  return out.str();
}

Json trend_json(const TrendReport& t, unsigned digits) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(to_json(row, digits));
  return Json{{"rows", std::move(rows)}, {"strictly_decreasing", t.strictly_decreasing}};
}

std::string growth_csv(std::span<const GrowthRow> rows) {
  std::ostringstream out;
  out << "k,length,minimal_generator\n";
  for (const auto& r : rows) out << r.repeats << ',' << r.length << ',' << r.minimal << '\n';
  return out.str();
}

Json growth_json(std::span<const GrowthRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"k", r.repeats}, {"length", r.length}, {"minimal_generator", to_string(r.minimal)}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace collatz
