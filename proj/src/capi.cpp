#include "collatz/collatz.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "collatz/classify.hpp"
#include "collatz/error.hpp"
#include "collatz/inverse.hpp"
#include "collatz/kernel.hpp"
#include "collatz/report.hpp"
#include "collatz/structure.hpp"
#include "collatz/tables.hpp"

struct clz_table {
  enum class Kind { plain, chromoform, chromologue };
  Kind kind = Kind::plain;
  collatz::Natural anchor;  // first generator or fundamental generator
  collatz::SequenceTable table;
};

struct clz_structure {
  collatz::StructuralMatrix matrix;
  std::vector<collatz::Natural> generators;
};

namespace {

using namespace collatz;

thread_local std::string last_error;

clz_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return CLZ_INVALID_ARGUMENT;
    case ErrorCode::parse:
      return CLZ_PARSE_ERROR;
    case ErrorCode::order_cap:
      return CLZ_ORDER_CAP;
    case ErrorCode::convention_mismatch:
      return CLZ_CONVENTION_MISMATCH;
    case ErrorCode::internal:
      return CLZ_INTERNAL_ERROR;
  }
  return CLZ_INTERNAL_ERROR;
}

template <class F>
clz_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CLZ_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CLZ_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CLZ_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return CLZ_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) fail(ErrorCode::invalid_argument, std::string(name) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

clz_options resolved(const clz_options* options) {
  clz_options o;
  clz_options_init(&o);
  if (options != nullptr) o = *options;
  return o;
}

TableOptions table_options(const clz_options& o) { return TableOptions{o.order_cap, o.threads}; }

Glyphs glyphs_of(const clz_options& o) {
  require(o.glyph_one != o.glyph_zero, "the two glyphs must differ");
  require(o.glyph_one > ' ' && o.glyph_zero > ' ', "glyphs must be printable characters");
  return Glyphs{o.glyph_one, o.glyph_zero};
}

Natural natural_arg(const char* text, const char* name) {
  need(text, name);
  return parse_natural(text);
}

ParityWord word_arg(const char* text, const char* name) {
  need(text, name);
  return ParityWord::parse(text);
}

clz_table* wrap(clz_table::Kind kind, Natural anchor, SequenceTable table) {
  auto* t = new clz_table;
  t->kind = kind;
  t->anchor = std::move(anchor);
  t->table = std::move(table);
  return t;
}

const char* kind_name(clz_table::Kind k) {
  switch (k) {
    case clz_table::Kind::chromoform:
      return "chromoform";
    case clz_table::Kind::chromologue:
      return "chromologue";
    case clz_table::Kind::plain:
      break;
  }
  return "table";
}

}  // namespace

extern "C" {

void clz_options_init(clz_options* options) {
  if (options == nullptr) return;
  options->order_cap = default_order_cap;
  options->threads = 0;
  options->glyph_one = '#';
  options->glyph_zero = '.';
  options->digits = default_decimal_digits;
}

const char* clz_status_name(clz_status status) {
  switch (status) {
    case CLZ_OK:
      return "ok";
    case CLZ_INVALID_ARGUMENT:
      return "invalid_argument";
    case CLZ_PARSE_ERROR:
      return "parse_error";
    case CLZ_ORDER_CAP:
      return "order_cap";
    case CLZ_CONVENTION_MISMATCH:
      return "convention_mismatch";
    case CLZ_INTERNAL_ERROR:
      return "internal_error";
    case CLZ_OUT_OF_MEMORY:
      return "out_of_memory";
  }
  return "unknown";
}

const char* clz_last_error(void) { return last_error.c_str(); }

void clz_string_free(char* s) { std::free(s); }

const char* clz_version(void) { return "1.0.0"; }

clz_status clz_syracuse_iter(const char* n, uint64_t k, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = duplicate(to_string(syracuse_iter(natural_arg(n, "n"), k)));
  });
}

clz_status clz_parity_vector(const char* p, uint64_t length, char convention, char** out) {
  return guarded([&] {
    need(out, "out");
    require(convention == 'I' || convention == 'G', "convention must be 'I' or 'G'");
    require(length >= 1, "word length must be >= 1");
    const Convention c = convention == 'I' ? Convention::inclusive : Convention::generated;
    *out = duplicate(parity_vector(natural_arg(p, "p"), length, c).str());
  });
}

clz_status clz_is_isoform(const char* p1, const char* p2, uint64_t length, char convention, int* out) {
  return guarded([&] {
    need(out, "out");
    require(convention == 'I' || convention == 'G', "convention must be 'I' or 'G'");
    const Convention c = convention == 'I' ? Convention::inclusive : Convention::generated;
    *out = is_isoform(natural_arg(p1, "p1"), natural_arg(p2, "p2"), length, c) ? 1 : 0;
  });
}

clz_status clz_word_affine(const char* word, char** json) {
  return guarded([&] {
    need(json, "json");
    const AffineMap m = word_affine(word_arg(word, "word"));
    Json j{{"odd_count", m.odd_count},
           {"length", m.length},
           {"offset_numerator", to_string(m.offset_numerator())},
           {"factor", rational_json(m.factor())},
           {"offset", rational_json(m.offset.to_rational())}};
    *json = duplicate(dump(j));
  });
}

clz_status clz_chromoform_build(const char* first, unsigned order, const clz_options* options, clz_table** out) {
  return guarded([&] {
    need(out, "out");
    const clz_options o = resolved(options);
    ChromoformMatrix m = build_chromoform(natural_arg(first, "first"), order, table_options(o));
    *out = wrap(clz_table::Kind::chromoform, std::move(m.first), std::move(m.table));
  });
}

clz_status clz_chromologue_build(const char* fundamental, unsigned order, uint64_t rows, const clz_options* options,
                                 clz_table** out) {
  return guarded([&] {
    need(out, "out");
    const clz_options o = resolved(options);
    FractionalChromologue c = build_chromologue(natural_arg(fundamental, "fundamental"), order, rows, table_options(o));
    *out = wrap(clz_table::Kind::chromologue, std::move(c.fundamental_generator), std::move(c.table));
  });
}

clz_status clz_table_prolong(const clz_table* chromologue, unsigned extra, const clz_options* options,
                             clz_table** out) {
  return guarded([&] {
    need(chromologue, "chromologue");
    need(out, "out");
    require(chromologue->kind == clz_table::Kind::chromologue, "prolongation needs a chromologue table");
    const clz_options o = resolved(options);
    FractionalChromologue c{chromologue->anchor, chromologue->table};
    SequenceTable t = prolong_chromologue(c, extra, o.threads);
    *out = wrap(clz_table::Kind::plain, chromologue->anchor, std::move(t));
  });
}

clz_status clz_table_decompose(const clz_table* chromoform, clz_table** even_first_term, clz_table** odd_first_term) {
  return guarded([&] {
    need(chromoform, "chromoform");
    need(even_first_term, "even_first_term");
    need(odd_first_term, "odd_first_term");
    require(chromoform->kind == clz_table::Kind::chromoform, "decomposition needs a chromoform table");
    PerfectDecomposition d = decompose_perfect(ChromoformMatrix{chromoform->anchor, chromoform->table});
    clz_table* even = wrap(clz_table::Kind::plain, chromoform->anchor, std::move(d.even_first_term));
    try {
      *odd_first_term = wrap(clz_table::Kind::plain, chromoform->anchor, std::move(d.odd_first_term));
    } catch (...) {
      delete even;
      throw;
    }
    *even_first_term = even;
  });
}

unsigned clz_table_order(const clz_table* table) { return table == nullptr ? 0 : table->table.order(); }

uint64_t clz_table_rows(const clz_table* table) { return table == nullptr ? 0 : table->table.rows(); }

clz_status clz_table_generator(const clz_table* table, uint64_t row, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    require(row < table->table.rows(), "row index out of range");
    *out = duplicate(to_string(table->table.generator(row)));
  });
}

clz_status clz_table_term(const clz_table* table, uint64_t row, unsigned column, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    require(row < table->table.rows(), "row index out of range");
    require(column < table->table.order(), "column index out of range");
    *out = duplicate(to_string(table->table.term(row, column)));
  });
}

clz_status clz_table_render(const clz_table* table, clz_format format, const clz_options* options, char** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    const clz_options o = resolved(options);
    switch (format) {
      case CLZ_FORMAT_CSV:
        *out = duplicate(table_csv(table->table));
        return;
      case CLZ_FORMAT_JSON: {
        Json j{{"kind", kind_name(table->kind)}, {"anchor", to_string(table->anchor)}};
        const Json extra = table_json(table->table);
        for (auto& [key, value] : extra.items()) j[key] = value;
        *out = duplicate(dump(j));
        return;
      }
      case CLZ_FORMAT_TEXT:
        *out = duplicate(table_text(table->table, glyphs_of(o)));
        return;
    }
    fail(ErrorCode::invalid_argument, "unknown output format");
  });
}

clz_status clz_table_structure(const clz_table* table, unsigned first_column, unsigned columns, clz_structure** out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    require(first_column < table->table.order(), "first column out of range");
    auto* s = new clz_structure;
    try {
      s->matrix = columns == 0 ? table->table.structure(first_column) : table->table.structure(first_column, columns);
      const auto g = table->table.generators();
      s->generators.assign(g.begin(), g.end());
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

void clz_table_free(clz_table* table) { delete table; }

clz_status clz_chromoform_structure_fast(const char* first, unsigned order, const clz_options* options,
                                         clz_structure** out) {
  return guarded([&] {
    need(out, "out");
    const clz_options o = resolved(options);
    const Natural f = natural_arg(first, "first");
    auto* s = new clz_structure;
    try {
      s->matrix = chromoform_structure_fast(f, order, table_options(o));
      s->generators.reserve(s->matrix.rows());
      for (std::size_t j = 0; j < s->matrix.rows(); ++j) {
        s->generators.push_back(f + 2 * Natural(static_cast<unsigned long>(j)));
      }
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

unsigned clz_structure_order(const clz_structure* s) { return s == nullptr ? 0 : s->matrix.order; }

uint64_t clz_structure_rows(const clz_structure* s) { return s == nullptr ? 0 : s->matrix.rows(); }

clz_status clz_structure_row(const clz_structure* s, uint64_t row, char** word) {
  return guarded([&] {
    need(s, "structure");
    need(word, "word");
    require(row < s->matrix.rows(), "row index out of range");
    *word = duplicate(s->matrix.row(row).str());
  });
}

clz_status clz_structure_is_complete(const clz_structure* s, int* out) {
  return guarded([&] {
    need(s, "structure");
    need(out, "out");
    *out = verify_completeness(s->matrix) ? 1 : 0;
  });
}

clz_status clz_structure_is_uniform(const clz_structure* s, int* out) {
  return guarded([&] {
    need(s, "structure");
    need(out, "out");
    bool uniform = true;
    for (std::size_t i = 1; i < s->matrix.rows() && uniform; ++i) uniform = s->matrix.codes[i] == s->matrix.codes[0];
    *out = uniform ? 1 : 0;
  });
}

clz_status clz_structure_render(const clz_structure* s, clz_format format, const clz_options* options, char** out) {
  return guarded([&] {
    need(s, "structure");
    need(out, "out");
    const clz_options o = resolved(options);
    switch (format) {
      case CLZ_FORMAT_CSV:
        *out = duplicate(structure_csv(s->matrix, s->generators));
        return;
      case CLZ_FORMAT_JSON:
        *out = duplicate(dump(structure_json(s->matrix, s->generators)));
        return;
      case CLZ_FORMAT_TEXT:
        *out = duplicate(structure_text(s->matrix, s->generators, glyphs_of(o)));
        return;
    }
    fail(ErrorCode::invalid_argument, "unknown output format");
  });
}

void clz_structure_free(clz_structure* s) { delete s; }

clz_status clz_reversal_coefficient(uint64_t n, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = reversal_coefficient(n);
  });
}

clz_status clz_classify_sequence(const char* p, uint64_t length, char** json) {
  return guarded([&] {
    need(json, "json");
    const Natural g = natural_arg(p, "p");
    require(length >= 1, "order must be >= 1");
    const ParityWord w = parity_vector(g, length, Convention::generated);
    Json j{{"generator", to_string(g)}, {"order", length}, {"word", w.str()}};
    const Json extra = to_json(classify_sequence(g, length));
    for (auto& [key, value] : extra.items()) j[key] = value;
    const WordClassification wc = classify_word(w);
    j["threshold"] = wc.threshold ? rational_json(*wc.threshold) : Json(nullptr);
    *json = duplicate(dump(j));
  });
}

clz_status clz_classify_word(const char* word, const clz_options* options, char** json) {
  return guarded([&] {
    need(json, "json");
    const clz_options o = resolved(options);
    const ParityWord w = word_arg(word, "word");
    Json j{{"word", w.str()}};
    const Json extra = to_json(classify_word(w), o.digits);
    for (auto& [key, value] : extra.items()) j[key] = value;
    *json = duplicate(dump(j));
  });
}

clz_status clz_reversal_point(const char* fundamental, uint64_t order, char** json) {
  return guarded([&] {
    need(json, "json");
    const Natural f = natural_arg(fundamental, "fundamental");
    Json j{{"fundamental", to_string(f)}, {"order", order}};
    const Json extra = to_json(chromologue_reversal_point(f, order));
    for (auto& [key, value] : extra.items()) j[key] = value;
    *json = duplicate(dump(j));
  });
}

clz_status clz_count_by_odd(uint64_t n, uint64_t k, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = duplicate(to_string(count_by_odd(n, k)));
  });
}

clz_status clz_count_types(uint64_t order, const clz_options* options, char** json) {
  return guarded([&] {
    need(json, "json");
    const clz_options o = resolved(options);
    *json = duplicate(dump(to_json(count_types(order), o.digits)));
  });
}

clz_status clz_proportion_trend(const uint64_t* orders, size_t count, clz_format format, const clz_options* options,
                                char** out, int* strictly_decreasing) {
  return guarded([&] {
    need(orders, "orders");
    need(out, "out");
    require(count >= 1, "trend needs at least one order");
    const clz_options o = resolved(options);
    const TrendReport t = proportion_trend(std::span<const std::uint64_t>(orders, count));
    if (format == CLZ_FORMAT_CSV) {
      *out = duplicate(trend_csv(t, o.digits));
    } else if (format == CLZ_FORMAT_JSON) {
      *out = duplicate(dump(trend_json(t, o.digits)));
    } else {
      fail(ErrorCode::invalid_argument, "trend output supports csv and json");
    }
    if (strictly_decreasing != nullptr) *strictly_decreasing = t.strictly_decreasing ? 1 : 0;
  });
}

clz_status clz_polychromologue_counts(uint64_t order, const clz_options* options, char** json) {
  return guarded([&] {
    need(json, "json");
    const clz_options o = resolved(options);
    *json = duplicate(dump(to_json(polychromologue_counts(order, table_options(o)), o.digits)));
  });
}

clz_status clz_generator_for_word(const char* word, int generator_parity, char** json) {
  return guarded([&] {
    need(json, "json");
    const ParityWord w = word_arg(word, "word");
    GeneratorResidue g;
    if (w.convention() == Convention::inclusive) {
      require(generator_parity == -1, "an inclusive word already fixes the generator parity");
      g = generator_for_word(w);
    } else {
      require(generator_parity == 0 || generator_parity == 1, "a generated word needs the generator parity (0 or 1)");
      g = generator_for_generated_word(w, generator_parity == 1);
    }
    Json j{{"word", w.str()}};
    const Json extra = to_json(g);
    for (auto& [key, value] : extra.items()) j[key] = value;
    *json = duplicate(dump(j));
  });
}

clz_status clz_minimal_generator_growth(const char* base, const char* tail, uint64_t k_max, clz_format format,
                                        char** out, int* strictly_increasing) {
  return guarded([&] {
    need(out, "out");
    const ParityWord b = word_arg(base, "base");
    std::optional<ParityWord> t;
    if (tail != nullptr) t = ParityWord::parse(tail);
    const auto rows = minimal_generator_growth(b, t, k_max);
    if (format == CLZ_FORMAT_CSV) {
      *out = duplicate(growth_csv(rows));
    } else if (format == CLZ_FORMAT_JSON) {
      *out = duplicate(dump(growth_json(rows)));
    } else {
      fail(ErrorCode::invalid_argument, "growth output supports csv and json");
    }
    if (strictly_increasing != nullptr) {
      bool up = true;
      for (std::size_t i = 1; i < rows.size(); ++i) up = up && rows[i].minimal > rows[i - 1].minimal;
      *strictly_increasing = up ? 1 : 0;
    }
  });
}

clz_status clz_cycle_fixed_point(const char* base, char** json) {
  return guarded([&] {
    need(json, "json");
    *json = duplicate(dump(to_json(cycle_fixed_point(word_arg(base, "base")))));
  });
}

clz_status clz_nonconvertible_bound(uint64_t order, const char* ratio, const clz_options* options, char** json,
                                    int* holds) {
  return guarded([&] {
    need(json, "json");
    need(ratio, "ratio");
    const clz_options o = resolved(options);
    const DensityBound d = nonconvertible_bound(order, parse_rational(ratio));
    *json = duplicate(dump(to_json(d, o.digits)));
    if (holds != nullptr) *holds = d.holds ? 1 : 0;
  });
}

}  // extern "C"
