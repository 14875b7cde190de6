// collatz: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error,
// 3 a checked property failed, 4 order cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "collatz/collatz.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;
constexpr int exit_property = 3;
constexpr int exit_cap = 4;

struct Failure {
  int code;
};

int exit_code_of(clz_status s) {
  switch (s) {
    case CLZ_OK:
      return exit_ok;
    case CLZ_INVALID_ARGUMENT:
    case CLZ_PARSE_ERROR:
    case CLZ_CONVENTION_MISMATCH:
      return exit_usage;
    case CLZ_ORDER_CAP:
      return exit_cap;
    default:
      return exit_internal;
  }
}

void check(clz_status s) {
  if (s == CLZ_OK) return;
  std::cerr << "error: " << clz_last_error() << '\n';
  throw Failure{exit_code_of(s)};
}

void usage_error(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  throw Failure{exit_usage};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  clz_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using Table = Handle<clz_table, clz_table_free>;
using Structure = Handle<clz_structure, clz_structure_free>;

struct Common {
  std::string format;
  std::string output;
  std::optional<unsigned> order_cap;
  unsigned threads = 0;
  std::string glyphs = "#.";
  unsigned digits = 20;
};

void add_common(CLI::App* app, Common& c, const std::string& default_format) {
  c.format = default_format;
  app->add_option("--format", c.format, "Output format (default depends on the report)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app->add_option("--output", c.output, "Write the report to this file instead of stdout");
  app->add_option("--order-cap", c.order_cap, "Largest table order accepted (overrides COLLATZ_ORDER_CAP)");
  app->add_option("--threads", c.threads, "Worker threads; 0 uses every hardware thread")->capture_default_str();
  app->add_option("--glyphs", c.glyphs, "Two characters for odd and even terms in text output")
      ->capture_default_str();
  app->add_option("--digits", c.digits, "Fractional digits in decimal renderings")->capture_default_str();
}

unsigned cap_from_environment(unsigned fallback) {
  const char* env = std::getenv("COLLATZ_ORDER_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size() || v == 0 || v > 64) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    usage_error(std::string("COLLATZ_ORDER_CAP must be an integer in [1, 64], got '") + env + "'");
  }
  return fallback;
}

clz_options options_of(const Common& c) {
  clz_options o;
  clz_options_init(&o);
  o.order_cap = c.order_cap ? *c.order_cap : cap_from_environment(o.order_cap);
  o.threads = c.threads;
  if (c.glyphs.size() != 2) usage_error("--glyphs takes exactly two characters");
  o.glyph_one = c.glyphs[0];
  o.glyph_zero = c.glyphs[1];
  o.digits = c.digits;
  return o;
}

clz_format format_of(const Common& c) {
  if (c.format == "json") return CLZ_FORMAT_JSON;
  if (c.format == "text") return CLZ_FORMAT_TEXT;
  return CLZ_FORMAT_CSV;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) usage_error("cannot open " + c.output + " for writing");
  out << text;
  if (!out.flush()) usage_error("failed writing " + c.output);
}

void verdict(const std::string& name, bool pass) { std::cerr << name << ": " << (pass ? "PASS" : "FAIL") << '\n'; }

// ---- table ----------------------------------------------------------------

struct TableArgs {
  Common common;
  std::string first = "1";
  unsigned order = 0;
  bool structure = false;
  bool decompose = false;
  std::optional<std::uint64_t> rows;
  std::optional<unsigned> prolong;
};

std::string render_table(const clz_table* t, bool structure, unsigned first_column, clz_format f,
                         const clz_options& o) {
  char* out = nullptr;
  if (!structure) {
    check(clz_table_render(t, f, &o, &out));
    return take(out);
  }
  Structure s;
  check(clz_table_structure(t, first_column, 0, &s.p));
  check(clz_structure_render(s.p, f, &o, &out));
  return take(out);
}

bool complete(const clz_table* t, unsigned first_column) {
  Structure s;
  check(clz_table_structure(t, first_column, 0, &s.p));
  int ok = 0;
  check(clz_structure_is_complete(s.p, &ok));
  return ok != 0;
}

int run_table(const TableArgs& a) {
  if (a.order < 1) usage_error("--order must be >= 1");
  if (a.prolong && !a.rows) usage_error("--prolong needs --rows");
  if (a.decompose && a.rows) usage_error("--decompose applies to chromoforms, not to --rows");
  const clz_options o = options_of(a.common);
  const clz_format f = format_of(a.common);

  if (a.rows) {
    if (*a.rows < 1) usage_error("--rows must be >= 1");
    Table c;
    check(clz_chromologue_build(a.first.c_str(), a.order, *a.rows, &o, &c.p));
    if (!a.prolong) {
      Structure s;
      check(clz_table_structure(c.p, 0, 0, &s.p));
      int uniform = 0;
      check(clz_structure_is_uniform(s.p, &uniform));
      emit(a.common, render_table(c.p, a.structure, 0, f, o));
      verdict("isoformy", uniform != 0);
      return uniform != 0 ? exit_ok : exit_property;
    }
    Table p;
    check(clz_table_prolong(c.p, *a.prolong, &o, &p.p));
    const bool ok = complete(p.p, a.order);
    emit(a.common, render_table(p.p, a.structure, 0, f, o));
    verdict("completeness", ok);
    return ok ? exit_ok : exit_property;
  }

  Table m;
  check(clz_chromoform_build(a.first.c_str(), a.order, &o, &m.p));
  if (!a.decompose) {
    const bool ok = complete(m.p, 0);
    emit(a.common, render_table(m.p, a.structure, 0, f, o));
    verdict("completeness", ok);
    return ok ? exit_ok : exit_property;
  }

  Table even, odd;
  check(clz_table_decompose(m.p, &even.p, &odd.p));
  // Columns 2..n of each half form a complete table of order n-1.
  const bool ok = complete(even.p, 1) && complete(odd.p, 1);
  const std::string e = render_table(even.p, a.structure, 0, f, o);
  const std::string d = render_table(odd.p, a.structure, 0, f, o);
  if (f == CLZ_FORMAT_JSON) {
    emit(a.common, "{\n\"even_first_term\": " + e + ",\n\"odd_first_term\": " + d + "}\n");
  } else {
    emit(a.common, "# even_first_term\n" + e + "# odd_first_term\n" + d);
  }
  verdict("completeness", ok);
  return ok ? exit_ok : exit_property;
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
  Common common;
  std::optional<std::string> gen;
  std::optional<std::uint64_t> order;
  std::optional<std::string> word;
  bool counts = false;
  bool reversal = false;
  bool poly = false;
  std::vector<std::uint64_t> trend;
};

int run_classify(const ClassifyArgs& a) {
  const clz_options o = options_of(a.common);
  const int modes = (a.word ? 1 : 0) + (a.counts ? 1 : 0) + (a.reversal ? 1 : 0) + (a.poly ? 1 : 0) +
                    (a.trend.empty() ? 0 : 1);
  if (modes > 1) usage_error("choose one of --word, --counts, --reversal, --poly, --trend");
  char* out = nullptr;

  if (!a.trend.empty()) {
    const clz_format f = a.common.format == "json" ? CLZ_FORMAT_JSON : CLZ_FORMAT_CSV;
    if (a.common.format == "text") usage_error("--trend supports csv and json");
    int decreasing = 0;
    check(clz_proportion_trend(a.trend.data(), a.trend.size(), f, &o, &out, &decreasing));
    emit(a.common, take(out));
    verdict("r_A strictly decreasing", decreasing != 0);
    return decreasing != 0 ? exit_ok : exit_property;
  }
  if (!a.common.format.empty() && a.common.format != "json") usage_error("this report is JSON only");
  if (a.word) {
    check(clz_classify_word(a.word->c_str(), &o, &out));
  } else if (a.counts || a.poly) {
    if (!a.order) usage_error("--order is required");
    if (a.counts) {
      check(clz_count_types(*a.order, &o, &out));
    } else {
      check(clz_polychromologue_counts(*a.order, &o, &out));
    }
  } else {
    if (!a.gen || !a.order) usage_error("--gen and --order are required");
    if (a.reversal) {
      check(clz_reversal_point(a.gen->c_str(), *a.order, &out));
    } else {
      check(clz_classify_sequence(a.gen->c_str(), *a.order, &out));
    }
  }
  emit(a.common, take(out));
  return exit_ok;
}

// ---- invert ---------------------------------------------------------------

struct InvertArgs {
  Common common;
  std::optional<std::string> word;
  std::optional<int> i0;
  std::optional<std::string> base;
  std::optional<std::string> tail;
  std::optional<std::uint64_t> repeat;
  std::optional<std::string> cycle;
  bool density = false;
  std::optional<std::uint64_t> order;
  std::string ratio = "1/2";
};

int run_invert(const InvertArgs& a) {
  const clz_options o = options_of(a.common);
  const int modes = (a.word ? 1 : 0) + (a.base ? 1 : 0) + (a.cycle ? 1 : 0) + (a.density ? 1 : 0);
  if (modes != 1) usage_error("choose exactly one of --word, --base, --cycle, --density");
  char* out = nullptr;

  if (a.base) {
    if (!a.repeat) usage_error("--base needs --repeat");
    if (a.common.format == "text") usage_error("growth tables support csv and json");
    const clz_format f = a.common.format == "json" ? CLZ_FORMAT_JSON : CLZ_FORMAT_CSV;
    check(clz_minimal_generator_growth(a.base->c_str(), a.tail ? a.tail->c_str() : nullptr, *a.repeat, f, &out,
                                       nullptr));
    emit(a.common, take(out));
    return exit_ok;
  }
  if (!a.common.format.empty() && a.common.format != "json") usage_error("this report is JSON only");
  if (a.word) {
    check(clz_generator_for_word(a.word->c_str(), a.i0 ? *a.i0 : -1, &out));
  } else if (a.cycle) {
    check(clz_cycle_fixed_point(a.cycle->c_str(), &out));
  } else {
    if (!a.order) usage_error("--density needs --order");
    int holds = 0;
    check(clz_nonconvertible_bound(*a.order, a.ratio.c_str(), &o, &out, &holds));
    emit(a.common, take(out));
    verdict("density bound", holds != 0);
    return holds != 0 ? exit_ok : exit_property;
  }
  emit(a.common, take(out));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity structure of Syracuse sequences"};
  app.require_subcommand(1);

  TableArgs table;
  auto* t = app.add_subcommand("table", "Build a chromoform or chromologue table and check its structure");
  t->add_option("--first", table.first, "First generator (fundamental generator with --rows)")
      ->capture_default_str();
  t->add_option("--order", table.order, "Table order n")->required();
  t->add_flag("--structure", table.structure, "Emit the parity matrix instead of the terms");
  t->add_flag("--decompose", table.decompose, "Split the rows by the parity of the first term");
  t->add_option("--rows", table.rows, "Build a chromologue prefix with this many rows");
  t->add_option("--prolong", table.prolong, "Continue a 2^k-row chromologue by k steps");
  add_common(t, table.common, "csv");

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify sequences and words, count types");
  c->add_option("--gen", classify.gen, "Generator P");
  c->add_option("--order", classify.order, "Order n");
  c->add_option("--word", classify.word, "Generated word, e.g. G:0101");
  c->add_flag("--counts", classify.counts, "A/B counts for an even order");
  c->add_flag("--reversal", classify.reversal, "Reversal point of the chromologue of --gen");
  c->add_flag("--poly", classify.poly, "A/B row counts of the order-n chromoform over 1");
  c->add_option("--trend", classify.trend, "Comma-separated even orders")->delimiter(',');
  add_common(c, classify.common, "");

  InvertArgs invert;
  auto* v = app.add_subcommand("invert", "Generators from parity words, growth tables, cycles");
  v->add_option("--word", invert.word, "Parity word, e.g. I:111");
  v->add_option("--i0", invert.i0, "Generator parity for a generated word")->check(CLI::Range(0, 1));
  v->add_option("--base", invert.base, "Repeated inclusive base word");
  v->add_option("--tail", invert.tail, "Inclusive word appended after the repeats");
  v->add_option("--repeat", invert.repeat, "Largest repeat count k");
  v->add_option("--cycle", invert.cycle, "One inclusive period");
  v->add_flag("--density", invert.density, "Share of rows above 2^n r");
  v->add_option("--order", invert.order, "Order n for --density");
  v->add_option("--ratio", invert.ratio, "r in (0, 1) for --density")->capture_default_str();
  add_common(v, invert.common, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*t) return run_table(table);
    if (*c) return run_classify(classify);
    return run_invert(invert);
  } catch (const Failure& f) {
    return f.code;
  }
}
