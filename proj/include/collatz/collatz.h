#ifndef COLLATZ_COLLATZ_H
#define COLLATZ_COLLATZ_H

/*
 * C interface to the collatz library.
 *
 * Conventions:
 *  - Integers that may exceed 64 bits travel as NUL-terminated decimal strings.
 *  - Parity words travel as "I:<bits>" (inclusive, starts at i_0) or
 *    "G:<bits>" (generated, starts at i_1).
 *  - Every fallible call returns a clz_status; on failure the message is
 *    available from clz_last_error() on the same thread until the next call.
 *  - Strings returned through char** are owned by the caller and released
 *    with clz_string_free(). Handles are released with their _free function;
 *    passing NULL to any _free function is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COLLATZ_BUILDING_LIBRARY)
#    define CLZ_API __declspec(dllexport)
#  else
#    define CLZ_API __declspec(dllimport)
#  endif
#else
#  define CLZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clz_status {
  CLZ_OK = 0,
  CLZ_INVALID_ARGUMENT = 1,
  CLZ_PARSE_ERROR = 2,
  CLZ_ORDER_CAP = 3,
  CLZ_CONVENTION_MISMATCH = 4,
  CLZ_INTERNAL_ERROR = 5,
  CLZ_OUT_OF_MEMORY = 6
} clz_status;

typedef enum clz_format { CLZ_FORMAT_CSV = 0, CLZ_FORMAT_JSON = 1, CLZ_FORMAT_TEXT = 2 } clz_format;

typedef struct clz_options {
  unsigned order_cap;  /* tables above this order are refused (CLZ_ORDER_CAP) */
  unsigned threads;    /* 0: one worker per hardware thread */
  char glyph_one;      /* chromatic rendering of an odd term */
  char glyph_zero;     /* chromatic rendering of an even term */
  unsigned digits;     /* fractional digits of decimal renderings */
} clz_options;

/* Table of generated sequences: a chromoform, a chromologue prefix, or a
   table derived from one (decomposition half, prolongation). */
typedef struct clz_table clz_table;
/* Parity words of (a column range of) a table, one per row. */
typedef struct clz_structure clz_structure;

CLZ_API void clz_options_init(clz_options* options);
CLZ_API const char* clz_status_name(clz_status status);
CLZ_API const char* clz_last_error(void);
CLZ_API void clz_string_free(char* s);
CLZ_API const char* clz_version(void);

/* ---- kernel and structure ---------------------------------------------- */

CLZ_API clz_status clz_syracuse_iter(const char* n, uint64_t k, char** out);
/* convention: 'I' or 'G'. Writes the tagged word. */
CLZ_API clz_status clz_parity_vector(const char* p, uint64_t length, char convention, char** out);
/* Generators must share parity. */
/* convention 'G': same parity and p1 = p2 mod 2^(length+1).
   convention 'I': p1 = p2 mod 2^length. */
CLZ_API clz_status clz_is_isoform(const char* p1, const char* p2, uint64_t length, char convention, int* out);
/* JSON {"odd_count", "length", "offset_numerator", "factor", "offset"}. */
CLZ_API clz_status clz_word_affine(const char* word, char** json);

/* ---- tables ------------------------------------------------------------ */

CLZ_API clz_status clz_chromoform_build(const char* first, unsigned order, const clz_options* options,
                                        clz_table** out);
CLZ_API clz_status clz_chromologue_build(const char* fundamental, unsigned order, uint64_t rows,
                                         const clz_options* options, clz_table** out);
/* chromologue must come from clz_chromologue_build with 2^extra rows. */
CLZ_API clz_status clz_table_prolong(const clz_table* chromologue, unsigned extra, const clz_options* options,
                                     clz_table** out);
/* chromoform must come from clz_chromoform_build with order >= 2. */
CLZ_API clz_status clz_table_decompose(const clz_table* chromoform, clz_table** even_first_term,
                                       clz_table** odd_first_term);
CLZ_API unsigned clz_table_order(const clz_table* table);
CLZ_API uint64_t clz_table_rows(const clz_table* table);
CLZ_API clz_status clz_table_generator(const clz_table* table, uint64_t row, char** out);
/* column is 0-based: column 0 holds T_1. */
CLZ_API clz_status clz_table_term(const clz_table* table, uint64_t row, unsigned column, char** out);
CLZ_API clz_status clz_table_render(const clz_table* table, clz_format format, const clz_options* options,
                                   char** out);
/* columns == 0 selects every column from first_column on. */
CLZ_API clz_status clz_table_structure(const clz_table* table, unsigned first_column, unsigned columns,
                                       clz_structure** out);
CLZ_API void clz_table_free(clz_table* table);

/* Structural matrix of a chromoform from 64-bit parities only (order <= 63). */
CLZ_API clz_status clz_chromoform_structure_fast(const char* first, unsigned order, const clz_options* options,
                                                 clz_structure** out);
CLZ_API unsigned clz_structure_order(const clz_structure* s);
CLZ_API uint64_t clz_structure_rows(const clz_structure* s);
CLZ_API clz_status clz_structure_row(const clz_structure* s, uint64_t row, char** word);
/* Every word of the order appears exactly once. */
CLZ_API clz_status clz_structure_is_complete(const clz_structure* s, int* out);
/* Every row carries the same word. */
CLZ_API clz_status clz_structure_is_uniform(const clz_structure* s, int* out);
CLZ_API clz_status clz_structure_render(const clz_structure* s, clz_format format, const clz_options* options,
                                       char** out);
CLZ_API void clz_structure_free(clz_structure* s);

/* ---- classification and counting ---------------------------------------- */

CLZ_API clz_status clz_reversal_coefficient(uint64_t n, uint64_t* out);
CLZ_API clz_status clz_classify_sequence(const char* p, uint64_t length, char** json);
/* word must be generated ("G:..."). */
CLZ_API clz_status clz_classify_word(const char* word, const clz_options* options, char** json);
CLZ_API clz_status clz_reversal_point(const char* fundamental, uint64_t order, char** json);
CLZ_API clz_status clz_count_by_odd(uint64_t n, uint64_t k, char** out);
/* Even orders only. JSON {order, a, b, r_A, r_B, decimal_r_A}. */
CLZ_API clz_status clz_count_types(uint64_t order, const clz_options* options, char** json);
CLZ_API clz_status clz_proportion_trend(const uint64_t* orders, size_t count, clz_format format,
                                        const clz_options* options, char** out, int* strictly_decreasing);
CLZ_API clz_status clz_polychromologue_counts(uint64_t order, const clz_options* options, char** json);

/* ---- inverse conversion -------------------------------------------------- */

/* generator_parity: -1 for inclusive words; 0 or 1 supplies i_0 for generated words. */
CLZ_API clz_status clz_generator_for_word(const char* word, int generator_parity, char** json);
/* tail may be NULL. Formats: CSV (k,length,minimal_generator) or JSON. */
CLZ_API clz_status clz_minimal_generator_growth(const char* base, const char* tail, uint64_t k_max,
                                                clz_format format, char** out, int* strictly_increasing);
CLZ_API clz_status clz_cycle_fixed_point(const char* base, char** json);
/* ratio as "a/b" or a decimal in (0, 1). */
CLZ_API clz_status clz_nonconvertible_bound(uint64_t order, const char* ratio, const clz_options* options,
                                            char** json, int* holds);

#ifdef __cplusplus
}
#endif

#endif /* COLLATZ_COLLATZ_H */
