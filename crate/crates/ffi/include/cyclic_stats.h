/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef CYCLIC_STATS_H
#define CYCLIC_STATS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CST_STATUS_OK = 0,
  CST_STATUS_NULL_POINTER = 1,
  CST_STATUS_INVALID_UTF8 = 2,
  CST_STATUS_PARSE = 3,
  CST_STATUS_INVALID_ARGUMENT = 4,
  CST_STATUS_CAP_EXCEEDED = 5,
  CST_STATUS_OUT_OF_RANGE = 6,
  CST_STATUS_PANIC = 7,
} CstStatus;

/**
 * A permutation together with the cycle form it was written in.
 */
typedef struct CstPermutation CstPermutation;

/**
 * A polynomial in `q`, `x`, `y` with integer coefficients.
 */
typedef struct CstPoly CstPoly;

/**
 * Outcome of a verification suite.
 */
typedef struct CstReport CstReport;

/**
 * Coefficient rows of a specialized family.
 */
typedef struct CstTriangle CstTriangle;

/**
 * All statistics of one permutation. Cyclic fields are read from the
 * cycle form as written.
 */
typedef struct {
  uint32_t cpk;
  uint32_t cval;
  uint32_t cyc;
  uint32_t fix;
  uint32_t pk;
  uint32_t val;
  uint32_t lpk;
  uint32_t runs;
} CstStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *cst_last_error(void);

/**
 * Library version, a static string.
 */
const char *cst_version(void);

void cst_string_free(char *s);

/**
 * Member `n` of a named family (`P`, `V`, `Pder`, `Vder`, `W`, `Wbar`,
 * `S`, `T`, `runs`, `combinedR`, `combinedI`).
 */
CstStatus cst_poly_family(const char *family, size_t n, CstPoly **out);

/**
 * Parses canonical or free-form polynomial text such as `(1+5q)x + x^2y`.
 */
CstStatus cst_poly_parse(const char *src, CstPoly **out);

/**
 * Canonical text; free with `cst_string_free`.
 */
CstStatus cst_poly_to_string(const CstPoly *p, char **out);

/**
 * Value at integer `(q, x, y)` as decimal text; free with
 * `cst_string_free`.
 */
CstStatus cst_poly_evaluate(const CstPoly *p, int64_t q, int64_t x, int64_t y, char **out);

/**
 * Non-zero when the two polynomials are equal.
 */
CstStatus cst_poly_equal(const CstPoly *a, const CstPoly *b, bool *out);

void cst_poly_free(CstPoly *p);

/**
 * Rows `1..=rows` of a named triangle (`M`, `Mbar`, `D`, `Dbar`, `runs`,
 * `combinedR`, `combinedI`, `stirlingS`, `stirlingT`).
 */
CstStatus cst_triangle_compute(const char *family, size_t rows, CstTriangle **out);

CstStatus cst_triangle_rows(const CstTriangle *t, size_t *out);

/**
 * Column of the first stored entry in every row.
 */
CstStatus cst_triangle_offset(const CstTriangle *t, size_t *out);

/**
 * Number of stored entries in row `n` (1-based).
 */
CstStatus cst_triangle_row_len(const CstTriangle *t, size_t n, size_t *out);

/**
 * Entry `k` (0-based, from the offset) of row `n` as decimal text; free
 * with `cst_string_free`.
 */
CstStatus cst_triangle_entry(const CstTriangle *t, size_t n, size_t k, char **out);

/**
 * The triangle document the CLI prints with `--format json`.
 */
CstStatus cst_triangle_to_json(const CstTriangle *t, char **out);

void cst_triangle_free(CstTriangle *t);

/**
 * From one-line notation such as `64713258` or `10,2,1,...`.
 */
CstStatus cst_permutation_from_word(const char *src, CstPermutation **out);

/**
 * From a written cycle form such as `(6,1,4,2)(7,3,5)(8)`. Cyclic
 * statistics are read from the form as written.
 */
CstStatus cst_permutation_from_cycles(const char *src, CstPermutation **out);

CstStatus cst_permutation_stats(const CstPermutation *p, CstStats *out);

/**
 * The cycle form as written; free with `cst_string_free`.
 */
CstStatus cst_permutation_cycles(const CstPermutation *p, char **out);

/**
 * One-line notation; free with `cst_string_free`.
 */
CstStatus cst_permutation_word(const CstPermutation *p, char **out);

/**
 * The switched cycle form, as a new handle.
 */
CstStatus cst_permutation_switch(const CstPermutation *p, CstPermutation **out);

void cst_permutation_free(CstPermutation *p);

/**
 * Runs a verification suite (`all`, `bell`, `pell`, `euler`, `stirling`,
 * `degrees`, `xcoeff`, `logconcave`, `egf`, `oracle`, `rowsums`,
 * `switching`, `linear`). A failing check is not an error: inspect the
 * report with `cst_report_passed`.
 */
CstStatus cst_verify(const char *suite,
                     size_t max_n,
                     size_t oracle_cap,
                     size_t egf_order,
                     size_t jobs,
                     CstReport **out);

CstStatus cst_report_passed(const CstReport *r, bool *out);

/**
 * Number of non-blocking conjecture findings.
 */
CstStatus cst_report_findings(const CstReport *r, size_t *out);

/**
 * Plain-text report as printed by the CLI; free with `cst_string_free`.
 */
CstStatus cst_report_to_string(const CstReport *r, char **out);

/**
 * JSON report as printed by the CLI; free with `cst_string_free`.
 */
CstStatus cst_report_to_json(const CstReport *r, char **out);

void cst_report_free(CstReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_STATS_H */
