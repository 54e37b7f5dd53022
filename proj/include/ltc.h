#ifndef LTC_H
#define LTC_H

/* C API for the L-tetromino crack engine. All functions return LTC_OK on
 * success; on failure ltc_last_error() / ltc_last_error_code() describe the
 * problem (both thread-local). Strings returned through char** out params are
 * owned by the caller and released with ltc_string_free(). Structured data
 * crosses the boundary as JSON text. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LTC_OK = 0,
  LTC_ERR_DOMAIN = 1,  /* invalid input or unsatisfiable request */
  LTC_ERR_INTERNAL = 2 /* unexpected failure */
} ltc_status;

typedef struct ltc_region ltc_region;

/* Deficient square: odd side, missing cell at (missing_row, missing_col). */
ltc_status ltc_region_square(int side, int missing_row, int missing_col,
                             ltc_region** out);

/* Text grammar: '#' region cell, '.' absent, '*' the missing cell (at most
 * one). Ragged lines are padded with '.'. */
ltc_status ltc_region_parse(const char* text, ltc_region** out);
ltc_status ltc_region_serialize(const ltc_region* region, char** out);
void ltc_region_free(ltc_region* region);

/* tileset is "t4" or "t4plus" everywhere below. */

/* Decimal count of exact covers. threads >= 1. */
ltc_status ltc_count(const ltc_region* region, const char* tileset,
                     int threads, char** out_decimal);

/* Streams each tiling as one JSON object; return 0 from the callback to stop
 * early. limit = 0 means unlimited. */
typedef int (*ltc_tiling_cb)(const char* tiling_json, void* user);
ltc_status ltc_enumerate(const ltc_region* region, const char* tileset,
                         unsigned long long limit, ltc_tiling_cb cb,
                         void* user);

/* Block decomposition, crack report and verdict for one tiling of a
 * deficient square. */
ltc_status ltc_analyze(const ltc_region* region, const char* tiling_json,
                       char** out_json);

/* Crack census over all tilings of the region. */
ltc_status ltc_census(const ltc_region* region, const char* tileset,
                      int threads, char** out_json);

/* Half-scale domino image of a tiling, plus the lift choices read back from
 * it and the diagonal balance. */
ltc_status ltc_project(const ltc_region* region, const char* tiling_json,
                       char** out_json);

/* Inverse of project. choices_json may be NULL for the defaults. */
ltc_status ltc_lift(const char* image_json, int side, int missing_pos,
                    const char* choices_json, char** out_tiling_json);

ltc_status ltc_dimer_count(int n, char** out_decimal);
ltc_status ltc_dimer_deficient(int n, int diag_pos, char** out_decimal);
ltc_status ltc_dimer_profile(int n, char** out_json);
ltc_status ltc_capital_n(int m, int include_k0, char** out_decimal);
ltc_status ltc_kasteleyn(int n, char** out_decimal);

/* Extend a deficient-square tiling by a width-4 band; out_json carries the
 * new region text and the new tiling. */
ltc_status ltc_propagate(const ltc_region* region, const char* tiling_json,
                         const char* tileset, char** out_json);

/* format is "ascii" or "svg"; tiling_json may be NULL to draw the bare
 * region. */
ltc_status ltc_render(const ltc_region* region, const char* tiling_json,
                      const char* format, char** out);

/* Self-verification suite. full != 0 adds the slow recorded counts. The
 * report JSON is deterministic for a given suite selection. */
ltc_status ltc_verify(int full, int threads, char** out_json,
                      int* out_failures);

const char* ltc_last_error(void);
const char* ltc_last_error_code(void);
void ltc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LTC_H */
