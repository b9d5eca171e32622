#ifndef ECFAC_ECFAC_H
#define ECFAC_ECFAC_H

/*
 * C interface to the ecfac library: construction of the curves
 * y^2 = x^3 - 2rDx for D = pq, their Selmer groups and root numbers, point
 * search, and recovery of p and q from a point.
 *
 * Integers cross the boundary as decimal strings and results come back as
 * JSON (CSV for ecfac_stats) in strings owned by the caller, to be released
 * with ecfac_string_free. Every call reports an ecfac_status; on failure the
 * context keeps a message and, for pipeline runs, the name of the failing
 * stage.
 */

#include <stdint.h>

#if defined(ECFAC_BUILDING_LIBRARY)
#define ECFAC_API __attribute__((visibility("default")))
#else
#define ECFAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecfac_status {
    ECFAC_OK = 0,
    ECFAC_VIOLATION = 1,        /* a mathematical invariant failed */
    ECFAC_EXHAUSTED = 2,        /* a search hit its configured cap */
    ECFAC_INVALID_ARGUMENT = 3, /* malformed or out-of-contract input */
    ECFAC_INTERNAL = 4
} ecfac_status;

typedef struct ecfac_config {
    uint64_t search_bound_r;  /* default 1000000 */
    uint64_t homspace_cap;    /* default 100000 */
    uint64_t naive_cap;       /* default 1000000 */
    int64_t k_range;          /* default 5 */
    double height_tolerance;  /* default 1e-6 */
} ecfac_config;

typedef struct ecfac_context ecfac_context;

ECFAC_API const char* ecfac_version(void);
ECFAC_API const char* ecfac_status_name(ecfac_status status);

ECFAC_API void ecfac_config_default(ecfac_config* config);

/* config may be NULL for the defaults. */
ECFAC_API ecfac_status ecfac_context_create(const ecfac_config* config, ecfac_context** out);
ECFAC_API void ecfac_context_destroy(ecfac_context* ctx);

/* Message and stage of the last failed call on ctx; "" when none. The
 * pointers stay valid until the next call on ctx. */
ECFAC_API const char* ecfac_last_error(const ecfac_context* ctx);
ECFAC_API const char* ecfac_last_stage(const ecfac_context* ctx);

ECFAC_API void ecfac_string_free(char* s);

/* Minimal r for (p, q) with its membership checks and the curve data. */
ECFAC_API ecfac_status ecfac_construct(ecfac_context* ctx, const char* p, const char* q, char** json_out);

/* Both Selmer groups with every local verdict, and the rank bound. */
ECFAC_API ecfac_status ecfac_selmer(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out);

/* Root number of y^2 = x^3 - 2rDx and the conjectural-rank conclusion. */
ECFAC_API ecfac_status ecfac_root(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out);

/* Generator search, heights and valuation checks. */
ECFAC_API ecfac_status ecfac_search(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out);

/* The whole pipeline; the JSON is a replayable certificate. */
ECFAC_API ecfac_status ecfac_factor(ecfac_context* ctx, const char* p, const char* q, char** json_out);

/* Split D from a rational x-coordinate "a/b" alone. ECFAC_EXHAUSTED when
 * neither gcd is a proper divisor. */
ECFAC_API ecfac_status ecfac_extract(ecfac_context* ctx, const char* D, const char* x, char** json_out);

/* Replays a certificate from ecfac_factor. ECFAC_VIOLATION if any check
 * fails; the report lists passed and failed checks either way. */
ECFAC_API ecfac_status ecfac_verify_certificate(ecfac_context* ctx, const char* certificate_json, char** json_out);

/* Minimal-r table over a corpus given as text, one "p q" pair per line with
 * '#' comments. Rows that fail are marked and the run continues. */
ECFAC_API ecfac_status ecfac_stats(ecfac_context* ctx, const char* corpus_text, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif
