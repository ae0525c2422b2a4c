/* led_ti: C API for the byte-serial LED-128 laboratory.
 *
 * Everything fallible returns a ledti_status; the thread-local message from
 * ledti_last_error() describes the most recent failure in the calling
 * thread. All 64-bit block values use the natural integer value of the
 * 16-hex-digit big-endian spelling (the MSB is the first nibble loaded into
 * the state matrix). Keys are two such words: key[0] = first 16 hex digits
 * (K1), key[1] = last 16 (K2).
 */
#ifndef LED_TI_H
#define LED_TI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---------------------------------------------------------------- status -- */

typedef enum ledti_status {
    LEDTI_OK = 0,
    LEDTI_ERR_ARGUMENT = 1, /* bad parameter, malformed hex, out-of-range */
    LEDTI_ERR_FORMAT = 2,   /* malformed file contents */
    LEDTI_ERR_IO = 3,       /* filesystem failure */
    LEDTI_ERR_VERIFY = 4,   /* a TI property does not hold */
    LEDTI_ERR_STATE = 5,    /* call-sequence violation */
    LEDTI_ERR_INTERNAL = 6  /* unexpected exception */
} ledti_status;

/* Message for the most recent failing call in this thread ("" if none). The
 * pointer stays valid until the next failing call in the same thread. */
const char* ledti_last_error(void);

/* "major.minor.patch" */
const char* ledti_version(void);

/* ------------------------------------------------------------- hex utils -- */

/* Parses exactly 16 (resp. 32) hex digits. `field` names the value in error
 * messages ("plaintext", "key", ...); NULL means "value". */
ledti_status ledti_parse_hex64(const char* text, const char* field,
                               uint64_t* out);
ledti_status ledti_parse_hex128(const char* text, const char* field,
                                uint64_t out[2]);

/* Writes 16 lowercase hex digits plus a NUL terminator into out[17]. */
void ledti_format_hex64(uint64_t value, char out[17]);

/* ------------------------------------------------------------ encryption -- */

typedef enum ledti_impl {
    LEDTI_IMPL_REFERENCE = 0, /* round-function oracle (no schedule) */
    LEDTI_IMPL_SERIAL = 1,    /* unprotected byte-serial datapath */
    LEDTI_IMPL_TI = 2         /* two-share threshold-implementation datapath */
} ledti_impl;

/* One LED-128 encryption. `seed` feeds the masking RNG (used by the TI
 * datapath only; ciphertexts never depend on it). `cycles` (optional)
 * receives the billed cycle count — 0 for the reference implementation. */
ledti_status ledti_encrypt(ledti_impl impl, uint64_t plaintext,
                           const uint64_t key[2], uint64_t seed,
                           uint64_t* ciphertext, uint64_t* cycles);

/* --------------------------------------------------------- TI verification  */

/* Verifies correctness, non-completeness and uniformity of the decomposed
 * Sbox tables at `path` (NULL = the built-in tables), exhaustively. The
 * human-readable per-property report is copied into `report` (truncated,
 * always NUL-terminated when report_cap > 0; pass 0 to skip). Returns
 * LEDTI_OK when all three properties hold, LEDTI_ERR_VERIFY when at least
 * one fails, LEDTI_ERR_FORMAT / LEDTI_ERR_IO for unusable input. */
ledti_status ledti_verify_tables(const char* path, char* report,
                                 size_t report_cap);

/* ------------------------------------------------------- trace generation  */

typedef enum ledti_design {
    LEDTI_DESIGN_LED = 0,   /* unprotected serial datapath */
    LEDTI_DESIGN_LED_TI = 1 /* protected two-share datapath */
} ledti_design;

typedef enum ledti_model {
    LEDTI_MODEL_HD = 0, /* Hamming distance of register updates */
    LEDTI_MODEL_HW = 1  /* Hamming weight of written values */
} ledti_model;

/* Documented defaults of the fixed-vs-random protocol. Bare invocations are
 * reproducible because the seed is fixed, never time-derived. */
#define LEDTI_DEFAULT_SEED 0x1ED5EEDull
#define LEDTI_TVLA_FIXED_PLAINTEXT 0x0ull
#define LEDTI_TVLA_KEY_WORD 0x0123456789ABCDEFull /* both key words */
#define LEDTI_TVLA_THRESHOLD 4.5

typedef struct ledti_trace_params {
    ledti_design design;
    ledti_model model;
    uint32_t n_traces; /* >= 2 */
    double sigma;      /* Gaussian noise std-dev, >= 0 */
    uint64_t seed;     /* base seed of the fixed-vs-random protocol */
    uint64_t fixed_plaintext;
    uint64_t key[2];
} ledti_trace_params;

typedef struct ledti_trace_summary {
    uint32_t n_traces;
    uint32_t n_samples; /* per trace == billed cycles of the design */
    uint32_t n_fixed;
    uint32_t n_random;
} ledti_trace_summary;

/* Runs the fixed-vs-random protocol and writes a trace-set file to
 * `out_path`. Identical params produce byte-identical files. */
ledti_status ledti_generate_traces(const ledti_trace_params* params,
                                   const char* out_path,
                                   ledti_trace_summary* summary);

/* ------------------------------------------------------------------ TVLA -- */

typedef struct ledti_tvla_result {
    double max_abs_t;
    double threshold;
    int leaks;              /* 1 = evidence of leakage, 0 = none */
    int degenerate_warning; /* 1 if any sample had two constant classes */
    uint64_t n_fixed;
    uint64_t n_random;
    uint32_t n_samples;
} ledti_tvla_result;

/* Welch fixed-vs-random t-test over the trace-set file at `in_path`.
 * Optional report files are written when the paths are non-NULL. A Leaks
 * verdict is still LEDTI_OK — inspect result->leaks. */
ledti_status ledti_tvla_file(const char* in_path, double threshold,
                             const char* json_report_path,
                             const char* csv_report_path,
                             ledti_tvla_result* result);

/* -------------------------------------------------------------- self-test  */

typedef void (*ledti_line_fn)(const char* line, void* user);

/* Runs acceptance criteria 1..9 in order; `on_line` (optional) receives one
 * formatted result line per criterion as it completes. Returns LEDTI_OK iff
 * every criterion passed, LEDTI_ERR_VERIFY otherwise. */
ledti_status ledti_selftest(ledti_line_fn on_line, void* user);

/* ------------------------------------------------------ simulator handle -- */

/* Opaque cycle-accurate simulator. Not thread-safe; use one per thread. */
typedef struct ledti_sim ledti_sim;

ledti_status ledti_sim_create(ledti_design design, ledti_sim** out);
void ledti_sim_destroy(ledti_sim* sim);

/* Arms a run (LEDTI_ERR_STATE if one is already in progress). */
ledti_status ledti_sim_load(ledti_sim* sim, uint64_t plaintext,
                            const uint64_t key[2], uint64_t seed);

/* Runs the armed encryption to completion, recording the register-transition
 * log, and returns the ciphertext and billed cycle count. */
ledti_status ledti_sim_run(ledti_sim* sim, uint64_t* ciphertext,
                           uint64_t* cycles);

/* Exports the most recent run's log as CSV
 * (`cycle,state,reg_id,old_hex,new_hex`). LEDTI_ERR_STATE before any run. */
ledti_status ledti_sim_export_log(ledti_sim* sim, const char* csv_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LED_TI_H */
