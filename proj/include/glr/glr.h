/*
 * C interface to the generalized Lukasiewicz ring workbench.
 *
 * The library builds finite rings from structured specs, enumerates their
 * two-sided ideal lattices, decides whether the ideals form a (pseudo)
 * MV-algebra, and computes the decomposition into unitary special primary
 * rings.  All state lives behind opaque handles; every entry point returns a
 * glr_status and leaves a human-readable message for the calling thread in
 * glr_last_error() on failure.
 *
 * Reports are rendered strings (JSON, text, or DOT).  Strings returned
 * through char** out-parameters are heap allocated and must be released with
 * glr_string_free().
 */

#ifndef GLR_H
#define GLR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glr_status {
    GLR_OK = 0,
    GLR_E_PARSE = 1,            /* bad spec text or JSON; see glr_last_error_offset() */
    GLR_E_INVALID_SPEC = 2,     /* structurally invalid spec (non-prime p, ...) */
    GLR_E_NOT_A_RING = 3,       /* table payload fails a ring axiom */
    GLR_E_CAP_EXCEEDED = 4,     /* element/ideal cap crossed */
    GLR_E_NOT_AN_IDEAL = 5,
    GLR_E_CHECK_FAILED = 6,     /* a requested precondition does not hold */
    GLR_E_INVALID_ARGUMENT = 7,
    GLR_E_IO = 8,
    GLR_E_INTERNAL = 9
} glr_status;

typedef enum glr_format {
    GLR_FORMAT_JSON = 0,
    GLR_FORMAT_TEXT = 1,
    GLR_FORMAT_DOT = 2          /* valid for glr_report_ideals only */
} glr_format;

typedef struct glr_options glr_options;
typedef struct glr_ring glr_ring;

const char* glr_version(void);

/* Message and spec-text byte offset (or -1) of the last failure on this thread. */
const char* glr_last_error(void);
long glr_last_error_offset(void);

glr_options* glr_options_new(void);
void glr_options_free(glr_options* opts);
glr_status glr_options_set_max_elements(glr_options* opts, uint32_t cap);
glr_status glr_options_set_max_ideals(glr_options* opts, uint32_t cap);
glr_status glr_options_set_max_semiring_ideals(glr_options* opts, uint32_t cap);
glr_status glr_options_set_jobs(glr_options* opts, uint32_t jobs);
glr_status glr_options_set_seed(glr_options* opts, uint64_t seed);

/* Build a ring from the spec DSL ("Z8", "M2(GF(2)[x]/(x^2))", "Z4 x Z9",
 * "Z8/(4)", "@file.json", ...).  opts may be NULL for defaults. */
glr_status glr_ring_parse(const char* spec_text, const glr_options* opts, glr_ring** out_ring);

/* Build a ring from a canonical JSON spec document. */
glr_status glr_ring_from_json(const char* json_text, const glr_options* opts,
                              glr_ring** out_ring);

void glr_ring_free(glr_ring* ring);

uint32_t glr_ring_size(const glr_ring* ring);

/* Round-trippable DSL rendering of the ring's spec. */
glr_status glr_ring_render_spec(const glr_ring* ring, char** out_text);

/* JSON summary: size, zero, unity, spec. */
glr_status glr_ring_summary_json(const glr_ring* ring, char** out_json);

/* Ideal lattice report; GLR_FORMAT_DOT renders the Hasse diagram. */
glr_status glr_report_ideals(const glr_ring* ring, const glr_options* opts, glr_format format,
                             char** out_report);

/* which: "glr", "spir", "axioms", "duality" or "all".  *out_ok is 1 when
 * every property asserted by the report holds. */
glr_status glr_report_check(const glr_ring* ring, const char* which, const glr_options* opts,
                            glr_format format, char** out_report, int* out_ok);

glr_status glr_report_decompose(const glr_ring* ring, const glr_options* opts, glr_format format,
                                char** out_report, int* out_ok);

/* The MV-algebra of ideals A(R). */
glr_status glr_report_mv(const glr_ring* ring, const glr_options* opts, glr_format format,
                         char** out_report, int* out_ok);

/* Axiom/commutativity report for an MV table given as JSON
 * {size, oplus, neg_minus, neg_tilde, zero, one}. */
glr_status glr_report_mv_table(const char* mv_json, const glr_options* opts, glr_format format,
                               char** out_report, int* out_ok);

/* The ideal semiring Sem(R) with its axiom report. */
glr_status glr_report_semiring(const glr_ring* ring, const glr_options* opts, glr_format format,
                               char** out_report, int* out_ok);

/* Full corpus property suite. */
glr_status glr_report_corpus(const glr_options* opts, glr_format format, char** out_report,
                             int* out_ok);

void glr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GLR_H */
