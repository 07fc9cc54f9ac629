/* C API for the wfusion library: fusion products, duals, conformal-weight
 * classification, enumeration, induction, literature dictionaries and the
 * property-test harness for simple current extensions of Heisenberg times
 * singlet vertex algebras (the Bp / B2orb / Sp / S2orb families).
 *
 * All functions are thread-safe as long as each wf_algebra handle is used
 * from one thread at a time; the handles themselves are immutable after
 * creation, so sharing a handle across readers is fine.
 *
 * Strings returned through `char** out` are heap-allocated; release them
 * with wf_string_free. On error, `out` is left untouched and a description
 * is available from wf_last_error (thread-local).
 */

#ifndef WFUSION_H
#define WFUSION_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wf_algebra wf_algebra;

typedef enum wf_status {
    WF_OK = 0,
    WF_ERR_DOMAIN = 1,   /* valid syntax, impossible request */
    WF_ERR_PARSE = 2,    /* malformed input text */
    WF_ERR_INVALID = 3,  /* null handle / argument misuse */
    WF_ERR_INTERNAL = 4, /* should not happen */
} wf_status;

typedef enum wf_format {
    WF_TEXT = 0,
    WF_JSON = 1,
    WF_CSV = 2,
    WF_MARKDOWN = 3,
} wf_format;

const char* wf_version(void);

/* Thread-local JSON blob {"kind": "...", "message": "..."} describing the
 * most recent failure on this thread; empty string if none. */
const char* wf_last_error(void);

void wf_string_free(char* s);

/* spec: "Bp:4", "B2orb:3", "Sp:3", "S2orb:2", "custom:p=3,rJ=2,kappa=0" */
wf_status wf_algebra_new(const char* spec, wf_algebra** out);
void wf_algebra_free(wf_algebra* algebra);

/* (p, r_J, kappa, lambda_J^2, grading) of the extension */
wf_status wf_algebra_describe(const wf_algebra* algebra, wf_format format, char** out);

/* Labels: W[r,s,l], E[w,l], Q[r,s,l]; weights: "g*e + u + v*am". */
wf_status wf_canonical(const wf_algebra* algebra, const char* label, wf_format format, char** out);
wf_status wf_fuse(const wf_algebra* algebra, const char* lhs, const char* rhs, wf_format format,
                  char** out);
wf_status wf_dual(const wf_algebra* algebra, const char* label, wf_format format, char** out);
wf_status wf_classify(const wf_algebra* algebra, const char* label, wf_format format, char** out);
wf_status wf_lowest_weight(const wf_algebra* algebra, const char* label, wf_format format,
                           char** out);
wf_status wf_summand_weight(const wf_algebra* algebra, const char* label, long n, wf_format format,
                            char** out);

/* predicate: "hw" | "gr" | "c1"; sector: "local" | "twisted" | "all" */
wf_status wf_enumerate(const wf_algebra* algebra, const char* predicate, const char* sector,
                       wf_format format, char** out);

/* heisenberg carries gamma*lambda_J in the weight grammar;
 * singlet is M[r,s], F[w] or P[r,s] */
wf_status wf_induce(const wf_algebra* algebra, const char* heisenberg, const char* singlet,
                    wf_format format, char** out);

/* Translates a literature name to a core label or back (direction is
 * detected from the input). dialect: "betagamma", "sl2_half",
 * "sl2_fourthirds", "BP_53", "BP_94". */
wf_status wf_translate(const wf_algebra* algebra, const char* dialect, const char* text,
                       wf_format format, char** out);

/* Recomputes the printed literature identities; *failures counts misses. */
wf_status wf_literature(const wf_algebra* algebra, const char* dialect_or_null, wf_format format,
                        char** out, unsigned* failures);

/* Fusion table over the given labels, or over the grading-restricted
 * simples when labels is NULL (kappa = 0 only). */
wf_status wf_table(const wf_algebra* algebra, const char* const* labels, size_t n_labels,
                   wf_format format, char** out);

/* Runs one named suite, or every suite when suite_or_null is NULL. */
wf_status wf_verify(const wf_algebra* algebra, const char* suite_or_null, unsigned samples,
                    unsigned long long seed, wf_format format, char** out, unsigned* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WFUSION_H */
