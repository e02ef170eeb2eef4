/* borbit: exact enumeration of Borel-orbit combinatorics for strongly
 * solvable spherical subgroups, behind a plain C interface.
 *
 * All entry points return a status code; string results are heap-allocated
 * and must be released with borbit_free(). The handle is opaque and not
 * safe for concurrent mutation, but independent handles are independent.
 */
#ifndef BORBIT_H
#define BORBIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct borbit_ctx borbit_ctx;

enum {
  BORBIT_OK = 0,
  BORBIT_E_VALIDATION = 1, /* spec data rejected or not realizable */
  BORBIT_E_USAGE = 2,      /* malformed request */
  BORBIT_E_BUDGET = 3      /* enumeration budget exceeded */
};

/* Last error message of the current thread, empty string when none. */
const char* borbit_last_error(void);

/* Constructors. max_weyl <= 0 selects the default budget (51840).
 * On failure *out is NULL and the status tells why. A context is returned
 * for structurally sound specs even when validation fails, so the report
 * can still be rendered. */
int borbit_open_json(const char* json_text, long max_weyl, borbit_ctx** out);
int borbit_open_file(const char* path, long max_weyl, borbit_ctx** out);
int borbit_open_tu_prime(const char* cartan_type, long max_weyl,
                         borbit_ctx** out);
void borbit_close(borbit_ctx* ctx);

/* "ok\n" or "invalid\n" followed by one line per violated axiom.
 * Returns BORBIT_E_VALIDATION when the spec is invalid. */
int borbit_validation_report(borbit_ctx* ctx, char** out);

/* The spec document serialized back to its JSON format. */
int borbit_spec_json(borbit_ctx* ctx, char** out);

/* "formula=<n> brute=<n> ok" */
int borbit_count(borbit_ctx* ctx, char** out);

/* format: "table" or "json" */
int borbit_orbits(borbit_ctx* ctx, const char* format, char** out);

/* orbit strings look like "w=1,2;I=0" ("w=e", "I=-" for empty parts); any
 * representative is accepted and the canonical reduced name is returned. */
int borbit_act(borbit_ctx* ctx, const char* orbit, const char* word,
               char** out);
int borbit_mact(borbit_ctx* ctx, const char* orbit, const char* word,
                char** out);
int borbit_stab(borbit_ctx* ctx, const char* orbit, char** out);

/* lambda_csv: comma-separated rationals ("1,3/2,2"), NULL for rho. */
int borbit_polytope_json(borbit_ctx* ctx, const char* lambda_csv, char** out);

int borbit_weak_order_dot(borbit_ctx* ctx, char** out);

/* "count_h=<n> count_reduction=<n> count_tu=<n> satisfied=yes|no" */
int borbit_knop(borbit_ctx* ctx, char** out);

void borbit_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BORBIT_H */
