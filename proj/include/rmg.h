/* C interface to the right modular groupoid library.
 *
 * Conventions:
 *  - Every function returns a status code. Check-style entry points return
 *    RMG_OK when the checked property holds and RMG_FALSE when it does not;
 *    both are successful calls. RMG_ERR_* signal bad input or a refused
 *    workload, with *err (when present) set to a malloc'd message.
 *  - All element indices crossing this boundary are 1-based.
 *  - Every char** output and *err is malloc'd; release with rmg_string_free.
 *    Outputs are left untouched on error, err is left untouched on success.
 *  - Fractions travel as strings ("p/q" or a bare integer). Decimal
 *    notation is rejected everywhere.
 */
#ifndef RMG_H
#define RMG_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  RMG_OK = 0,
  RMG_FALSE = 1,
  RMG_ERR_INPUT = 2,
  RMG_ERR_CAPACITY = 3,
};

typedef struct rmg_table rmg_table;
typedef struct rmg_fuzzy rmg_fuzzy;

void rmg_string_free(char* s);

/* -- composition tables ------------------------------------------------- */

int rmg_table_parse(const char* text, rmg_table** out, char** err);
void rmg_table_free(rmg_table* t);
int rmg_table_serialize(const rmg_table* t, char** out);
int rmg_table_order(const rmg_table* t);
/* a, b and the result are 1-based; returns 0 on out-of-range arguments. */
int rmg_table_compose(const rmg_table* t, int a, int b);

/* law is one of: left_invertive, medial, paramedial, extended_medial,
 * associative, commutative. On RMG_FALSE *witness_json is a JSON array with
 * the least violating tuple (1-based). */
int rmg_check_law(const rmg_table* t, const char* law, char** witness_json,
                  char** err);

/* *out is the serialized element list ("" when there is none). */
int rmg_left_identities(const rmg_table* t, char** out);

/* JSON profile: order, per-law verdicts, left identities, regularity flags
 * and witnesses. */
int rmg_classify(const rmg_table* t, char** profile_json, char** err);

/* -- crisp ideals -------------------------------------------------------- */

/* subset_line: one line of ascending 1-based indices. kind is one of:
 * subgroupoid, left, right, two_sided, generalized_bi, bi, interior, quasi,
 * one_two. On RMG_FALSE *witness is the least escaping element (1-based). */
int rmg_crisp_check(const rmg_table* t, const char* subset_line,
                    const char* kind, int* witness, char** err);

/* *lines gets one subset line per match, ascending by bitmask; "" when no
 * subset qualifies. */
int rmg_crisp_enumerate(const rmg_table* t, const char* kind, char** lines,
                        char** err);

/* -- fuzzy subsets and fuzzy ideals -------------------------------------- */

int rmg_fuzzy_parse(const char* text, rmg_fuzzy** out, char** err);
void rmg_fuzzy_free(rmg_fuzzy* f);
int rmg_fuzzy_serialize(const rmg_fuzzy* f, char** out);

/* kind: classic_interior, subgroupoid, left, right, two_sided, bi,
 * generalized_bi, interior, quasi, one_two. k_frac: "p/q" in [0,1).
 * quantified != 0 runs the fuzzy-point checker, which requires every grade
 * and k to lie on the denominator-grid_d grid. *verdict_json always carries
 * the machine-readable verdict (holds, failed condition, witness tuple,
 * sides of the failed inequality). */
int rmg_fuzzy_check(const rmg_table* t, const rmg_fuzzy* f, const char* kind,
                    const char* k_frac, int quantified, int grid_d,
                    char** verdict_json, char** err);

/* -- enumeration and homomorphisms --------------------------------------- */

/* *stream gets the matching tables in lexicographic order, separated by one
 * blank line. */
int rmg_enumerate(int order, int left_invertive, int left_identity,
                  int completely_regular, int up_to_isomorphism, char** stream,
                  char** err);

/* JSON array of all homomorphisms a -> b, each {"map": [..1-based..],
 * "onto": bool}, lexicographic by map. */
int rmg_homs(const rmg_table* a, const rmg_table* b, char** homs_json,
             char** err);

/* -- theorem suite ------------------------------------------------------- */

/* config_json keys (all optional): max_order, grid_d, ks (array of "p/q"),
 * samples, sample_grid_d, seed, exhaustive_fuzzy_max_order,
 * equivalence_max_order, equivalence_grid_d, hom_max_order, table (a table in
 * the text format; restricts the run to it), theorems (array of registry
 * ids). Pass NULL or "{}" for defaults. Returns RMG_FALSE when any result is
 * a counterexample. */
int rmg_verify(const char* config_json, char** text_report, char** json_report,
               char** err);

#ifdef __cplusplus
}
#endif

#endif /* RMG_H */
