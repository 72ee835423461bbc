/* C interface to the twisted-sector product engine. Documents are loaded
 * into opaque handles; every operation returns a status code, with a
 * thread-local message available from orb_last_error(). Reports and tables
 * come back as heap strings released with orb_string_free(). */
#ifndef ORBIFOLD_H
#define ORBIFOLD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct orb_datum orb_datum;

typedef enum {
  ORB_OK = 0,
  ORB_ERR_IO = 1,      /* file not readable */
  ORB_ERR_PARSE = 2,   /* not well-formed JSON */
  ORB_ERR_INVALID = 3, /* schema violation, broken cross reference, failed precondition */
  ORB_ERR_ARG = 4,     /* null handle or out pointer, wrong document kind, bad enum */
  ORB_ERR_INTERNAL = 5,
} orb_status;

typedef enum {
  ORB_THEORY_CHOW = 1,
  ORB_THEORY_K = 2,
  ORB_THEORY_BOTH = 3, /* checks only; tables and comparisons need one theory */
} orb_theory;

enum {
  ORB_SUITE_EQ6 = 1,   /* age class plus reflected age class equals the normal class */
  ORB_SUITE_EQ1 = 2,   /* two-sided excess identity on triple sectors */
  ORB_SUITE_ASSOC = 4, /* associativity of the twisted product */
  ORB_SUITE_COMM = 8,  /* twisted commutativity, full and invariant */
  ORB_SUITE_CHERN = 16,/* the sector-wise character intertwines the two products */
  ORB_SUITE_RANK = 32, /* obstruction ranks and degree additivity */
  ORB_SUITE_ALL = 63,
};

/* Message for the most recent failing call on this thread. */
const char* orb_last_error(void);

orb_status orb_load(const char* path, orb_datum** out);
orb_status orb_load_string(const char* text, const char* label, orb_datum** out);
void orb_free(orb_datum* d);
void orb_string_free(char* s);

/* Structural consistency report for a loaded document. `failures` (optional)
 * receives the number of failing checks; the call itself succeeds whenever
 * the report could be produced. */
orb_status orb_validate(orb_datum* d, int json, char** report, int* failures);

/* Runs the selected identity suites (a mask of ORB_SUITE_*). */
orb_status orb_check(orb_datum* d, orb_theory theory, unsigned suites, int json, char** report, int* failures);

/* Multiplication table over the full sector basis or the invariant basis. */
orb_status orb_table(orb_datum* d, orb_theory theory, int invariant_only, int json, char** out);

/* Sector dimensions and ages. */
orb_status orb_ages(orb_datum* d, int json, char** out);

/* Compares the invariant product ring of `orbifold` with the resolution
 * presentation in `resolution`. `matching` may be null; when given it names
 * the basis matching and which elements may rescale. `verdict` (optional)
 * receives 1 when every comparison check passes. */
orb_status orb_compare(orb_datum* orbifold, orb_datum* resolution, orb_datum* matching, orb_theory theory, int json,
                       char** report, int* verdict);

/* Direct queries; rational results are returned as "p/q" strings. */
orb_status orb_group_order(orb_datum* d, int* out);
orb_status orb_age_of(orb_datum* d, int g, int comp, char** out);
orb_status orb_obstruction_rank(orb_datum* d, int g1, int g2, int comp, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORBIFOLD_H */
