/*
 * C interface to the symlie library: exact Lie algebra structures on
 * symmetric powers built from a linear map and one of its eigenvectors.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a symlie_status;
 * on failure symlie_last_error() describes the problem (per thread).
 * Strings returned through char** are JSON documents (or scalar strings)
 * allocated by the library and released with symlie_string_free.
 */
#ifndef SYMLIE_H
#define SYMLIE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMLIE_BUILDING_LIBRARY)
#    define SYMLIE_API __declspec(dllexport)
#  else
#    define SYMLIE_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define SYMLIE_API __attribute__((visibility("default")))
#else
#  define SYMLIE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symlie_status {
  SYMLIE_OK = 0,
  SYMLIE_E_PARSE = 1,                   /* malformed input text or JSON */
  SYMLIE_E_INVALID_ARGUMENT = 2,
  SYMLIE_E_FIELD_MISMATCH = 3,
  SYMLIE_E_DIMENSION_MISMATCH = 4,
  SYMLIE_E_SINGULAR = 5,
  SYMLIE_E_NOT_AN_EIGENVECTOR = 6,
  SYMLIE_E_EIGENVALUES_NOT_IN_FIELD = 7,
  SYMLIE_E_BUDGET_EXCEEDED = 8,
  SYMLIE_E_INTERNAL = 9
} symlie_status;

typedef struct symlie_field symlie_field;
typedef struct symlie_matrix symlie_matrix;
typedef struct symlie_seed symlie_seed;
typedef struct symlie_table symlie_table;

SYMLIE_API const char* symlie_version(void);
SYMLIE_API const char* symlie_status_name(symlie_status status);
/* Message of the last failed call on this thread ("" if none). */
SYMLIE_API const char* symlie_last_error(void);
SYMLIE_API void symlie_string_free(char* s);

/* "Q", "Qi" or "Fp(p)". */
SYMLIE_API symlie_status symlie_field_parse(const char* tag, symlie_field** out);
SYMLIE_API void symlie_field_free(symlie_field* field);

/* Inline "[[1,0],[1,1]]" or a {"field", "rows"} JSON object. */
SYMLIE_API symlie_status symlie_matrix_parse(const symlie_field* field, const char* text, symlie_matrix** out);
/* Inline "[0,1]"; stored as an n x 1 column. */
SYMLIE_API symlie_status symlie_vector_parse(const symlie_field* field, const char* text, symlie_matrix** out);
SYMLIE_API symlie_status symlie_matrix_to_json(const symlie_matrix* m, char** out_json);
SYMLIE_API void symlie_matrix_free(symlie_matrix* m);

/* Fails with SYMLIE_E_NOT_AN_EIGENVECTOR unless A w = lambda w. */
SYMLIE_API symlie_status symlie_seed_create(const symlie_matrix* a, const symlie_matrix* w, symlie_seed** out);
SYMLIE_API symlie_status symlie_seed_lambda(const symlie_seed* seed, char** out_scalar);
SYMLIE_API int symlie_seed_is_degenerate(const symlie_seed* seed);
SYMLIE_API void symlie_seed_free(symlie_seed* seed);

SYMLIE_API symlie_status symlie_table_construct(const symlie_seed* seed, unsigned degree, symlie_table** out);
SYMLIE_API symlie_status symlie_table_graded(const symlie_seed* seed, unsigned max_degree, symlie_table** out);
SYMLIE_API symlie_status symlie_table_from_json(const char* json, symlie_table** out);
SYMLIE_API symlie_status symlie_table_to_json(const symlie_table* table, char** out_json);
SYMLIE_API size_t symlie_table_dim(const symlie_table* table);
SYMLIE_API void symlie_table_free(symlie_table* table);

/* Jacobi check, derived and lower central series, center, fingerprint. */
SYMLIE_API symlie_status symlie_table_analyze(const symlie_table* table, char** out_json);
SYMLIE_API symlie_status symlie_table_fingerprint(const symlie_table* table, char** out_json);

/* Checks a given map src -> dst. */
SYMLIE_API symlie_status symlie_verify_hom(const symlie_table* src, const symlie_table* dst, const symlie_matrix* map,
                                           char** out_json);
/* Exhaustive search over F_p; reports {"isomorphic": bool, "witness": ...}.
 * budget = 0 selects the default (10^6 candidate maps). */
SYMLIE_API symlie_status symlie_brute_force_iso(const symlie_table* t1, const symlie_table* t2, uint64_t budget,
                                                char** out_json);
/* Conjugates the seed by T and returns the new seed with a verified witness. */
SYMLIE_API symlie_status symlie_conjugated_iso(const symlie_seed* seed, const symlie_matrix* t, unsigned degree,
                                               char** out_json);

/* Two-variable classification over Q or Q(i). */
SYMLIE_API symlie_status symlie_classify(const symlie_seed* seed, unsigned degree, char** out_json);

/* Finite-field enumeration. budget = 0 selects the defaults (10^7 pairs,
 * 10^6 group elements / candidate maps). */
SYMLIE_API symlie_status symlie_orbits(unsigned n, uint64_t p, int include_zero_w, uint64_t budget, char** out_json);
SYMLIE_API symlie_status symlie_iso_class_count(unsigned n, uint64_t p, unsigned degree, int include_zero_w,
                                                uint64_t budget, uint64_t iso_budget, char** out_json);
SYMLIE_API symlie_status symlie_eigendirections(const symlie_matrix* a, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SYMLIE_H */
