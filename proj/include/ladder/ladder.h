/*
 * C interface to the ladder algebra library.
 *
 * Elements are opaque handles owned by the caller and released with
 * ladder_element_free. Strings returned through char** out-parameters are
 * heap-allocated and released with ladder_string_free. Every function
 * returns a ladder_status; on anything other than LADDER_OK or LADDER_FAIL
 * the message is available from ladder_last_error (per thread).
 *
 * Report strings are JSON objects of the form
 *   {"schema":1,"status":"pass"|"fail"|"value","summary":...,
 *    "payload":...,"counterexample":...}
 */
#ifndef LADDER_LADDER_H
#define LADDER_LADDER_H

#include <stdint.h>

#if defined(LADDER_BUILDING_LIBRARY)
#define LADDER_API __attribute__((visibility("default")))
#else
#define LADDER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ladder_status {
  LADDER_OK = 0,
  LADDER_FAIL = 1,          /* a verification ran and found a counterexample */
  LADDER_ERR_PARSE = 2,     /* malformed element text or JSON */
  LADDER_ERR_INVALID = 3,   /* argument outside the operation's domain */
  LADDER_ERR_DOMAIN = 4,    /* operation undefined for this element (e.g. Y) */
  LADDER_ERR_NULL = 5,      /* required pointer argument was NULL */
  LADDER_ERR_KIND = 6,      /* element of the wrong kind */
  LADDER_ERR_INTERNAL = 7
} ladder_status;

typedef enum ladder_kind {
  LADDER_KIND_LIE = 0,  /* Z[n,m] and Y */
  LADDER_KIND_GL = 1,   /* E[i,j] */
  LADDER_KIND_C = 2,    /* C[d], the quotient by gl_+ */
  LADDER_KIND_POLY = 3  /* polynomials in the ladders t[k] */
} ladder_kind;

typedef struct ladder_element ladder_element;

LADDER_API const char* ladder_version(void);
LADDER_API const char* ladder_last_error(void);
LADDER_API const char* ladder_status_name(ladder_status status);
LADDER_API void ladder_string_free(char* s);

/* Elements. */
LADDER_API ladder_status ladder_parse(const char* text, ladder_element** out);
/* Parses and requires the given kind; "0" is accepted for every kind. */
LADDER_API ladder_status ladder_parse_kind(const char* text, ladder_kind kind, ladder_element** out);
LADDER_API ladder_status ladder_from_json(const char* json, ladder_kind kind, ladder_element** out);
LADDER_API void ladder_element_free(ladder_element* e);
LADDER_API ladder_status ladder_element_kind(const ladder_element* e, ladder_kind* out);
LADDER_API ladder_status ladder_element_is_zero(const ladder_element* e, int* out);
LADDER_API ladder_status ladder_element_equal(const ladder_element* a, const ladder_element* b, int* out);
LADDER_API ladder_status ladder_to_text(const ladder_element* e, char** out);
LADDER_API ladder_status ladder_to_json(const ladder_element* e, char** out);

/* Algebra. */
LADDER_API ladder_status ladder_bracket(const ladder_element* a, const ladder_element* b, ladder_element** out);
/* *homogeneous is 0 for zero or mixed-degree elements, and *out is untouched. */
LADDER_API ladder_status ladder_degree(const ladder_element* e, int64_t* out, int* homogeneous);
/* Report whose payload holds the formal decomposition of Z[n,m] and its value. */
LADDER_API ladder_status ladder_decompose(uint32_t n, uint32_t m, char** report);
LADDER_API ladder_status ladder_triangular_split(const ladder_element* e, ladder_element** plus,
                                                 ladder_element** zero, ladder_element** minus);
LADDER_API ladder_status ladder_act(const ladder_element* lie, const ladder_element* poly, ladder_element** out);
/* Δ of a ladder polynomial, as text. */
LADDER_API ladder_status ladder_coproduct(const ladder_element* poly, char** out);

/* gl_+ ideal and quotient. ladder_to_e returns LADDER_FAIL with *out = NULL
 * when the element is not a finite combination of matrix units. */
LADDER_API ladder_status ladder_to_e(const ladder_element* lie, ladder_element** out);
LADDER_API ladder_status ladder_from_e(const ladder_element* gl, ladder_element** out);
LADDER_API ladder_status ladder_trace(const ladder_element* gl, char** out);
LADDER_API ladder_status ladder_project(const ladder_element* lie, ladder_element** out);
LADDER_API ladder_status ladder_section(const ladder_element* c, ladder_element** out);

/* Extension structure. mutation may be NULL or "none". */
LADDER_API ladder_status ladder_extension_verify(uint32_t bound, const char* mutation, char** report);
LADDER_API ladder_status ladder_extension_obstruct(const ladder_element* b_plus, const ladder_element* b_minus,
                                                   char** report);
LADDER_API ladder_status ladder_extension_infeasible(uint32_t top, char** report);
LADDER_API ladder_status ladder_extension_grid(uint32_t support_bound, int32_t coeff_bound, char** report);

/* Word layer. alphabet_json: {"letters":[{"name":"a","degree":1,"sym":"1"}]}.
 * Word-generator text: "Z{a.b|a} - 1/2*Z{|b}". */
LADDER_API ladder_status ladder_words_bracket(const char* alphabet_json, const char* a, const char* b, char** report);
LADDER_API ladder_status ladder_words_act(const char* alphabet_json, const char* generator, const char* word,
                                          char** report);
LADDER_API ladder_status ladder_words_iota(const char* alphabet_json, uint32_t n, uint32_t m, char** report);
LADDER_API ladder_status ladder_words_iota_h(const char* alphabet_json, uint32_t k, char** report);
LADDER_API ladder_status ladder_words_check_iota(const char* alphabet_json, uint32_t n, uint32_t m, uint32_t k,
                                                 char** report);
LADDER_API ladder_status ladder_dse_expand(const char* alphabet_json, uint32_t order, char** report);

/* Cohomology. */
LADDER_API ladder_status ladder_cohomology_betti_gl(uint32_t n, char** report);
LADDER_API ladder_status ladder_cohomology_betti_json(const char* algebra_json, char** report);
LADDER_API ladder_status ladder_cohomology_h1(uint32_t bound, int with_y, char** report);
LADDER_API ladder_status ladder_cohomology_stability(uint32_t n, uint32_t p, char** report);

/* Full invariant suite. Returns LADDER_FAIL when any item fails. */
LADDER_API ladder_status ladder_verify(uint32_t bound, const char* mutation, char** report);
/* JSON array of accepted mutation names. */
LADDER_API ladder_status ladder_mutation_names(char** out);

#ifdef __cplusplus
}
#endif

#endif
