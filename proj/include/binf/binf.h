#ifndef BINF_BINF_H
#define BINF_BINF_H

#include <stddef.h>

#if defined(_WIN32)
#define BINF_API __declspec(dllexport)
#else
#define BINF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum binf_status {
  BINF_OK = 0,
  BINF_INVALID_ARGUMENT = 1,
  BINF_UNSUPPORTED_TYPE = 2,
  BINF_INVALID_TABLEAU = 3,
  BINF_INVALID_WORD = 4,
  BINF_LIMIT_EXCEEDED = 5,
  BINF_INTERNAL = 6
} binf_status;

typedef enum binf_format { BINF_FORMAT_TEXT = 0, BINF_FORMAT_JSON = 1, BINF_FORMAT_DOT = 2 } binf_format;

typedef enum binf_tableau_query {
  BINF_QUERY_SEG = 0,
  BINF_QUERY_XI = 1,
  BINF_QUERY_WEIGHT = 2,
  BINF_QUERY_CONTENT = 3,
  BINF_QUERY_EPS_PHI = 4,
  BINF_QUERY_ALL = 5
} binf_tableau_query;

/* T(infinity) of one type, with its segment/Kostant machinery. */
typedef struct binf_crystal binf_crystal;
/* One marginally large tableau. Keeps its crystal alive. */
typedef struct binf_tableau binf_tableau;

/* Message of the last failed call on this thread; never NULL. */
BINF_API const char* binf_last_error(void);
BINF_API const char* binf_status_string(binf_status status);
/* Frees strings returned through char** out-parameters. */
BINF_API void binf_string_free(char* s);

/* type: "A1".."A8", "B2".."B5", "C2".."C5", "D3".."D5", "G2". */
BINF_API binf_status binf_crystal_create(const char* type, binf_crystal** out);
BINF_API void binf_crystal_destroy(binf_crystal* crystal);
BINF_API binf_status binf_crystal_set_threads(binf_crystal* crystal, unsigned threads);
BINF_API binf_status binf_crystal_rank(const binf_crystal* crystal, int* out);
BINF_API binf_status binf_crystal_num_rows(const binf_crystal* crystal, int* out);

/* Rows separated by newlines, ';' or '/', letters as signed integers.
   With reduced != 0 the forced prefix of each row is omitted and "*"
   marks an empty row. */
BINF_API binf_status binf_tableau_parse(const binf_crystal* crystal, const char* text, int reduced,
                                        binf_tableau** out);
BINF_API binf_status binf_tableau_highest(const binf_crystal* crystal, binf_tableau** out);
BINF_API binf_status binf_tableau_clone(const binf_tableau* t, binf_tableau** out);
BINF_API void binf_tableau_destroy(binf_tableau* t);
BINF_API int binf_tableau_equal(const binf_tableau* a, const binf_tableau* b);

BINF_API binf_status binf_tableau_f(const binf_tableau* t, int i, binf_tableau** out);
/* *out is set to NULL when e_i(T) = 0. */
BINF_API binf_status binf_tableau_e(const binf_tableau* t, int i, binf_tableau** out);

/* Full rows, one per line. */
BINF_API binf_status binf_tableau_rows(const binf_tableau* t, char** out);
/* Reduced form with rows joined by "/". */
BINF_API binf_status binf_tableau_reduced(const binf_tableau* t, char** out);

BINF_API binf_status binf_tableau_seg(const binf_tableau* t, int* seg_prime, int* correction, int* seg);
BINF_API binf_status binf_tableau_content(const binf_tableau* t, int* out);
/* wt(T) in simple-root coordinates; len must equal the rank. */
BINF_API binf_status binf_tableau_weight(const binf_tableau* t, int* coords, size_t len);
BINF_API binf_status binf_tableau_eps_phi(const binf_tableau* t, int* eps, int* phi, size_t len);
/* Xi(T) as multiplicities in positive-root table order; len must equal N. */
BINF_API binf_status binf_tableau_xi(const binf_tableau* t, int* mults, size_t len);
BINF_API binf_status binf_tableau_theta(const binf_tableau* t, const int* word, size_t word_len, int* coords,
                                        size_t len);

BINF_API binf_status binf_report_roots(const char* type, binf_format format, char** out);
BINF_API binf_status binf_report_graph(const binf_crystal* crystal, int depth, binf_format format, char** out);
BINF_API binf_status binf_report_tableau(const binf_tableau* t, binf_tableau_query what, binf_format format,
                                         char** out);
BINF_API binf_status binf_report_theta(const binf_tableau* t, const int* word, size_t len, binf_format format,
                                       char** out);
BINF_API binf_status binf_report_beta(const char* type, const int* word, size_t len, binf_format format, char** out);
/* word may be NULL for the default long word. *ok is 1 when all routes agree. */
BINF_API binf_status binf_verify_gk(const char* type, int height, const int* word, size_t len, unsigned threads,
                                    binf_format format, int* ok, char** out);
/* mu in simple-root coordinates, or fundamental-weight coordinates when
   mu_is_weight != 0. */
BINF_API binf_status binf_report_qkostant(const char* type, const int* mu, size_t len, int mu_is_weight,
                                          binf_format format, char** out);
/* lambda and mu in fundamental-weight coordinates. */
BINF_API binf_status binf_report_kostka(const char* type, const int* lambda, const int* mu, size_t len,
                                        binf_format format, char** out);
BINF_API binf_status binf_report_hall_littlewood(const char* type, const int* mu, size_t len, binf_format format,
                                                 char** out);

#ifdef __cplusplus
}
#endif

#endif
