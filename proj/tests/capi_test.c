#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "binf/binf.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char* b3_text =
    "1,1,1,1,1,1,1,1,1,2,2,0,-3,-1,-1,-1\n"
    "2,2,2,2,3,3,-2,-2\n"
    "3,0,-3\n";

static void test_tableau(void) {
  binf_crystal* c = NULL;
  binf_tableau* t = NULL;
  binf_tableau* r = NULL;
  char* s = NULL;
  int seg_prime = 0, corr = 0, seg = 0, content = 0;
  int wt[3], eps[3], phi[3], xi[9], coords[9];
  const int word[9] = {3, 2, 3, 2, 1, 2, 3, 2, 1};
  const int expected[9] = {3, 0, 4, 2, 0, 1, 7, 0, 2};
  int rank = 0, rows = 0, i;

  EXPECT(binf_crystal_create("B3", &c) == BINF_OK);
  EXPECT(binf_crystal_rank(c, &rank) == BINF_OK && rank == 3);
  EXPECT(binf_crystal_num_rows(c, &rows) == BINF_OK && rows == 3);
  EXPECT(binf_tableau_parse(c, b3_text, 0, &t) == BINF_OK);
  EXPECT(binf_tableau_parse(c, "2,2,0,-3,-1,-1,-1/3,3,-2,-2/0,-3", 1, &r) == BINF_OK);
  EXPECT(binf_tableau_equal(t, r) == 1);

  EXPECT(binf_tableau_seg(t, &seg_prime, &corr, &seg) == BINF_OK);
  EXPECT(seg_prime == 8 && corr == 2 && seg == 6);
  EXPECT(binf_tableau_content(t, &content) == BINF_OK && content == 19);
  EXPECT(binf_tableau_weight(t, wt, 3) == BINF_OK);
  EXPECT(wt[0] == -10 && wt[1] == -14 && wt[2] == -16);
  EXPECT(binf_tableau_eps_phi(t, eps, phi, 3) == BINF_OK);
  for (i = 0; i < 3; ++i) EXPECT(phi[i] - eps[i] == (i == 0 ? 2 * wt[0] - wt[1] : i == 1 ? -wt[0] + 2 * wt[1] - wt[2] : -2 * wt[1] + 2 * wt[2]));
  EXPECT(binf_tableau_xi(t, xi, 9) == BINF_OK);
  EXPECT(binf_tableau_theta(t, word, 9, coords, 9) == BINF_OK);
  EXPECT(memcmp(coords, expected, sizeof expected) == 0);

  EXPECT(binf_tableau_reduced(t, &s) == BINF_OK);
  EXPECT(s && strcmp(s, "2,2,0,-3,-1,-1,-1/3,3,-2,-2/0,-3") == 0);
  binf_string_free(s);
  s = NULL;

  EXPECT(binf_report_tableau(t, BINF_QUERY_SEG, BINF_FORMAT_TEXT, &s) == BINF_OK);
  EXPECT(s && strcmp(s, "seg'=8\ne_B=2\nseg=6\n") == 0);
  binf_string_free(s);
  s = NULL;

  EXPECT(binf_tableau_weight(t, wt, 2) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_tableau_theta(t, word, 8, coords, 9) == BINF_INVALID_WORD);
  EXPECT(strlen(binf_last_error()) > 0);

  binf_tableau_destroy(r);
  binf_tableau_destroy(t);
  binf_crystal_destroy(c);
}

static void test_operators(void) {
  binf_crystal* c = NULL;
  binf_tableau* h = NULL;
  binf_tableau* f = NULL;
  binf_tableau* e = NULL;
  binf_tableau* none = (binf_tableau*)1;
  char* s = NULL;

  EXPECT(binf_crystal_create("G2", &c) == BINF_OK);
  EXPECT(binf_tableau_highest(c, &h) == BINF_OK);
  EXPECT(binf_tableau_e(h, 1, &none) == BINF_OK && none == NULL);
  EXPECT(binf_tableau_f(h, 2, &f) == BINF_OK);
  EXPECT(binf_tableau_reduced(f, &s) == BINF_OK && strcmp(s, "*/3") == 0);
  binf_string_free(s);
  EXPECT(binf_tableau_e(f, 2, &e) == BINF_OK && binf_tableau_equal(e, h));
  EXPECT(binf_tableau_f(h, 3, &none) == BINF_INVALID_ARGUMENT);
  binf_tableau_destroy(e);
  binf_tableau_destroy(f);
  /* The tableau keeps its crystal alive. */
  binf_crystal_destroy(c);
  EXPECT(binf_tableau_rows(h, &s) == BINF_OK && strcmp(s, "1,1\n2\n") == 0);
  binf_string_free(s);
  binf_tableau_destroy(h);
}

static void test_errors(void) {
  binf_crystal* c = NULL;
  binf_tableau* t = NULL;
  char* s = NULL;
  int ok = -1;

  EXPECT(binf_crystal_create("E8", &c) == BINF_UNSUPPORTED_TYPE && c == NULL);
  EXPECT(strstr(binf_last_error(), "E8") != NULL);
  EXPECT(binf_crystal_create(NULL, &c) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_crystal_create("A2", NULL) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_crystal_create("A2", &c) == BINF_OK);
  EXPECT(binf_tableau_parse(c, "1,1,2/2,2", 0, &t) == BINF_INVALID_TABLEAU && t == NULL);
  EXPECT(strstr(binf_last_error(), "row") != NULL);
  EXPECT(binf_tableau_parse(c, "1,a", 0, &t) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_report_graph(c, -1, BINF_FORMAT_TEXT, &s) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_crystal_set_threads(c, 0) == BINF_OK);
  binf_crystal_destroy(c);

  EXPECT(binf_verify_gk("B2", 6, NULL, 0, 1, BINF_FORMAT_TEXT, &ok, &s) == BINF_OK && ok == 1);
  EXPECT(strncmp(s, "GK B2 height<=6", 15) == 0);
  binf_string_free(s);
  EXPECT(strcmp(binf_status_string(BINF_LIMIT_EXCEEDED), "limit exceeded") == 0);
  binf_string_free(NULL);
  binf_crystal_destroy(NULL);
  binf_tableau_destroy(NULL);
}

static void test_reports(void) {
  char* s = NULL;
  const int mu[2] = {1, 1};
  const int zero[2] = {0, 0};
  const int bad_word[3] = {1, 1, 2};

  EXPECT(binf_report_qkostant("A2", mu, 2, 0, BINF_FORMAT_TEXT, &s) == BINF_OK);
  EXPECT(strstr(s, "q + q^2") != NULL);
  binf_string_free(s);
  EXPECT(binf_report_kostka("A2", mu, zero, 2, BINF_FORMAT_JSON, &s) == BINF_OK);
  EXPECT(strstr(s, "\"multiplicity\": 2") != NULL);
  binf_string_free(s);
  EXPECT(binf_report_hall_littlewood("A2", mu, 1, BINF_FORMAT_TEXT, &s) == BINF_INVALID_ARGUMENT);
  EXPECT(binf_report_beta("A2", bad_word, 3, BINF_FORMAT_TEXT, &s) == BINF_INVALID_WORD);
  EXPECT(binf_report_roots("C2", BINF_FORMAT_DOT, &s) == BINF_INVALID_ARGUMENT);
}

int main(void) {
  test_tableau();
  test_operators();
  test_errors();
  test_reports();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
