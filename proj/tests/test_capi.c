/* Exercises the C interface from C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "xyzpoly/xyzpoly.h"

static int failures = 0;

#define EXPECT(cond)                                        \
  do {                                                      \
    if (!(cond)) {                                          \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                           \
    }                                                       \
  } while (0)

static void expect_object(const char* family, int index, const char* expected) {
  char* json = NULL;
  EXPECT(xyzp_object_json(family, index, &json) == XYZP_OK);
  if (json) {
    if (strcmp(json, expected) != 0) fprintf(stderr, "%s[%d] = %s\n", family, index, json);
    EXPECT(strcmp(json, expected) == 0);
  }
  xyzp_string_free(json);
}

int main(void) {
  char* json = NULL;
  xyzp_report* rep = NULL;
  double re = 0, im = 0;

  expect_object("s", 2, "{\"coeffs\":[\"1\",\"1\"],\"var\":\"z\"}");
  expect_object("p", 1, "{\"coeffs\":[\"1\",\"1\",\"2\"],\"var\":\"y\"}");
  expect_object("A", 3, "{\"coeffs\":[\"7\",\"0\",\"1\"],\"var\":\"zeta\"}");
  expect_object("p_sos", 1, "{\"coeffs\":[\"1\",\"3\"],\"var\":\"s\"}");

  EXPECT(xyzp_tau_json(1, 6, 2, &json) == XYZP_OK);
  xyzp_string_free(json);
  json = NULL;
  EXPECT(xyzp_tau_json(1, 0, 2, &json) == XYZP_ERR_INVALID_ARGUMENT);

  EXPECT(xyzp_object_json("nope", 1, &json) == XYZP_ERR_INVALID_ARGUMENT);
  EXPECT(strstr(xyzp_last_error(), "unknown family") != NULL);
  EXPECT(xyzp_object_json("P_sos", 1, &json) == XYZP_ERR_INVALID_ARGUMENT);
  EXPECT(xyzp_object_json("ground_vector", 4, &json) == XYZP_ERR_INVALID_ARGUMENT);

  EXPECT(xyzp_theta(1, 0.4, 0.0, 0.1, 0.0, 0, &re, &im) == XYZP_OK);
  EXPECT(fabs(re - 0.427490594110574023277) < 1e-14 && fabs(im) < 1e-15);
  EXPECT(xyzp_theta(1, 0.4, 0.0, 1.0, 0.0, 0, &re, &im) == XYZP_ERR_NOME_OUT_OF_RANGE);
  EXPECT(strcmp(xyzp_status_name(XYZP_ERR_NOME_OUT_OF_RANGE), xyzp_status_name(XYZP_OK)) != 0);

  EXPECT(xyzp_default_config(&json) == XYZP_OK);
  EXPECT(json && strstr(json, "\"N_max\":9") != NULL);
  xyzp_string_free(json);
  json = NULL;

  EXPECT(xyzp_run("{\"bogus\": 1}", 0, &rep) == XYZP_ERR_CONFIG);
  EXPECT(rep == NULL);
  EXPECT(xyzp_run("not json", 0, &rep) == XYZP_ERR_CONFIG);

  EXPECT(xyzp_run("{\"section\": \"sos\", \"p_max\": 4, \"P_list\": [0, 2]}", 1, &rep) == XYZP_OK);
  EXPECT(rep != NULL);
  EXPECT(xyzp_report_passed(rep) == 1);
  EXPECT(xyzp_report_size(rep) > 0);
  EXPECT(xyzp_report_count(rep, XYZP_CHECK_PASS) == xyzp_report_size(rep));
  EXPECT(xyzp_report_json(rep, 0, &json) == XYZP_OK);
  EXPECT(json && strstr(json, "\"objects\"") != NULL && strstr(json, "\"seconds\"") == NULL);
  xyzp_string_free(json);
  json = NULL;
  EXPECT(xyzp_report_text(rep, 1, &json) == XYZP_OK);
  EXPECT(json && strncmp(json, "PASS ", 5) == 0);
  xyzp_string_free(json);
  xyzp_report_free(rep);

  /* The corpus A_9 is twice the regenerated polynomial; every other object agrees. */
  EXPECT(xyzp_run("{\"section\": \"golden\"}", 0, &rep) == XYZP_OK);
  EXPECT(xyzp_report_count(rep, XYZP_CHECK_FAIL) == 1);
  xyzp_report_free(rep);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
