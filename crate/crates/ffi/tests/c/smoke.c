#include <stdio.h>
#include <string.h>

#include "motivic.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  MotivicClass *m41 = NULL;
  const char *src = "(Hilb3 - Omega(1,3))*P11 + P2*(P11 - P1) + P2*P13";
  CHECK(motivic_class_parse(src, &m41) == MOTIVIC_STATUS_OK);
  CHECK(motivic_class_degree(m41) == 17);
  int64_t e = 0;
  CHECK(motivic_class_euler(m41, &e) == MOTIVIC_STATUS_OK && e == 192);
  CHECK(motivic_class_is_palindromic(m41));

  MotivicClass *bad = NULL;
  CHECK(motivic_class_parse("Gr(2,", &bad) == MOTIVIC_STATUS_SYNTAX);
  CHECK(bad == NULL);
  CHECK(strstr(motivic_last_error_message(), "offset 5") != NULL);

  uint64_t n = 0;
  CHECK(motivic_count_grassmannian(2, 6, 2, &n) == MOTIVIC_STATUS_OK && n == 651);
  CHECK(motivic_count_punctual_ideals(MOTIVIC_CURVE_NODE, 4, 2, &n) == MOTIVIC_STATUS_OK && n == 7);

  char *text = motivic_class_to_string(m41);
  CHECK(text != NULL && strncmp(text, "1 + 2L", 6) == 0);
  motivic_string_free(text);
  motivic_class_free(m41);
  printf("ok %s\n", motivic_version());
  return 0;
}
