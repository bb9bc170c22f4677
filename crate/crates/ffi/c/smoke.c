#include <stdio.h>
#include <string.h>

#include "countable.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,       \
              countable_last_error());                                     \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  char *s = NULL;

  CHECK(countable_bij("int", false, "9", &s) == COUNTABLE_STATUS_OK);
  CHECK(strcmp(s, "-4") == 0);
  countable_string_free(s);

  CHECK(countable_bij("even", true, "7", &s) == COUNTABLE_STATUS_NOT_IN_DOMAIN);
  CHECK(strstr(countable_last_error(), "not even") != NULL);

  CountableEnum *q = NULL;
  CHECK(countable_enum_new("q+", &q) == COUNTABLE_STATUS_OK);
  CHECK(countable_enum_at(q, "9", &s) == COUNTABLE_STATUS_OK);
  CHECK(strcmp(s, "4/1") == 0);
  countable_string_free(s);
  countable_enum_free(q);

  CountableHotel *h = countable_hotel_new();
  CHECK(countable_hotel_arrive_bus(h) == COUNTABLE_STATUS_OK);
  CHECK(countable_hotel_occupant_of(h, "7", &s) == COUNTABLE_STATUS_OK);
  CHECK(strcmp(s, "arrival 1 4") == 0);
  countable_string_free(s);
  countable_hotel_free(h);

  uint64_t count = 0;
  CHECK(countable_count_pairings("1,2,3", "a,b,c,d", &count) == COUNTABLE_STATUS_OK);
  CHECK(count == 24);

  bool escapes = false;
  CHECK(countable_diagonal("3333\n5432\n6775\n1010\n", 0, false, &s, &escapes) ==
        COUNTABLE_STATUS_OK);
  CHECK(strcmp(s, "0.4581") == 0 && escapes);
  countable_string_free(s);

  puts("ok");
  return 0;
}
