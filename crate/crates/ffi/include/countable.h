#ifndef COUNTABLE_H
#define COUNTABLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum CountableStatus {
  COUNTABLE_STATUS_OK = 0,
  COUNTABLE_STATUS_NOT_IN_DOMAIN = 1,
  COUNTABLE_STATUS_INVALID_RATIONAL = 2,
  COUNTABLE_STATUS_NO_SUCH_GUEST = 3,
  COUNTABLE_STATUS_OUT_OF_PREFIX = 4,
  COUNTABLE_STATUS_INVALID_ARGUMENT = 5,
  COUNTABLE_STATUS_PARSE_ERROR = 6,
  COUNTABLE_STATUS_NULL_POINTER = 7,
  COUNTABLE_STATUS_INVALID_UTF8 = 8,
  COUNTABLE_STATUS_PANIC = 9,
} CountableStatus;

typedef enum CountableVerdict {
  COUNTABLE_VERDICT_EQUAL = 0,
  COUNTABLE_VERDICT_LEFT_LARGER = 1,
  COUNTABLE_VERDICT_RIGHT_LARGER = 2,
} CountableVerdict;

/**
 * Opaque enumeration handle.
 */
typedef struct CountableEnum CountableEnum;

/**
 * Opaque hotel handle; arrivals update it in place.
 */
typedef struct CountableHotel CountableHotel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *countable_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void countable_string_free(char *s);

/**
 * Evaluates a pairing rule: `rule` is one of `even`, `whole`, `int`, `odd`,
 * `pair`. For `pair` the forward input is `(row,col)` and the inverse
 * output has the same form.
 *
 * # Safety
 * `rule` and `value` must be NUL-terminated strings; `out` must be writable.
 */
enum CountableStatus countable_bij(const char *rule, bool inverse, const char *value, char **out);

/**
 * Opens a canonical enumeration: `n`, `evens`, `odds`, `n0`, `z`, `grid`,
 * `q+` or `q`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CountableStatus countable_enum_new(const char *name, struct CountableEnum **out);

/**
 * Renders the element at the 1-based decimal `index`.
 *
 * # Safety
 * `e` must come from [`countable_enum_new`]; `index` must be a
 * NUL-terminated string; `out` must be writable.
 */
enum CountableStatus countable_enum_at(const struct CountableEnum *e,
                                       const char *index,
                                       char **out);

/**
 * Looks up the index of a rendered `value`.
 *
 * # Safety
 * As for [`countable_enum_at`].
 */
enum CountableStatus countable_enum_index_of(const struct CountableEnum *e,
                                             const char *value,
                                             char **out);

/**
 * # Safety
 * `e` must be null or a handle from [`countable_enum_new`], not yet freed.
 */
void countable_enum_free(struct CountableEnum *e);

/**
 * A fresh, full hotel. Never null.
 */
struct CountableHotel *countable_hotel_new(void);

/**
 * # Safety
 * `h` must be null or a handle from [`countable_hotel_new`], not yet freed.
 */
void countable_hotel_free(struct CountableHotel *h);

/**
 * # Safety
 * `h` must be a live hotel handle.
 */
enum CountableStatus countable_hotel_arrive_one(struct CountableHotel *h);

/**
 * `k` is a decimal string, at least 1.
 *
 * # Safety
 * `h` must be a live hotel handle; `k` a NUL-terminated string.
 */
enum CountableStatus countable_hotel_arrive_finite(struct CountableHotel *h, const char *k);

/**
 * # Safety
 * `h` must be a live hotel handle.
 */
enum CountableStatus countable_hotel_arrive_bus(struct CountableHotel *h);

/**
 * Room of `guest`, written `original N` or `arrival BATCH SEAT`.
 *
 * # Safety
 * `h` must be a live hotel handle; `guest` a NUL-terminated string; `out`
 * writable.
 */
enum CountableStatus countable_hotel_room_of(const struct CountableHotel *h,
                                             const char *guest,
                                             char **out);

/**
 * Guest in `room`, written as for [`countable_hotel_room_of`].
 *
 * # Safety
 * As for [`countable_hotel_room_of`].
 */
enum CountableStatus countable_hotel_occupant_of(const struct CountableHotel *h,
                                                 const char *room,
                                                 char **out);

/**
 * Compares two comma-separated label sets exhaustively (at most 8 labels
 * per side). `witness_out` may be null; otherwise it receives the witness
 * in the line format `left<TAB>right` / `left-remainder:` /
 * `right-remainder:`.
 *
 * # Safety
 * `left` and `right` must be NUL-terminated strings; `verdict_out` must be
 * writable; `witness_out` null or writable.
 */
enum CountableStatus countable_compare(const char *left,
                                       const char *right,
                                       enum CountableVerdict *verdict_out,
                                       char **witness_out);

/**
 * Number of maximal pairings between two comma-separated label sets.
 *
 * # Safety
 * `left` and `right` must be NUL-terminated strings; `out` writable.
 */
enum CountableStatus countable_count_pairings(const char *left, const char *right, uint64_t *out);

/**
 * Validates a witness in the line format. An invalid witness yields
 * `COUNTABLE_STATUS_NOT_IN_DOMAIN` with the defect in
 * [`countable_last_error`].
 *
 * # Safety
 * All three arguments must be NUL-terminated strings.
 */
enum CountableStatus countable_check_witness(const char *left,
                                             const char *right,
                                             const char *witness);

/**
 * Builds the anti-diagonal of a list given as text (one digit string per
 * line) to `depth` places (`0` means the list length) and checks that it
 * escapes the list. `safe` selects the 5/4 rule.
 *
 * # Safety
 * `list` must be a NUL-terminated string; `prefix_out` and `escapes_out`
 * must be writable.
 */
enum CountableStatus countable_diagonal(const char *list,
                                        size_t depth,
                                        bool safe,
                                        char **prefix_out,
                                        bool *escapes_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COUNTABLE_H */
