#ifndef BCI_WORKBENCH_H
#define BCI_WORKBENCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum BciStatus {
  BCI_STATUS_OK = 0,
  BCI_STATUS_NULL_POINTER = 1,
  BCI_STATUS_INVALID_UTF8 = 2,
  BCI_STATUS_EMPTY_ALGEBRA = 3,
  BCI_STATUS_ORDER_TOO_LARGE = 4,
  BCI_STATUS_INDEX_OUT_OF_RANGE = 5,
  BCI_STATUS_INVALID_TABLE = 6,
  BCI_STATUS_NOT_BIJECTION = 7,
  BCI_STATUS_NOT_BCI = 8,
  BCI_STATUS_NOT_AUTOMORPHISM = 9,
  BCI_STATUS_NOT_AUTOMORPHISM_GROUP = 10,
  BCI_STATUS_NOT_BOOLEAN_GROUP = 11,
  BCI_STATUS_FENYVES_INDEX = 12,
  BCI_STATUS_UNSUPPORTED_INDEX = 13,
  BCI_STATUS_PARSE = 14,
  BCI_STATUS_BUDGET_EXCEEDED = 15,
  BCI_STATUS_IO = 16,
  BCI_STATUS_UNKNOWN_NAME = 17,
  BCI_STATUS_BUFFER_TOO_SMALL = 18,
  BCI_STATUS_PANIC = 99,
} BciStatus;

/**
 * Properties answerable by [`bci_algebra_has`].
 */
typedef enum BciProperty {
  BCI_PROPERTY_BCI = 0,
  BCI_PROPERTY_BCK = 1,
  BCI_PROPERTY_P_SEMISIMPLE = 2,
  BCI_PROPERTY_ASSOCIATIVE = 3,
  BCI_PROPERTY_COMMUTATIVE = 4,
  BCI_PROPERTY_QUASIGROUP = 5,
  BCI_PROPERTY_LOOP = 6,
  BCI_PROPERTY_BOOLEAN_GROUP = 7,
  /**
   * Requires a BCI-algebra.
   */
  BCI_PROPERTY_QUASI_ASSOCIATIVE = 8,
} BciProperty;

/**
 * Opaque finite algebra handle.
 */
typedef struct BciAlgebra BciAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *bci_status_message(enum BciStatus status);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bci_last_error(void);

/**
 * Builds an algebra from a row-major `order * order` table.
 *
 * # Safety
 * `table` must point to `order * order` readable values; `out` must be writable.
 */
enum BciStatus bci_algebra_from_table(size_t order,
                                      const size_t *table,
                                      size_t zero,
                                      struct BciAlgebra **out);

/**
 * Parses the plain-text table format.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum BciStatus bci_algebra_parse(const char *src, struct BciAlgebra **out);

/**
 * One of the bundled algebras: `powerset1..3`, `z2..z4`, `chain2`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum BciStatus bci_algebra_bundled(const char *name, struct BciAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must come from this library and not have been freed.
 */
void bci_algebra_free(struct BciAlgebra *a);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t bci_algebra_order(const struct BciAlgebra *a);

/**
 * Copies the row-major table into `buf`, which holds `len` entries.
 *
 * # Safety
 * `a` must be a live handle; `buf` must hold `len` writable values.
 */
enum BciStatus bci_algebra_table(const struct BciAlgebra *a, size_t *buf, size_t len);

/**
 * `x * y`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_op(const struct BciAlgebra *a, size_t x, size_t y, size_t *out);

/**
 * Whether the algebra has `property`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_has(const struct BciAlgebra *a, enum BciProperty property, bool *out);

/**
 * Whether identity `index` (1..=60) holds.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_satisfies(const struct BciAlgebra *a, size_t index, bool *out);

/**
 * 60-bit mask; bit `i - 1` set when identity `i` holds.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_fenyves_profile(const struct BciAlgebra *a, uint64_t *out);

/**
 * Size of the group of zero-fixing automorphisms.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_automorphism_count(const struct BciAlgebra *a, size_t *out);

/**
 * Classification report as JSON. Release with [`bci_string_free`].
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_classify_json(const struct BciAlgebra *a, char **out);

/**
 * The algebra in the plain-text table format. Release with [`bci_string_free`].
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum BciStatus bci_algebra_to_text(const struct BciAlgebra *a, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bci_string_free(char *s);

/**
 * Holomorph of `base` by the group generated by `count` involutive
 * automorphisms. `images` holds `count * order` entries, one image list per
 * generator. `count == 0` selects the trivial group.
 *
 * # Safety
 * `base` must be a live handle; `images` must hold `count * order` values
 * (it may be null when `count` is 0); `out` must be writable.
 */
enum BciStatus bci_holomorph_build(const struct BciAlgebra *base,
                                   const size_t *images,
                                   size_t count,
                                   struct BciAlgebra **out);

/**
 * Number of BCI-algebras of `order`, up to isomorphism or labelled.
 * Orders above 5 are refused.
 *
 * # Safety
 * `out` must be writable.
 */
enum BciStatus bci_enumerate_count(size_t order, bool up_to_isomorphism, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCI_WORKBENCH_H */
