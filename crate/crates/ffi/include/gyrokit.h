#ifndef GYROKIT_H
#define GYROKIT_H

#include <stdbool.h>
#include <stddef.h>

// Result codes. `GYRO_STATUS_OK` is zero; everything else is a failure.
typedef enum GyroStatus {
  GYRO_STATUS_OK = 0,
  GYRO_STATUS_NULL_POINTER = 1,
  GYRO_STATUS_MALFORMED = 2,
  GYRO_STATUS_AXIOM_VIOLATION = 3,
  GYRO_STATUS_OUT_OF_RANGE = 4,
  GYRO_STATUS_CAP_EXCEEDED = 5,
  GYRO_STATUS_NOT_SUBGYROGROUP = 6,
  GYRO_STATUS_BUFFER_TOO_SMALL = 7,
  GYRO_STATUS_INTERNAL = 8,
} GyroStatus;

// Opaque gyrogroup.
typedef struct GyroTableHandle GyroTableHandle;

// Parse `.gyro` text and validate the axioms.
//
// # Safety
// `text` is a NUL-terminated string; `out` is valid for writes.
enum GyroStatus gyro_table_parse(const char *text, struct GyroTableHandle **out);

// Build a table from `order * order` row-major cells.
//
// # Safety
// `cells` points to `order * order` readable values; `out` is valid for writes.
enum GyroStatus gyro_table_from_array(size_t order,
                                      const size_t *cells,
                                      struct GyroTableHandle **out);

// Release a handle. Null is ignored.
//
// # Safety
// `h` is null or a handle not yet freed.
void gyro_table_free(struct GyroTableHandle *h);

// Order of the table; 0 for a null handle.
//
// # Safety
// `h` is null or a live handle.
size_t gyro_table_order(const struct GyroTableHandle *h);

// Check the axioms of `order * order` cells without building a handle.
// Axiom failures are reported through `passed`, not the status.
//
// # Safety
// As for [`gyro_table_from_array`]; `passed` is valid for writes.
enum GyroStatus gyro_verify(size_t order, const size_t *cells, bool *passed);

// `a ⊕ b`.
//
// # Safety
// `h` is a live handle; `out` is valid for writes.
enum GyroStatus gyro_add(const struct GyroTableHandle *h, size_t a, size_t b, size_t *out);

// `⊖a`.
//
// # Safety
// `h` is a live handle; `out` is valid for writes.
enum GyroStatus gyro_neg(const struct GyroTableHandle *h, size_t a, size_t *out);

// `gyr[a,b]c`.
//
// # Safety
// `h` is a live handle; `out` is valid for writes.
enum GyroStatus gyro_gyr(const struct GyroTableHandle *h,
                         size_t a,
                         size_t b,
                         size_t c,
                         size_t *out);

// # Safety
// `h` is a live handle; `out` is valid for writes.
enum GyroStatus gyro_is_group(const struct GyroTableHandle *h, bool *out);

// # Safety
// `h` is a live handle; `out` is valid for writes.
enum GyroStatus gyro_is_gyrocommutative(const struct GyroTableHandle *h, bool *out);

// Whether the subgyrogroup given by `len` elements is normal.
//
// # Safety
// `h` is a live handle; `members` points to `len` readable values;
// `out` is valid for writes.
enum GyroStatus gyro_is_normal(const struct GyroTableHandle *h,
                               const size_t *members,
                               size_t len,
                               bool *out);

// The commutator subgyrogroup. `len` receives the size even when the
// buffer is too small.
//
// # Safety
// `h` is a live handle; `buf` has `capacity` writable slots; `len` is
// valid for writes.
enum GyroStatus gyro_commutator_subgyrogroup(const struct GyroTableHandle *h,
                                             size_t *buf,
                                             size_t capacity,
                                             size_t *len);

// The left nucleus. Buffer contract as in [`gyro_commutator_subgyrogroup`].
//
// # Safety
// As for [`gyro_commutator_subgyrogroup`].
enum GyroStatus gyro_left_nucleus(const struct GyroTableHandle *h,
                                  size_t *buf,
                                  size_t capacity,
                                  size_t *len);

// The radical, with default resource caps. Buffer contract as in
// [`gyro_commutator_subgyrogroup`].
//
// # Safety
// As for [`gyro_commutator_subgyrogroup`].
enum GyroStatus gyro_radical(const struct GyroTableHandle *h,
                             size_t *buf,
                             size_t capacity,
                             size_t *len);

// Message for the last failure on this thread; empty if none. Valid until
// the next call into this library on the same thread.
const char *gyro_last_error_message(void);

#endif  /* GYROKIT_H */
