#ifndef ABELREPS_H
#define ABELREPS_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum AbelrepsStatus {
  ABELREPS_STATUS_OK = 0,
  ABELREPS_STATUS_NULL_POINTER = 1,
  ABELREPS_STATUS_INVALID_UTF8 = 2,
  ABELREPS_STATUS_PARSE = 3,
  ABELREPS_STATUS_INVALID_ARGUMENT = 4,
  // The field characteristic divides the group order.
  ABELREPS_STATUS_NOT_COPRIME = 5,
  ABELREPS_STATUS_ORACLE_BOUND_EXCEEDED = 6,
  ABELREPS_STATUS_FACTORIZATION_LIMIT = 7,
  ABELREPS_STATUS_INDEX_OUT_OF_RANGE = 8,
  // The value does not fit the requested integer type; use the string getter.
  ABELREPS_STATUS_OVERFLOW = 9,
  ABELREPS_STATUS_INTERNAL = 10,
  ABELREPS_STATUS_PANIC = 11,
} AbelrepsStatus;

// A finite abelian group.
typedef struct AbelrepsGroup AbelrepsGroup;

// A table of irreducible degrees and multiplicities.
typedef struct AbelrepsTable AbelrepsTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a group such as `"C9xC5"` or `"9,5"`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be valid for writes.
enum AbelrepsStatus abelreps_group_parse(const char *spec, struct AbelrepsGroup **out);

// Builds a group from cyclic factor orders `Z/factors[0] x ... x Z/factors[len-1]`.
//
// # Safety
// `factors` must point to `len` readable values (it may be null when `len`
// is 0); `out` must be valid for writes.
enum AbelrepsStatus abelreps_group_from_factors(const uint64_t *factors,
                                                uintptr_t len,
                                                struct AbelrepsGroup **out);

// # Safety
// `group` must be null or a handle from this library not yet freed.
void abelreps_group_free(struct AbelrepsGroup *group);

// Group order `|G|` as a decimal string.
//
// # Safety
// `group` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_group_order(const struct AbelrepsGroup *group, char **out);

// Group exponent as a decimal string.
//
// # Safety
// `group` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_group_exponent(const struct AbelrepsGroup *group, char **out);

// Primary decomposition in C-notation, e.g. `"C2 x C4 x C3"`, followed by
// the factors as written, e.g. `"C2 x C4 x C3 (C4xC6)"`.
//
// # Safety
// `group` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_group_describe(const struct AbelrepsGroup *group, char **out);

// Closed-form degree table over the field with `p^m` elements.
//
// # Safety
// `group` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_degree_table(const struct AbelrepsGroup *group,
                                          uint64_t p,
                                          uint32_t m,
                                          struct AbelrepsTable **out);

// Closed-form degree table over the field of order `q`, given in decimal.
//
// # Safety
// `group` must be a live handle; `q` a NUL-terminated string; `out` valid
// for writes.
enum AbelrepsStatus abelreps_degree_table_q(const struct AbelrepsGroup *group,
                                            const char *q,
                                            struct AbelrepsTable **out);

// Degree table by brute-force orbit enumeration; fails with
// `ORACLE_BOUND_EXCEEDED` when `|G| > bound`.
//
// # Safety
// `group` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_frobenius_orbits(const struct AbelrepsGroup *group,
                                              uint64_t p,
                                              uint32_t m,
                                              uint64_t bound,
                                              struct AbelrepsTable **out);

// Number of characters whose field is `Q(zeta_d)`, for a relevant divisor `d`
// of the exponent, as a decimal string.
//
// # Safety
// `group` must be a live handle; `d` a NUL-terminated string; `out` valid
// for writes.
enum AbelrepsStatus abelreps_card_i_d(const struct AbelrepsGroup *group, const char *d, char **out);

// Multiplicative order of `q` modulo `d`.
//
// # Safety
// `out` must be valid for writes.
enum AbelrepsStatus abelreps_mul_order(uint64_t q, uint64_t d, uint64_t *out);

// Number of distinct degrees; 0 for a null handle.
//
// # Safety
// `table` must be null or a live handle.
uintptr_t abelreps_table_len(const struct AbelrepsTable *table);

// Entry `index` (ascending degree) as machine integers.
//
// # Safety
// `table` must be a live handle; `degree` and `multiplicity` valid for writes.
enum AbelrepsStatus abelreps_table_entry(const struct AbelrepsTable *table,
                                         uintptr_t index,
                                         uint64_t *degree,
                                         uint64_t *multiplicity);

// Entry `index` as decimal strings; both must be released with
// [`abelreps_string_free`].
//
// # Safety
// `table` must be a live handle; `degree` and `multiplicity` valid for writes.
enum AbelrepsStatus abelreps_table_entry_str(const struct AbelrepsTable *table,
                                             uintptr_t index,
                                             char **degree,
                                             char **multiplicity);

// Compact notation such as `"1, 2, 4^3, 6, 12^2"`.
//
// # Safety
// `table` must be a live handle; `out` must be valid for writes.
enum AbelrepsStatus abelreps_table_compact(const struct AbelrepsTable *table, char **out);

// Whether two tables agree entry for entry. Null handles compare unequal.
//
// # Safety
// Both arguments must be null or live handles.
bool abelreps_table_equal(const struct AbelrepsTable *a, const struct AbelrepsTable *b);

// # Safety
// `table` must be null or a handle from this library not yet freed.
void abelreps_table_free(struct AbelrepsTable *table);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void abelreps_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *abelreps_last_error_message(void);

// Static name of a status code, e.g. `"NOT_COPRIME"`.
const char *abelreps_status_name(enum AbelrepsStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABELREPS_H */
