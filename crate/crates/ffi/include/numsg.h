#ifndef NUMSG_H
#define NUMSG_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Ideal used by [`numsg_duplication`].
 */
typedef enum NumsgIdeal {
  /**
   * `S - ⟨K⟩`.
   */
  NUMSG_IDEAL_S_MINUS_GEN_K = 0,
  NUMSG_IDEAL_M = 1,
  NUMSG_IDEAL_S = 2,
  NUMSG_IDEAL_K = 3,
} NumsgIdeal;

typedef enum NumsgStatus {
  NUMSG_STATUS_OK = 0,
  NUMSG_STATUS_NULL_POINTER = 1,
  /**
   * Bad generators: empty, non-positive, gcd ≠ 1, too large, malformed.
   */
  NUMSG_STATUS_PARSE = 2,
  /**
   * The operation is undefined for ℕ.
   */
  NUMSG_STATUS_FULL_SEMIGROUP = 3,
  /**
   * Construction parameters violate the construction's requirements.
   */
  NUMSG_STATUS_CONSTRUCTION_SPEC = 4,
  /**
   * Two characterizations disagreed.
   */
  NUMSG_STATUS_INCONSISTENCY = 5,
  NUMSG_STATUS_OTHER = 6,
} NumsgStatus;

/**
 * Opaque semigroup handle. Free with [`numsg_semigroup_free`].
 */
typedef struct NumsgSemigroup NumsgSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *numsg_last_error(void);

/**
 * Builds the semigroup generated by `gens[0..len]`.
 *
 * # Safety
 * `gens` must point to `len` readable values and `out` must be writable.
 */
enum NumsgStatus numsg_semigroup_new(const int64_t *gens, size_t len, struct NumsgSemigroup **out);

/**
 * Builds a semigroup from a literal such as `"9,24,39,43,77"`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string and `out` must be writable.
 */
enum NumsgStatus numsg_semigroup_parse(const char *literal, struct NumsgSemigroup **out);

/**
 * # Safety
 * `s` must be NULL or a handle returned by this library, freed at most once.
 */
void numsg_semigroup_free(struct NumsgSemigroup *s);

/**
 * `F(S)`, or -1 for ℕ.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_frobenius(const struct NumsgSemigroup *s, int64_t *out);

/**
 * Smallest positive member.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_multiplicity(const struct NumsgSemigroup *s, int64_t *out);

/**
 * Number of gaps.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_genus(const struct NumsgSemigroup *s, size_t *out);

/**
 * `|PF(S)|`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_type(const struct NumsgSemigroup *s, size_t *out);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_embedding_dimension(const struct NumsgSemigroup *s, size_t *out);

/**
 * Writes whether `x ∈ S`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_semigroup_contains(const struct NumsgSemigroup *s, int64_t x, bool *out);

/**
 * Copies up to `cap` minimal generators into `buf` and writes their total
 * count to `len`. Call with `cap = 0` to query the count.
 *
 * # Safety
 * `s` must be a live handle, `buf` must hold `cap` values (or be NULL when
 * `cap` is 0) and `len` must be writable.
 */
enum NumsgStatus numsg_semigroup_generators(const struct NumsgSemigroup *s,
                                            int64_t *buf,
                                            size_t cap,
                                            size_t *len);

/**
 * Writes the classification report as a JSON string owned by the caller;
 * release it with [`numsg_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_classify_json(const struct NumsgSemigroup *s, char **out);

/**
 * Writes whether `S` is GAS.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_is_gas(const struct NumsgSemigroup *s, bool *out);

/**
 * Writes `|⟨K⟩ ∖ K|`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_agl_level(const struct NumsgSemigroup *s, size_t *out);

/**
 * `⟨a·S1, b·S2⟩`.
 *
 * # Safety
 * `s1`, `s2` must be live handles and `out` writable.
 */
enum NumsgStatus numsg_gluing(const struct NumsgSemigroup *s1,
                              const struct NumsgSemigroup *s2,
                              int64_t a,
                              int64_t b,
                              struct NumsgSemigroup **out);

/**
 * `S ⋈ᵇ I` for the chosen ideal `I`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_duplication(const struct NumsgSemigroup *s,
                                   enum NumsgIdeal ideal,
                                   int64_t b,
                                   struct NumsgSemigroup **out);

/**
 * `S + a`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum NumsgStatus numsg_dilatation(const struct NumsgSemigroup *s,
                                  int64_t a,
                                  struct NumsgSemigroup **out);

/**
 * # Safety
 * `p` must be NULL or a string returned by this library, freed at most once.
 */
void numsg_string_free(char *p);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NUMSG_H */
