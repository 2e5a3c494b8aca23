#ifndef HFROOT_H
#define HFROOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_POINTER = 1,
  HF_STATUS_INVALID_ARGS = 2,
  HF_STATUS_NOT_COPRIME = 3,
  HF_STATUS_NOT_PRIME_POWER = 4,
  HF_STATUS_DOMAIN_EDGE = 5,
  HF_STATUS_OVERFLOW = 6,
  HF_STATUS_UNSUPPORTED = 7,
  HF_STATUS_PARSE = 8,
  HF_STATUS_OUT_OF_RANGE = 9,
  HF_STATUS_INTERNAL = 10,
} HfStatus;

typedef struct HfModule HfModule;

typedef struct HfSeifert HfSeifert;

typedef struct HfTau HfTau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null; do not free.
 */
const char *hf_status_message(enum HfStatus status);

/**
 * Message of the last failure on this thread. Valid until the next failing
 * call on the same thread; do not free.
 */
const char *hf_last_error(void);

/**
 * Seifert invariants of the Brieskorn sphere `Sigma(a1, a2, a3)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum HfStatus hf_seifert_brieskorn(int64_t a1, int64_t a2, int64_t a3, struct HfSeifert **out);

/**
 * Parses `e0=E arms=A/B,...` and checks it describes a homology sphere.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` as in [`hf_seifert_brieskorn`].
 */
enum HfStatus hf_seifert_parse(const char *text, struct HfSeifert **out);

/**
 * # Safety
 * `s` must be null or a handle from this library, not yet freed.
 */
void hf_seifert_free(struct HfSeifert *s);

/**
 * `HF+(-Sigma)` for the given invariants.
 *
 * # Safety
 * `s` must be a live handle; `out` a valid pointer.
 */
enum HfStatus hf_module_compute(const struct HfSeifert *s, struct HfModule **out);

/**
 * The d-invariant, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
int64_t hf_module_d(const struct HfModule *m);

/**
 * Number of distinct `(bottom, length)` towers.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t hf_module_tower_count(const struct HfModule *m);

/**
 * Tower `index` in increasing `(bottom, length)` order.
 *
 * # Safety
 * `m` must be a live handle; the output pointers must be valid.
 */
enum HfStatus hf_module_tower(const struct HfModule *m,
                              size_t index,
                              int64_t *bottom,
                              int64_t *length,
                              uint64_t *mult);

/**
 * JSON form of the module; free the result with [`hf_string_free`].
 *
 * # Safety
 * `m` must be a live handle, `name` null or NUL-terminated, `out` valid.
 */
enum HfStatus hf_module_to_json(const struct HfModule *m, const char *name, char **out);

/**
 * # Safety
 * `m` must be null or a live handle.
 */
void hf_module_free(struct HfModule *m);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hf_string_free(char *s);

/**
 * Tau function up to its truncation bound.
 *
 * # Safety
 * `s` must be a live handle; `out` a valid pointer.
 */
enum HfStatus hf_tau_compute(const struct HfSeifert *s, struct HfTau **out);

/**
 * Number of stored values `tau(0..=B)`.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t hf_tau_len(const struct HfTau *t);

/**
 * Borrowed pointer to the values; valid while `t` lives.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
const int64_t *hf_tau_values(const struct HfTau *t);

/**
 * # Safety
 * `t` must be null or a live handle.
 */
int64_t hf_tau_min(const struct HfTau *t);

/**
 * # Safety
 * `t` must be null or a live handle.
 */
void hf_tau_free(struct HfTau *t);

/**
 * Dedekind sum `s(h, k)` as a reduced fraction `num / den`, `den > 0`.
 *
 * # Safety
 * `num` and `den` must be valid pointers.
 */
enum HfStatus hf_dedekind(int64_t h, int64_t k, int64_t *num, int64_t *den);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFROOT_H */
