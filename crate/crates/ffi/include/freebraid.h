#ifndef FREEBRAID_H
#define FREEBRAID_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum FbStatus {
  FB_STATUS_OK = 0,
  FB_STATUS_NULL_POINTER = 1,
  FB_STATUS_INVALID_UTF8 = 2,
  FB_STATUS_PARSE = 3,
  FB_STATUS_BUDGET_EXHAUSTED = 4,
  FB_STATUS_INVALID_INPUT = 5,
  FB_STATUS_NOT_PLEASANT = 6,
  FB_STATUS_INTERNAL = 7,
} FbStatus;

typedef enum FbVerdict {
  FB_VERDICT_EQUAL = 0,
  FB_VERDICT_DISTINCT = 1,
  FB_VERDICT_UNKNOWN = 2,
} FbVerdict;

/**
 * A classical braid word.
 */
typedef struct FbBraid FbBraid;

/**
 * A word in a free k-braid group.
 */
typedef struct FbWord FbWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *fb_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fb_string_free(char *s);

/**
 * Parses a word such as `"(1 2 3) (1 2 4)"` or `"n=4 k=3: (1 2 3)"`. Pass
 * `n = k = 0` to take the signature from the header.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum FbStatus fb_word_parse(const char *text, uintptr_t n, uintptr_t k, struct FbWord **out);

/**
 * # Safety
 * `word` must come from this library and not have been freed. Null is
 * ignored.
 */
void fb_word_free(struct FbWord *word);

/**
 * Text form with signature header, e.g. `"n=4 k=3: (1 2 3)"`.
 *
 * # Safety
 * `word` must be a live handle and `out` writable.
 */
enum FbStatus fb_word_to_string(const struct FbWord *word, char **out);

/**
 * # Safety
 * `word` must be a live handle or null (which yields 0).
 */
uintptr_t fb_word_length(const struct FbWord *word);

/**
 * Least minimal representative reachable without lengthening the word.
 *
 * # Safety
 * `word` must be a live handle and `out` writable.
 */
enum FbStatus fb_word_reduce(const struct FbWord *word, uintptr_t budget, struct FbWord **out);

/**
 * Length of the shortest representative found; `exact` is false when the
 * budget ran out first.
 *
 * # Safety
 * `word` must be a live handle; `length` and `exact` writable.
 */
enum FbStatus fb_word_complexity(const struct FbWord *word,
                                 uintptr_t budget,
                                 uintptr_t *length,
                                 bool *exact);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum FbStatus fb_are_equal(const struct FbWord *a,
                           const struct FbWord *b,
                           uintptr_t budget,
                           enum FbVerdict *out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` writable.
 */
enum FbStatus fb_are_conjugate(const struct FbWord *a,
                               const struct FbWord *b,
                               uintptr_t budget,
                               enum FbVerdict *out);

/**
 * Number of tetrahedron relations of `G_n^k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FbStatus fb_relation_count(uintptr_t n, uintptr_t k, uintptr_t *out);

/**
 * SVG drawing of the word.
 *
 * # Safety
 * `word` must be a live handle and `out` writable.
 */
enum FbStatus fb_word_svg(const struct FbWord *word, char **out);

/**
 * Parses an Artin braid word such as `"s1 s2^-1"` on `n` strands.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum FbStatus fb_braid_parse(const char *text, uintptr_t n, struct FbBraid **out);

/**
 * # Safety
 * `b` must come from this library and not have been freed. Null is
 * ignored.
 */
void fb_braid_free(struct FbBraid *b);

/**
 * Invariant of the braid in `G_n^3` (`k = 3`, collinearity) or `G_n^4`
 * (`k = 4`, concyclicity).
 *
 * # Safety
 * `b` must be a live handle and `out` writable.
 */
enum FbStatus fb_braid_invariant(const struct FbBraid *b,
                                 uintptr_t k,
                                 uint64_t seed,
                                 struct FbWord **out);

/**
 * Trisecant lower-bound certificate as JSON.
 *
 * # Safety
 * `b` must be a live handle and `out` writable.
 */
enum FbStatus fb_braid_certificate(const struct FbBraid *b, uintptr_t budget, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FREEBRAID_H */
