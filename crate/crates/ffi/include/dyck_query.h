#ifndef DYCK_QUERY_H
#define DYCK_QUERY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Simulation backend.
 */
typedef enum DqBackend {
  DQ_BACKEND_IDEAL = 0,
  DQ_BACKEND_STATEVECTOR = 1,
} DqBackend;

/**
 * Result codes.
 */
typedef enum DqStatus {
  DQ_STATUS_OK = 0,
  DQ_STATUS_NULL_POINTER = 1,
  DQ_STATUS_INVALID_UTF8 = 2,
  DQ_STATUS_INVALID_WORD = 3,
  DQ_STATUS_INVALID_PARAMETER = 4,
  DQ_STATUS_DOMAIN = 5,
  DQ_STATUS_OVERFLOW = 6,
  DQ_STATUS_INFEASIBLE = 7,
  DQ_STATUS_PANIC = 8,
} DqStatus;

typedef enum DqDirection {
  /**
   * Largest end.
   */
  DQ_DIRECTION_LEFT = 0,
  /**
   * Smallest start.
   */
  DQ_DIRECTION_RIGHT = 1,
} DqDirection;

/**
 * Opaque word handle.
 */
typedef struct DqWord DqWord;

/**
 * Backend configuration; start from [`dq_policy_default`].
 */
typedef struct DqPolicy {
  enum DqBackend backend;
  double c0;
  double eps;
  uint64_t seed;
  uint32_t boost;
  double verify_factor;
} DqPolicy;

typedef struct DqDecision {
  bool member;
  /**
   * Height bound used after lowering for short words.
   */
  uint32_t k;
  uint64_t charged_queries;
} DqDecision;

/**
 * A substring `[start, end]` with balance `sign · k`.
 */
typedef struct DqMatch {
  uint64_t start;
  uint64_t end;
  /**
   * `+1` or `-1`.
   */
  int32_t sign;
} DqMatch;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default configuration with the given seed.
 */
struct DqPolicy dq_policy_default(uint64_t seed);

/**
 * Parses a NUL-terminated word in `()` or `01` encoding.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum DqStatus dq_word_parse(const char *text, struct DqWord **out);

/**
 * Releases a handle from [`dq_word_parse`]. Null is ignored.
 *
 * # Safety
 * `word` must come from [`dq_word_parse`] and not be used afterwards.
 */
void dq_word_free(struct DqWord *word);

/**
 * Length of the word, or 0 for a null handle.
 *
 * # Safety
 * `word` must be null or a live handle.
 */
uint64_t dq_word_len(const struct DqWord *word);

/**
 * Exact membership in the height-`k` Dyck language.
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer.
 */
enum DqStatus dq_classical_dyck(const struct DqWord *word, uint32_t k, bool *out);

/**
 * One run of the bounded-error decider.
 *
 * # Safety
 * `word` must be a live handle; `policy` and `out` valid pointers.
 */
enum DqStatus dq_decide(const struct DqWord *word,
                        uint32_t k,
                        const struct DqPolicy *policy,
                        struct DqDecision *out);

/**
 * Majority vote over enough runs to reach error `eps_target`.
 *
 * # Safety
 * As [`dq_decide`].
 */
enum DqStatus dq_decide_amplified(const struct DqWord *word,
                                  uint32_t k,
                                  double eps_target,
                                  const struct DqPolicy *policy,
                                  struct DqDecision *out);

/**
 * First minimal `±k`-substring of the whole word in direction `dir`.
 * `signs` is a bit set: 1 for `+1`, 2 for `-1`. `*found` is false when
 * there is none.
 *
 * # Safety
 * `word` must be a live handle; the remaining pointers valid.
 */
enum DqStatus dq_find_first(const struct DqWord *word,
                            uint32_t k,
                            uint32_t signs,
                            enum DqDirection dir,
                            const struct DqPolicy *policy,
                            bool *found,
                            struct DqMatch *out,
                            uint64_t *charged_queries);

/**
 * Length of the words of the hard family `M^i_k`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DqStatus dq_family_length(uint32_t k, uint32_t i, uint64_t *out);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *dq_last_error(void);

/**
 * Library version as a static C string.
 */
const char *dq_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DYCK_QUERY_H */
