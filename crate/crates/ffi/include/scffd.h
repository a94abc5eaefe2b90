#ifndef SCFFD_H
#define SCFFD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Three-valued answer of a predicate.
 */
typedef enum ScffdDecision {
  SCFFD_DECISION_FALSE = 0,
  SCFFD_DECISION_TRUE = 1,
  SCFFD_DECISION_UNSUPPORTED = 2,
} ScffdDecision;

/*
 Result code of every call.
 */
typedef enum ScffdStatus {
  SCFFD_STATUS_OK = 0,
  /*
   Not in the ring, invalid descriptor, or an operation outside its domain.
   */
  SCFFD_STATUS_INVALID = 1,
  SCFFD_STATUS_SYNTAX = 2,
  SCFFD_STATUS_SEARCH_CAP = 3,
  SCFFD_STATUS_NULL_ARGUMENT = 4,
  SCFFD_STATUS_INVALID_UTF8 = 5,
  SCFFD_STATUS_PANIC = 6,
} ScffdStatus;

/*
 Opaque element handle. Remembers its ring.
 */
typedef struct ScffdElement ScffdElement;

/*
 Opaque ring handle.
 */
typedef struct ScffdRing ScffdRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a ring descriptor such as `Quad(5)`.

 # Safety
 `descriptor` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ScffdStatus scffd_ring_parse(const char *descriptor, struct ScffdRing **out);

/*
 # Safety
 `ring` must come from [`scffd_ring_parse`] or be null.
 */
void scffd_ring_free(struct ScffdRing *ring);

/*
 Canonical descriptor text of a ring.

 # Safety
 Pointers must be valid.
 */
enum ScffdStatus scffd_ring_to_string(const struct ScffdRing *ring, char **out);

/*
 Parses an element expression and checks membership in `ring`.

 # Safety
 Pointers must be valid; `expr` NUL-terminated.
 */
enum ScffdStatus scffd_element_parse(const struct ScffdRing *ring,
                                     const char *expr,
                                     struct ScffdElement **out);

/*
 # Safety
 `elem` must come from [`scffd_element_parse`] or be null.
 */
void scffd_element_free(struct ScffdElement *elem);

/*
 Canonical text of an element.

 # Safety
 Pointers must be valid.
 */
enum ScffdStatus scffd_element_to_string(const struct ScffdElement *elem, char **out);

/*
 # Safety
 Pointers must be valid.
 */
enum ScffdStatus scffd_is_prime(const struct ScffdElement *elem, enum ScffdDecision *out);

/*
 # Safety
 Pointers must be valid.
 */
enum ScffdStatus scffd_is_irreducible(const struct ScffdElement *elem, enum ScffdDecision *out);

/*
 Divisors of an element as a JSON array of canonical strings.

 # Safety
 Pointers must be valid.
 */
enum ScffdStatus scffd_divisors_json(const struct ScffdElement *elem, char **out);

/*
 Runs a command-line style query. `elems` holds `n_elems` expressions and
 `mode` may be null. The JSON document is always written to `out`, also
 on failure, where it carries an `error` object; the status mirrors the
 command line exit code.

 # Safety
 Pointers must be valid; `elems` must point to `n_elems` strings.
 */
enum ScffdStatus scffd_query(const char *command,
                             const char *ring,
                             const char *const *elems,
                             uintptr_t n_elems,
                             const char *mode,
                             char **out);

/*
 # Safety
 `s` must come from this library or be null.
 */
void scffd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCFFD_H */
