#ifndef TCLINK_H
#define TCLINK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum TclStatus {
  TCL_STATUS_OK = 0,
  TCL_STATUS_NULL_POINTER = 1,
  TCL_STATUS_INVALID_UTF8 = 2,
  TCL_STATUS_PARSE = 3,
  TCL_STATUS_DEGREE_MISMATCH = 4,
  TCL_STATUS_NOT_COMMUTING = 5,
  TCL_STATUS_INVALID_ARGUMENT = 6,
  TCL_STATUS_CAP_EXCEEDED = 7,
  TCL_STATUS_NOT_A_KNOT = 8,
  TCL_STATUS_MOVIE = 9,
  TCL_STATUS_PANIC = 10,
} TclStatus;

/*
 Outcome of a three-valued decision.
 */
typedef enum TclVerdict {
  TCL_VERDICT_YES = 0,
  TCL_VERDICT_NO = 1,
  TCL_VERDICT_UNKNOWN = 2,
} TclVerdict;

/*
 Opaque braid word.
 */
typedef struct TclBraid TclBraid;

/*
 Opaque commuting pair of boundary braids.
 */
typedef struct TclChart TclChart;

/*
 Homomorphism counts into a finite group.
 */
typedef struct TclQuotientCounts {
  uint64_t homomorphisms;
  uint64_t epimorphisms;
  uint64_t abelian_image;
  uint64_t central_violations;
} TclQuotientCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version, a static string that must not be freed.
 */
const char *tcl_version(void);

/*
 Message of the last failed call on this thread, or NULL. Free with
 [`tcl_string_free`].
 */
char *tcl_last_error_message(void);

/*
 Release a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void tcl_string_free(char *s);

/*
 Parse a braid word such as `"1 -2 3"`, `"D^2"` or `"(1 2 3)^4"`.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TclStatus tcl_braid_parse(const char *text_, size_t degree, struct TclBraid **out);

/*
 # Safety
 `b` must come from this library and not have been freed. NULL is ignored.
 */
void tcl_braid_free(struct TclBraid *b);

/*
 Degree of a braid, or 0 for NULL.

 # Safety
 `b` must be NULL or a live handle.
 */
size_t tcl_braid_degree(const struct TclBraid *b);

/*
 Signed letters as text. Free with [`tcl_string_free`].

 # Safety
 `b` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_braid_to_string(const struct TclBraid *b, char **out);

/*
 Equality in the braid group.

 # Safety
 `x`, `y` must be live handles; `out` must be writable.
 */
enum TclStatus tcl_braids_equal(const struct TclBraid *x, const struct TclBraid *y, bool *out);

/*
 Three-valued unknot test of the closure of `b`.

 # Safety
 `b` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_braid_unknot(const struct TclBraid *b, enum TclVerdict *out);

/*
 Chart from two braid words of the given degree; fails with
 `NotCommuting` when they do not commute.

 # Safety
 `a`, `b` must be NUL-terminated strings; `out` must be writable.
 */
enum TclStatus tcl_chart_new(size_t degree, const char *a, const char *b, struct TclChart **out);

/*
 # Safety
 `c` must come from this library and not have been freed. NULL is ignored.
 */
void tcl_chart_free(struct TclChart *c);

/*
 Chart as text: `degree m`, `a: …`, `b: …` lines. Free with
 [`tcl_string_free`].

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_chart_to_string(const struct TclChart *c, char **out);

/*
 Cocycle invariant c0 + c1 t + c2 t^2 written to `out[0..3]`, using a
 generated movie.

 # Safety
 `c` must be a live handle; `out` must point to three writable int64s.
 */
enum TclStatus tcl_chart_cocycle(const struct TclChart *c, int64_t *out);

/*
 Number of colourings by the dihedral quandle of order `p`.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_chart_coloring_count(const struct TclChart *c, size_t p, uint64_t *out);

/*
 Abelianization of the link group, as text like `"Z + Z/4"`. Free with
 [`tcl_string_free`].

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_chart_abelianization(const struct TclChart *c, bool quotient_center, char **out);

/*
 Homomorphism counts into `target` (`"S3"`, `"D5"`, `"Z6"`, `"1"`).

 # Safety
 `c` must be a live handle; `target` a NUL-terminated string; `out` writable.
 */
enum TclStatus tcl_chart_quotients(const struct TclChart *c,
                                   const char *target,
                                   struct TclQuotientCounts *out);

/*
 Ribbon certificate search with `block_size` strands per block.
 `verdict` is `Yes` (certificate written to `certificate`, if non-NULL)
 or `Unknown` (reason written to `certificate`, if non-NULL).

 # Safety
 `c` must be a live handle; `verdict` writable; `certificate` NULL or writable.
 */
enum TclStatus tcl_chart_ribbon(const struct TclChart *c,
                                size_t block_size,
                                enum TclVerdict *verdict,
                                char **certificate);

/*
 Quarter rotation (a, b) -> (b^-1, a), or (reverse(b), a) when
 `reverse` is set.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_chart_rho(const struct TclChart *c, bool reverse, struct TclChart **out);

/*
 Turning (a, b) -> (a, b a).

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum TclStatus tcl_chart_tau(const struct TclChart *c, struct TclChart **out);

/*
 Membership of a row-major 3x3 integer matrix in H.

 # Safety
 `entries` must point to nine readable int64s; `out` must be writable.
 */
enum TclStatus tcl_h_membership(const int64_t *entries, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TCLINK_H */
