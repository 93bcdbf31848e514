#ifndef TORSLAT_H
#define TORSLAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TORSLAT_API __declspec(dllexport)
#else
#define TORSLAT_API __attribute__((visibility("default")))
#endif

typedef enum torslat_status {
  TORSLAT_OK = 0,
  TORSLAT_INVALID_ARGUMENT,
  TORSLAT_INVALID_RANK,
  TORSLAT_RANK_MISMATCH,
  TORSLAT_RANK_TOO_LARGE,
  TORSLAT_OUT_OF_SUPPORT,
  TORSLAT_OVERLAPPING_SUPPORTS,
  TORSLAT_CYCLE_DETECTED,
  TORSLAT_NOT_A_LATTICE,
  TORSLAT_NON_HASSE_EDGE,
  TORSLAT_MISSING_CJR,
  TORSLAT_SAME_ARC,
  TORSLAT_NOT_OVERLAPPING,
  TORSLAT_NOT_IN_IMAGE,
  TORSLAT_BUDGET_EXCEEDED,
  TORSLAT_INTERNAL
} torslat_status;

typedef enum torslat_format { TORSLAT_FORMAT_JSON = 0, TORSLAT_FORMAT_DOT = 1 } torslat_format;

typedef struct torslat_tors_lattice torslat_tors_lattice;
typedef struct torslat_weak_order torslat_weak_order;

/* Message for the last failing call on this thread, or "". */
TORSLAT_API const char* torslat_last_error(void);
TORSLAT_API const char* torslat_status_name(torslat_status status);
/* Element budget: TORSLAT_BUDGET from the environment, else the default. */
TORSLAT_API size_t torslat_budget(void);

/* Strings returned through char** out parameters are owned by the caller. */
TORSLAT_API void torslat_free_string(char* s);

/* Indecomposables of RA_n, one JSON object per line. */
TORSLAT_API torslat_status torslat_indecomposables(int n, char** out);
/* Modules are "i" or "p-q:WORD" or module JSON. */
TORSLAT_API torslat_status torslat_hom(int n, const char* from, const char* to, int* hom, int* oracle);

TORSLAT_API torslat_status torslat_tors_build(int n, torslat_tors_lattice** out);
TORSLAT_API void torslat_tors_free(torslat_tors_lattice* tors);
TORSLAT_API size_t torslat_tors_size(const torslat_tors_lattice* tors);
TORSLAT_API torslat_status torslat_tors_export(const torslat_tors_lattice* tors, torslat_format format,
                                               int with_labels, char** out);
/* Faces of the canonical join complex, one JSON array of element ids per line. */
TORSLAT_API torslat_status torslat_tors_cjc(const torslat_tors_lattice* tors, char** out);
/* Permutation image of a class, as a JSON integer array. */
TORSLAT_API torslat_status torslat_tors_phi(const torslat_tors_lattice* tors, int class_id, char** out);

TORSLAT_API torslat_status torslat_weak_build(int n, torslat_weak_order** out);
TORSLAT_API void torslat_weak_free(torslat_weak_order* weak);
TORSLAT_API size_t torslat_weak_size(const torslat_weak_order* weak);
TORSLAT_API torslat_status torslat_weak_export(const torslat_weak_order* weak, torslat_format format, char** out);

/* Arcs on n+1 nodes, one JSON object per line. */
TORSLAT_API torslat_status torslat_arcs(int n, char** out);
/* Faces of the arc complex as arc index arrays, one per line. */
TORSLAT_API torslat_status torslat_arc_complex(int n, char** out);
/* Every face of the arc complex drawn as an SVG gallery. */
TORSLAT_API torslat_status torslat_arc_gallery_svg(int n, char** out);

/* Arc diagram of a permutation in one-line notation. */
TORSLAT_API torslat_status torslat_delta_json(const char* perm, char** out);
TORSLAT_API torslat_status torslat_delta_svg(const char* perm, char** out);

/* IsoReport as JSON; *ok is 1 iff every flag holds. */
TORSLAT_API torslat_status torslat_verify(int n, char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif
