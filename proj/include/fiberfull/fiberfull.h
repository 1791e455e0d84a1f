#ifndef FIBERFULL_H
#define FIBERFULL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FFL_BUILDING_LIBRARY)
#define FFL_API __attribute__((visibility("default")))
#else
#define FFL_API
#endif

typedef enum ffl_status {
  FFL_OK = 0,
  FFL_NEGATIVE = 1,      /* a comparison or check found a difference */
  FFL_INPUT_ERROR = 2,   /* syntax errors, unknown names, violated preconditions */
  FFL_INTERNAL_ERROR = 3 /* a checked postcondition failed */
} ffl_status;

typedef struct ffl_ring ffl_ring;
typedef struct ffl_ideal ffl_ideal;
typedef struct ffl_report ffl_report;

FFL_API const char* ffl_version(void);
/* Message of the last failed call on this thread; empty if none. */
FFL_API const char* ffl_last_error(void);
/* Frees strings returned by this library. */
FFL_API void ffl_string_free(char* s);

/* vars: nvars names; degrees may be NULL (all ones); order: "lex", "grevlex"
   or "weight([..], order)"; field: "q" or "fp:<p>". */
FFL_API ffl_status ffl_ring_create(const char* const* vars, size_t nvars, const long* degrees, const char* order,
                                   const char* field, ffl_ring** out);
FFL_API void ffl_ring_free(ffl_ring* ring);
FFL_API size_t ffl_ring_nvars(const ffl_ring* ring);

FFL_API ffl_status ffl_ideal_create(const ffl_ring* ring, const char* const* generators, size_t ngens,
                                    ffl_ideal** out);
FFL_API void ffl_ideal_free(ffl_ideal* ideal);
FFL_API size_t ffl_ideal_ngens(const ffl_ideal* ideal);
/* Generator k as text; free with ffl_string_free. */
FFL_API ffl_status ffl_ideal_generator(const ffl_ideal* ideal, size_t k, char** out);

/* Reduced Gröbner basis and initial ideal under the ring's order. */
FFL_API ffl_status ffl_groebner(const ffl_ideal* ideal, ffl_ideal** out);
FFL_API ffl_status ffl_initial_ideal(const ffl_ideal* ideal, ffl_ideal** out);
/* Betti number beta_{i,j} of R/I (rank-one grading). */
FFL_API ffl_status ffl_betti(const ffl_ideal* ideal, size_t i, long j, long* out);
/* dim H^i_m(R/I)_j for j = jlo..jhi written to out[0..jhi-jlo]. */
FFL_API ffl_status ffl_local_cohomology(const ffl_ideal* ideal, size_t i, long jlo, long jhi, long* out);

/* Parses and runs a program; command may be NULL when the source holds one.
   The report is produced even on errors. */
FFL_API ffl_status ffl_run(const char* source, const char* command, ffl_report** out);
FFL_API int ffl_report_exit_code(const ffl_report* report);
/* Borrowed strings, valid until ffl_report_free. */
FFL_API const char* ffl_report_text(const ffl_report* report);
FFL_API const char* ffl_report_json(const ffl_report* report);
FFL_API void ffl_report_free(ffl_report* report);

#ifdef __cplusplus
}
#endif

#endif
