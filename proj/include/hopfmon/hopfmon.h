#ifndef HOPFMON_H
#define HOPFMON_H

#include <stddef.h>

#if defined(__GNUC__)
#define HOPFMON_API __attribute__((visibility("default")))
#else
#define HOPFMON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hopfmon_presentation hopfmon_presentation;

typedef enum {
  HOPFMON_OK = 0,
  HOPFMON_IDENTITY_FAILURE = 1,
  HOPFMON_MALFORMED = 2,
  HOPFMON_BUDGET = 3,
  HOPFMON_INVALID_ARGUMENT = 4,
  HOPFMON_INTERNAL = 5
} hopfmon_status;

typedef enum {
  HOPFMON_BUILD_DUAL = 0,
  HOPFMON_BUILD_DOUBLE,
  HOPFMON_BUILD_MONODROMY,
  HOPFMON_BUILD_GAUGED,
  HOPFMON_BUILD_MULTILOOP,
  HOPFMON_BUILD_TWISTED_SQUARE
} hopfmon_construction;

/* Same order as the library's suite list; ALL runs each in turn. */
typedef enum {
  HOPFMON_SUITE_COPRODUCT_DEFORMATION = 0,
  HOPFMON_SUITE_MONODROMY_RELATION,
  HOPFMON_SUITE_GAUGED_MONODROMY,
  HOPFMON_SUITE_MONODROMY_INVERSE,
  HOPFMON_SUITE_DOUBLE_EXTENSION,
  HOPFMON_SUITE_DOUBLE_ISOMORPHISM,
  HOPFMON_SUITE_MONODROMY_MAP,
  HOPFMON_SUITE_FACTORIZATION,
  HOPFMON_SUITE_COCYCLE_TWIST,
  HOPFMON_SUITE_TWISTED_R,
  HOPFMON_SUITE_TWISTED_DOUBLE,
  HOPFMON_SUITE_MULTILOOP,
  HOPFMON_SUITE_BOSONIZATION,
  HOPFMON_SUITE_MULTILOOP_MONODROMY,
  HOPFMON_SUITE_MULTILOOP_RESTRICTION,
  HOPFMON_SUITE_ALL
} hopfmon_suite;

/* Report flags. */
#define HOPFMON_REPORT_JSON 1u
#define HOPFMON_REPORT_TIMING 2u

HOPFMON_API const char *hopfmon_version(void);

/* Message of the last failed call on this thread, "" if none. */
HOPFMON_API const char *hopfmon_last_error(void);

HOPFMON_API hopfmon_status hopfmon_load(const char *path, hopfmon_presentation **out);
HOPFMON_API hopfmon_status hopfmon_parse(const char *text, hopfmon_presentation **out);
HOPFMON_API void hopfmon_free(hopfmon_presentation *p);

HOPFMON_API size_t hopfmon_dim(const hopfmon_presentation *p);
HOPFMON_API int hopfmon_is_hopf(const hopfmon_presentation *p);
HOPFMON_API size_t hopfmon_r_count(const hopfmon_presentation *p);
HOPFMON_API const char *hopfmon_r_name(const hopfmon_presentation *p, size_t i);

/* Writes the presentation back as text; free with hopfmon_string_free. */
HOPFMON_API hopfmon_status hopfmon_write(const hopfmon_presentation *p, char **out);

/* Hopf axioms and every named R.  IDENTITY_FAILURE when a check fails; the
   report is produced in both cases. */
HOPFMON_API hopfmon_status hopfmon_validate(const hopfmon_presentation *p, unsigned flags, char **report);

/* r_name may be NULL for the first R in the file.  m is used by MULTILOOP. */
HOPFMON_API hopfmon_status hopfmon_build(const hopfmon_presentation *p, hopfmon_construction what, const char *r_name,
                             unsigned m, char **out);

/* label names the run in the report header; NULL uses the suite name. */
HOPFMON_API hopfmon_status hopfmon_verify(const hopfmon_presentation *p, hopfmon_suite suite, const char *label,
                              const char *r_name, unsigned m, unsigned flags, char **report);

HOPFMON_API hopfmon_status hopfmon_rank(const hopfmon_presentation *p, const char *r_name, size_t *rank, size_t *dim,
                            int *factorizable);

HOPFMON_API void hopfmon_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
