#ifndef GST_H
#define GST_H

/* C interface to the System T translation toolkit. All functions return a
 * status code; on failure gst_session_error() holds a message describing the
 * most recent error. Strings returned through out-parameters are owned by the
 * caller and must be released with gst_string_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GST_OK = 0,
  GST_ERR_PARSE = 1,
  GST_ERR_TYPE = 2,
  GST_ERR_UNKNOWN_NAME = 3,
  GST_ERR_NUCLEUS = 4,
  GST_ERR_BUDGET = 5,
  GST_ERR_ARGUMENT = 6,
  GST_ERR_INTERNAL = 7
} gst_status;

typedef struct gst_session gst_session;

gst_session* gst_session_new(void);
void gst_session_free(gst_session* s);

/* Message for the last failing call on this session; valid until the next
 * call. Never NULL. */
const char* gst_session_error(const gst_session* s);

/* Parse a source file (a sequence of `def name : type = term;`) and add its
 * declarations to the session. Prelude names and earlier definitions are in
 * scope. */
gst_status gst_load_string(gst_session* s, const char* src);
gst_status gst_load_file(gst_session* s, const char* path);

/* Newline-separated `name : type` lines for every loaded definition. */
gst_status gst_list_defs(gst_session* s, char** out);

gst_status gst_type_of(gst_session* s, const char* def, char** out);

/* style: gentzen | kolmogorov | kuroda
 * nucleus: identity | major | lifting | cont | ucont | bar | gen-identity | gen-cont
 * Returns the translated term and its type as source text. */
gst_status gst_translate(gst_session* s, const char* def, const char* style,
                         const char* nucleus, char** out_term, char** out_type);

/* property: modulus | ucmodulus | ucmodulus-bar | majorant | bar-triple |
 * kuroda-modulus. Returns a JSON object mapping component names to printed
 * terms. */
gst_status gst_extract(gst_session* s, const char* def, const char* property, char** out);

/* property: continuity | uniform | gbr | secures | majorant | logical-relation.
 * nucleus is consulted only by logical-relation (NULL elsewhere). Returns the
 * verification report as JSON; *out_pass is 1 on a pass verdict. */
gst_status gst_verify(gst_session* s, const char* def, const char* property,
                      const char* nucleus, uint64_t seed, int samples, char** out,
                      int* out_pass);

/* Evaluate a closed term given as source text (definitions in scope); the
 * result is its numeral readback at N or a printed description otherwise. */
gst_status gst_eval_term(gst_session* s, const char* term, char** out);

void gst_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* GST_H */
