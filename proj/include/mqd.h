/*
 * mqd - morphisms determined by modules over finite-dimensional quiver
 * algebras, with exact GF(p) arithmetic.
 *
 * C API over the C++ core. Every entry point returns a status code and
 * writes a heap-allocated report string to *out (free with
 * mqd_string_free). On non-zero status the string carries the error or
 * counterexample message.
 */
#ifndef MQD_H
#define MQD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mqd_workspace mqd_workspace;

enum {
  MQD_OK = 0,           /* verified / success */
  MQD_VERIFY_FAIL = 1,  /* a check ran and failed; report has the details */
  MQD_INPUT_ERROR = 2,  /* malformed input or unknown name */
  MQD_CAP_EXCEEDED = 3  /* an enumeration cap was hit; result undecided */
};

const char* mqd_version(void);

void mqd_string_free(char* s);

/* Parses a workspace JSON document. Returns NULL on error and, when
 * error_out is non-NULL, stores the message there. */
mqd_workspace* mqd_workspace_open(const char* json_text, char** error_out);
void mqd_workspace_close(mqd_workspace* ws);

/* Validates the algebra and every module; the report names violations. */
int mqd_check(mqd_workspace* ws, char** out);

/* Basis of Hom(M, N). */
int mqd_hom(mqd_workspace* ws, const char* m, const char* n, char** out);

/* End(M): dimension, locality; with_radical adds the radical basis. */
int mqd_end(mqd_workspace* ws, const char* m, int with_radical, char** out);

/* Universe of indecomposables up to the dimension bound, as JSON. */
int mqd_universe(mqd_workspace* ws, int dim_bound, char** out);

/* Lattice of stable subspaces of a module; mode is "lambda" or
 * "end-stable"; emit_dot selects DOT over JSON. */
int mqd_lattice_module(mqd_workspace* ws, const char* module_name, const char* mode,
                       int emit_dot, char** out);

/* Gamma-submodule lattice of Hom(C, Y); names may be sums "A+B". */
int mqd_lattice_hom(mqd_workspace* ws, const char* c, const char* y, int emit_dot, char** out);

/* The right minimal right C-determined morphism for the submodule H of
 * Hom(C, Y) spanned by h_generators ("v1,v2,...;w1,w2,...", coordinates in
 * the canonical hom basis; empty string = zero submodule). */
int mqd_determined(mqd_workspace* ws, const char* c, const char* y, const char* h_generators,
                   int universe_dim, char** out);

/* Almost split sequence ending at Z. */
int mqd_almost_split(mqd_workspace* ws, const char* z, int universe_dim, char** out);

/* Determined-morphism round trip over the full lattice of Hom(C, Y),
 * plus the adjunction sweep. */
int mqd_check_bijection(mqd_workspace* ws, const char* c, const char* y, int universe_dim,
                        char** out);

/* Minimal presentation data of a morphism given as JSON
 * {"source": name, "target": name, "blocks": {vertex: matrix}}. */
int mqd_minimal(mqd_workspace* ws, const char* morphism_json, char** out);

/* Beilinson-algebra workflows; command is "grassmann", "variety" or
 * "compare". polys is an array of poly_count expressions like
 * "x0*x2 - x1^2". */
int mqd_beilinson(int n, int p, uint32_t q, const char* const* polys, int poly_count,
                  const char* command, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MQD_H */
