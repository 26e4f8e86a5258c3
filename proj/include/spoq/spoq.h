/* Public C API of the spoq shared library.
 *
 * Exact symbolic computation on the supercircle with two odd coordinates:
 * Grassmann function algebra, contact fields, filtered differential
 * operators, symbol modules, Casimir operators and the equivariant
 * quantization map.
 *
 * Conventions:
 *  - rationals, weights and (half-)integer degrees travel as strings
 *    ("p", "p/q"), so exactness survives the boundary;
 *  - every output string is heap-allocated and released with
 *    spoq_free_string; handles with spoq_superfn_free;
 *  - fallible calls return spoq_status and, when non-OK, set *error
 *    (also to free with spoq_free_string) if error is non-NULL.
 */
#ifndef SPOQ_H
#define SPOQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spoq_status {
    SPOQ_OK = 0,
    SPOQ_ERROR_PARSE = 1,       /* malformed expression / number / matrix */
    SPOQ_ERROR_DOMAIN = 2,      /* arguments outside an operation's domain */
    SPOQ_ERROR_OBSTRUCTION = 3, /* no solution or zero denominator; output carries diagnostics */
    SPOQ_ERROR_INTERNAL = 4
} spoq_status;

typedef struct spoq_superfn spoq_superfn;

const char* spoq_version(void);
void spoq_free_string(char* s);

/* ---- superfunction algebra ------------------------------------------- */

spoq_status spoq_superfn_parse(const char* text, spoq_superfn** out, char** error);
void spoq_superfn_free(spoq_superfn* f);
char* spoq_superfn_print(const spoq_superfn* f);
char* spoq_superfn_json(const spoq_superfn* f);
spoq_status spoq_superfn_mul(const spoq_superfn* a, const spoq_superfn* b, spoq_superfn** out,
                             char** error);
/* direction: "x", "t1" or "t2" (left Grassmann derivative). */
spoq_status spoq_superfn_derive(const spoq_superfn* f, const char* direction, spoq_superfn** out,
                                char** error);
spoq_status spoq_superfn_dbar(int i, const spoq_superfn* f, spoq_superfn** out, char** error);

/* ---- weights ---------------------------------------------------------- */

/* Resolve (lambda, mu, delta): pass any two (NULL for the missing one); all
 * three are accepted when consistent. On success *lambda_out / *delta_out
 * receive the resolved pair. */
spoq_status spoq_resolve_weights(const char* lambda, const char* mu, const char* delta,
                                 char** lambda_out, char** delta_out, char** error);

/* ---- commands (format: "text" or "json") ------------------------------ */

/* Equivariant quantization of the degree-k symbol (f1, f2).
 * method: "iterative" or "closed-form". A NoSolution or zero-denominator
 * outcome returns SPOQ_ERROR_OBSTRUCTION with the diagnostics in *output. */
spoq_status spoq_cmd_quantize(const char* k, const char* lambda, const char* delta, const char* f1,
                              const char* f2, const char* method, const char* format, char** output,
                              char** error);

/* gamma(X_f) applied to the symbol; method "direct" or "closed-form". */
spoq_status spoq_cmd_gamma(const char* f, const char* k, const char* lambda, const char* delta,
                           const char* f1, const char* f2, const char* method, const char* format,
                           char** output, char** error);

/* Casimir action on the symbol; rep "L" (density action) or "calL"
 * (operator action carried back through the affine quantization). */
spoq_status spoq_cmd_casimir(const char* rep, const char* k, const char* lambda, const char* delta,
                             const char* f1, const char* f2, const char* format, char** output,
                             char** error);

/* Sorted critical weight shifts up to max_k. */
spoq_status spoq_cmd_critical(const char* max_k, const char* format, char** output, char** error);

/* Lie derivative along the contact field of f.
 * target "density": acts on f1 as a lambda-density;
 * target "symbol":  acts on the degree-k symbol (f1, f2);
 * target "operator": acts on the affine quantization of that symbol. */
spoq_status spoq_cmd_lie(const char* target, const char* f, const char* k, const char* lambda,
                         const char* delta, const char* f1, const char* f2, const char* format,
                         char** output, char** error);

/* Embed a 4x4 matrix ("a,b,c,d; e,f,g,h; ...") as a vector field. */
spoq_status spoq_cmd_embed(const char* matrix, const char* format, char** output, char** error);

/* Randomized exact equivariance check over all eight generators. Returns
 * SPOQ_ERROR_OBSTRUCTION when the check fails or is unusable at these
 * weights; *output carries the report either way. */
spoq_status spoq_cmd_check(const char* k, const char* lambda, const char* delta, int trials,
                           unsigned long long seed, int max_degree, const char* method,
                           const char* format, char** output, char** error);

#ifdef __cplusplus
}
#endif

#endif /* SPOQ_H */
