/* sheafline: extended persistence diagrams as block multisets on the strip,
 * constructible sheaves on the line as formal sums of interval indecomposables,
 * Betti/Euler functions of presentable functors and their Grothendieck classes.
 *
 * All objects are exchanged as JSON text (schemas in docs/schemas.md) through
 * opaque handles.  Every function returns a status code; on failure a
 * description is available from slc_last_error() until the next call on the
 * same thread.  Strings returned through char** are owned by the caller and
 * released with slc_string_free().
 */

#ifndef SHEAFLINE_H
#define SHEAFLINE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slc_status {
	SLC_OK = 0,
	SLC_ERR_PARSE = 2,    /* malformed input: schema violations, bad JSON */
	SLC_ERR_INTERNAL = 3, /* domain or invariant failure */
} slc_status;

typedef struct slc_complex slc_complex;   /* simplicial function */
typedef struct slc_diagram slc_diagram;   /* block multiset on the strip */
typedef struct slc_object slc_object;     /* formal sum of interval sheaves */
typedef struct slc_morphism slc_morphism; /* scalar matrix on Hom slots */
typedef struct slc_functor slc_functor;   /* presented functor coker h(delta) */
typedef struct slc_fn slc_fn;             /* integer function on strip points */

const char* slc_version(void);
const char* slc_last_error(void);
void slc_string_free(char* s);

/* parsing; default_char applies when the document carries no "char" field */
slc_status slc_complex_parse(const char* json, int default_char, slc_complex** out);
slc_status slc_diagram_parse(const char* json, int default_char, slc_diagram** out);
slc_status slc_object_parse(const char* json, int default_char, slc_object** out);
slc_status slc_morphism_parse(const char* json, int default_char, slc_morphism** out);
slc_status slc_functor_parse(const char* json, int default_char, slc_functor** out);
slc_status slc_fn_parse(const char* json, slc_fn** out);

void slc_complex_free(slc_complex*);
void slc_diagram_free(slc_diagram*);
void slc_object_free(slc_object*);
void slc_morphism_free(slc_morphism*);
void slc_functor_free(slc_functor*);
void slc_fn_free(slc_fn*);

slc_status slc_diagram_json(const slc_diagram*, char** out);
slc_status slc_object_json(const slc_object*, char** out);
slc_status slc_fn_json(const slc_fn*, char** out);

/* extended persistence of a simplicial function as a block multiset */
slc_status slc_epd(const slc_complex*, slc_diagram** out);
/* independent sampling pipeline (graphs only) */
slc_status slc_epd_sampling(const slc_complex*, slc_diagram** out);

/* interval-sheaf view of a diagram, e.g. "F_[0,2] (+) F_[1,2)[-1]" */
slc_status slc_sheaf_text(const slc_diagram*, char** out);

/* SVG plot: strip, boundary lines, tessellation, one marker per point */
slc_status slc_diagram_svg(const slc_diagram*, char** out);

/* Hom dimension and slot list as JSON {"dim":n,"slots":[[j,i],...]} */
slc_status slc_hom(const slc_object*, const slc_object*, char** out);

/* mapping cone of a morphism */
slc_status slc_cone(const slc_morphism*, slc_object** out);

/* Betti functions beta^0..beta^depth and the Euler function as JSON */
slc_status slc_resolve(const slc_functor*, int depth, char** out);

/* Grothendieck group arithmetic */
slc_status slc_fn_add(const slc_fn*, const slc_fn*, slc_fn** out);
slc_status slc_fn_neg(const slc_fn*, slc_fn** out);
slc_status slc_fn_eq(const slc_fn*, const slc_fn*, int* equal);
slc_status slc_class_of_diagram(const slc_diagram*, slc_fn** out);
slc_status slc_class_of_functor(const slc_functor*, slc_fn** out);

/* invariant suites; *ok is 1 when every check passed */
slc_status slc_check_complex(const slc_complex*, char** report, int* ok);
slc_status slc_check_diagram(const slc_diagram*, char** report, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* SHEAFLINE_H */
