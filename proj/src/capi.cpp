#include "sheafline/sheafline.h"

#include <cstring>
#include <string>

#include "core/checks.hpp"
#include "core/json_io.hpp"

using namespace sheafline;

struct slc_complex { SimplicialFunction v; };
struct slc_diagram { Diagram v; };
struct slc_object { DcatObject v; };
struct slc_morphism { DcatMorphism v; };
struct slc_functor { PresentedFunctor v; };
struct slc_fn { IntStripFunction v; };

namespace {

thread_local std::string g_last_error;

slc_status status_of(const error& e) {
	return e.code == errc::schema_error ? SLC_ERR_PARSE : SLC_ERR_INTERNAL;
}

template <typename F>
slc_status guarded(F&& body) {
	g_last_error.clear();
	try {
		body();
		return SLC_OK;
	} catch (const error& e) {
		g_last_error = std::string(errc_name(e.code)) + ": " + e.what();
		return status_of(e);
	} catch (const std::exception& e) {
		g_last_error = e.what();
		return SLC_ERR_INTERNAL;
	}
}

char* dup_string(const std::string& s) {
	char* out = (char*)std::malloc(s.size() + 1);
	std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

} // namespace

extern "C" {

const char* slc_version(void) { return "sheafline 1.0.0"; }

const char* slc_last_error(void) { return g_last_error.c_str(); }

void slc_string_free(char* s) { std::free(s); }

slc_status slc_complex_parse(const char* json, int default_char, slc_complex** out) {
	return guarded([&] { *out = new slc_complex{parse_complex(json, default_char)}; });
}

slc_status slc_diagram_parse(const char* json, int default_char, slc_diagram** out) {
	return guarded([&] { *out = new slc_diagram{parse_diagram(json, default_char)}; });
}

slc_status slc_object_parse(const char* json, int default_char, slc_object** out) {
	return guarded([&] { *out = new slc_object{parse_object(json, default_char)}; });
}

slc_status slc_morphism_parse(const char* json, int default_char, slc_morphism** out) {
	return guarded([&] { *out = new slc_morphism{parse_morphism(json, default_char)}; });
}

slc_status slc_functor_parse(const char* json, int default_char, slc_functor** out) {
	return guarded([&] { *out = new slc_functor{parse_functor(json, default_char)}; });
}

slc_status slc_fn_parse(const char* json, slc_fn** out) {
	return guarded([&] { *out = new slc_fn{parse_fn(json)}; });
}

void slc_complex_free(slc_complex* h) { delete h; }
void slc_diagram_free(slc_diagram* h) { delete h; }
void slc_object_free(slc_object* h) { delete h; }
void slc_morphism_free(slc_morphism* h) { delete h; }
void slc_functor_free(slc_functor* h) { delete h; }
void slc_fn_free(slc_fn* h) { delete h; }

slc_status slc_diagram_json(const slc_diagram* d, char** out) {
	return guarded([&] { *out = dup_string(to_json(d->v)); });
}

slc_status slc_object_json(const slc_object* o, char** out) {
	return guarded([&] { *out = dup_string(to_json(o->v)); });
}

slc_status slc_fn_json(const slc_fn* f, char** out) {
	return guarded([&] { *out = dup_string(to_json(f->v)); });
}

slc_status slc_epd(const slc_complex* c, slc_diagram** out) {
	return guarded([&] { *out = new slc_diagram{diagram_of(c->v)}; });
}

slc_status slc_epd_sampling(const slc_complex* c, slc_diagram** out) {
	return guarded([&] { *out = new slc_diagram{diagram_via_sampling(c->v)}; });
}

slc_status slc_sheaf_text(const slc_diagram* d, char** out) {
	return guarded([&] { *out = dup_string(sheaf_text(d->v)); });
}

slc_status slc_diagram_svg(const slc_diagram* d, char** out) {
	return guarded([&] { *out = dup_string(diagram_svg(d->v)); });
}

slc_status slc_hom(const slc_object* a, const slc_object* b, char** out) {
	return guarded([&] {
		if (a->v.p != b->v.p) fail(errc::schema_error, "objects with different characteristics");
		*out = dup_string(hom_json(a->v, b->v));
	});
}

slc_status slc_cone(const slc_morphism* f, slc_object** out) {
	return guarded([&] { *out = new slc_object{cone(f->v)}; });
}

slc_status slc_resolve(const slc_functor* f, int depth, char** out) {
	return guarded([&] {
		if (depth < 0) fail(errc::schema_error, "depth must be nonnegative");
		*out = dup_string(resolve_json(f->v, depth));
	});
}

slc_status slc_fn_add(const slc_fn* a, const slc_fn* b, slc_fn** out) {
	return guarded([&] { *out = new slc_fn{add(a->v, b->v)}; });
}

slc_status slc_fn_neg(const slc_fn* a, slc_fn** out) {
	return guarded([&] { *out = new slc_fn{neg(a->v)}; });
}

slc_status slc_fn_eq(const slc_fn* a, const slc_fn* b, int* equal) {
	return guarded([&] { *equal = a->v == b->v ? 1 : 0; });
}

slc_status slc_class_of_diagram(const slc_diagram* d, slc_fn** out) {
	return guarded([&] { *out = new slc_fn{class_of_diagram(d->v).fn}; });
}

slc_status slc_class_of_functor(const slc_functor* f, slc_fn** out) {
	return guarded([&] { *out = new slc_fn{class_of(f->v).fn}; });
}

slc_status slc_check_complex(const slc_complex* c, char** report, int* ok) {
	return guarded([&] {
		CheckReport r = run_checks(c->v);
		*report = dup_string(report_text(r));
		*ok = r.ok() ? 1 : 0;
	});
}

slc_status slc_check_diagram(const slc_diagram* d, char** report, int* ok) {
	return guarded([&] {
		CheckReport r = run_checks(d->v);
		*report = dup_string(report_text(r));
		*ok = r.ok() ? 1 : 0;
	});
}

} // extern "C"
