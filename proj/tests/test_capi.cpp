#include <doctest.h>

#include <string>

#include "sheafline/sheafline.h"

namespace {

const char* hood_f_json =
    R"({"char":2,"values":{"1":"0/1","2":"1/1","3":"0/1","5":"2/1"},
        "simplices":[["5","1","2"],["5","2","3"],["1","2"],["2","3"]]})";

struct Str {
	char* s = nullptr;
	~Str() { slc_string_free(s); }
};

} // namespace

TEST_CASE("C API: epd and sheaf view of the hood fixture") {
	slc_complex* c = nullptr;
	REQUIRE(slc_complex_parse(hood_f_json, 2, &c) == SLC_OK);
	slc_diagram* d = nullptr;
	REQUIRE(slc_epd(c, &d) == SLC_OK);
	Str js;
	REQUIRE(slc_diagram_json(d, &js.s) == SLC_OK);
	std::string s = js.s;
	CHECK(s.find("\"kind\":\"CC\"") != std::string::npos);
	CHECK(s.find("\"hi\":\"2/1\"") != std::string::npos);
	Str sheaf;
	REQUIRE(slc_sheaf_text(d, &sheaf.s) == SLC_OK);
	CHECK(std::string(sheaf.s) == "F_[0,2] ⊕ F_[0,1)");

	// byte-identical output across runs
	slc_diagram* d2 = nullptr;
	REQUIRE(slc_epd(c, &d2) == SLC_OK);
	Str js2;
	REQUIRE(slc_diagram_json(d2, &js2.s) == SLC_OK);
	CHECK(std::string(js.s) == std::string(js2.s));

	// diagram JSON round trip
	slc_diagram* d3 = nullptr;
	REQUIRE(slc_diagram_parse(js.s, 2, &d3) == SLC_OK);
	Str js3;
	REQUIRE(slc_diagram_json(d3, &js3.s) == SLC_OK);
	CHECK(std::string(js3.s) == std::string(js.s));

	int ok = 0;
	Str report;
	REQUIRE(slc_check_complex(c, &report.s, &ok) == SLC_OK);
	CHECK(ok == 1);

	slc_diagram_free(d);
	slc_diagram_free(d2);
	slc_diagram_free(d3);
	slc_complex_free(c);
}

TEST_CASE("C API: status codes and error text") {
	slc_complex* c = nullptr;
	CHECK(slc_complex_parse("{oops", 2, &c) == SLC_ERR_PARSE);
	CHECK(std::string(slc_last_error()).find("line") != std::string::npos);
	CHECK(slc_complex_parse(R"({"char":6,"values":{},"simplices":[]})", 2, &c) == SLC_ERR_PARSE);
	// sampling on a 2-complex is a domain failure, not a parse failure
	REQUIRE(slc_complex_parse(hood_f_json, 2, &c) == SLC_OK);
	slc_diagram* d = nullptr;
	CHECK(slc_epd_sampling(c, &d) == SLC_ERR_INTERNAL);
	slc_complex_free(c);
}

TEST_CASE("C API: cone, hom, resolve, k0") {
	const char* mor =
	    R"({"char":2,
	        "source":{"points":[{"kind":"CO","lo":"0/1","hi":"1/1","deg":0}]},
	        "target":{"points":[{"kind":"CO","lo":"0/1","hi":"2/1","deg":0}]},
	        "entries":[[0,0,"1"]]})";
	slc_morphism* f = nullptr;
	REQUIRE(slc_morphism_parse(mor, 2, &f) == SLC_OK);
	slc_object* cone_obj = nullptr;
	REQUIRE(slc_cone(f, &cone_obj) == SLC_OK);
	Str js;
	REQUIRE(slc_object_json(cone_obj, &js.s) == SLC_OK);
	CHECK(std::string(js.s).find("\"lo\":\"1/1\"") != std::string::npos);

	slc_object *a = nullptr, *b = nullptr;
	REQUIRE(slc_object_parse(R"({"char":2,"points":[{"kind":"CC","lo":"0/1","hi":"2/1","deg":0}]})",
	                         2, &a) == SLC_OK);
	REQUIRE(slc_object_parse(R"({"char":2,"points":[{"kind":"CC","lo":"0/1","hi":"2/1","deg":0}]})",
	                         2, &b) == SLC_OK);
	Str hom;
	REQUIRE(slc_hom(a, b, &hom.s) == SLC_OK);
	CHECK(std::string(hom.s).find("\"dim\":1") != std::string::npos);

	const char* fun =
	    R"({"char":2,
	        "Q":{"points":[{"kind":"CO","lo":"0/1","hi":"1/1","deg":0}]},
	        "P":{"points":[{"kind":"CC","lo":"0/1","hi":"2/1","deg":0}]},
	        "delta":{"entries":[[0,0,"1"]]}})";
	slc_functor* F = nullptr;
	REQUIRE(slc_functor_parse(fun, 2, &F) == SLC_OK);
	Str res;
	REQUIRE(slc_resolve(F, 2, &res.s) == SLC_OK);
	CHECK(std::string(res.s).find("\"betti\"") != std::string::npos);
	slc_fn* cls = nullptr;
	REQUIRE(slc_class_of_functor(F, &cls) == SLC_OK);
	slc_fn* ncls = nullptr;
	REQUIRE(slc_fn_neg(cls, &ncls) == SLC_OK);
	slc_fn* sum = nullptr;
	REQUIRE(slc_fn_add(cls, ncls, &sum) == SLC_OK);
	Str sj;
	REQUIRE(slc_fn_json(sum, &sj.s) == SLC_OK);
	CHECK(std::string(sj.s) == R"({"terms":[]})");
	int eq = -1;
	REQUIRE(slc_fn_eq(cls, cls, &eq) == SLC_OK);
	CHECK(eq == 1);

	slc_fn_free(cls);
	slc_fn_free(ncls);
	slc_fn_free(sum);
	slc_functor_free(F);
	slc_object_free(a);
	slc_object_free(b);
	slc_object_free(cone_obj);
	slc_morphism_free(f);
}
