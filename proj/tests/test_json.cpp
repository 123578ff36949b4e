#include <doctest.h>

#include "core/checks.hpp"
#include "core/json_io.hpp"
#include "fixtures.hpp"

using namespace sheafline;
using namespace sheafline::fixtures;

TEST_CASE("complex parsing, bad inputs") {
	CHECK_THROWS_AS((void)parse_complex("{"), error);
	CHECK_THROWS_AS((void)parse_complex(R"({"values":{},"simplices":[],"char":9})"), error);
	CHECK_THROWS_AS((void)parse_complex(R"({"values":{"a":"1/0"},"simplices":[]})"), error);
	CHECK_THROWS_AS((void)parse_complex(R"({"values":{"a":"0"},"simplices":[["a","b"]]})"), error);
	auto K = parse_complex(R"({"values":{"a":"0","b":"1/2"},"simplices":[["a","b"]]})");
	CHECK(K.p == 2);
	CHECK(K.simplices.size() == 3);
	// faces closed automatically; line-addressed parse errors
	try {
		(void)parse_complex("{\n  \"values\": oops\n}");
		CHECK(false);
	} catch (const error& e) {
		CHECK(std::string(e.what()).find("line 2") != std::string::npos);
	}
}

TEST_CASE("diagram round trip and stable ordering") {
	Diagram d = diagram_of(hood_g());
	std::string js = to_json(d);
	Diagram back = parse_diagram(js);
	CHECK(back == d);
	CHECK(to_json(back) == js);
	// points serialize in (deg, kind, lo, hi) order
	CHECK(js.find("CC") < js.find("CO"));
}

TEST_CASE("object, morphism and functor round trips") {
	Rng rng(4711);
	DcatObject o;
	o.p = 2;
	o.summands.push_back(interval_point(IntervalKind::OC, ExtRat::minus_inf(), ExtRat(1), 1));
	o.summands.push_back(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(0), 0));
	DcatObject o2 = parse_object(to_json(o));
	CHECK(o2 == o);

	DcatObject src;
	src.p = 2;
	src.summands.push_back(interval_point(IntervalKind::CO, ExtRat(0), ExtRat(1), 0));
	DcatObject dst;
	dst.p = 2;
	dst.summands.push_back(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0));
	DcatMorphism f = zero_morphism(src, dst);
	f.entries.at(0, 0) = 1;
	DcatMorphism f2 = parse_morphism(to_json(f));
	CHECK(f2.entries == f.entries);
	CHECK(f2.src == src);

	// entries on vanishing slots are rejected
	std::string bad = to_json(f);
	size_t at = bad.find("[[0,0,\"1\"]]");
	REQUIRE(at != std::string::npos);
	std::string swapped = to_json(zero_morphism(dst, src));
	CHECK_THROWS_AS(
	    (void)parse_morphism(swapped.substr(0, swapped.find("\"entries\":[]")) + "\"entries\":[[0,0,\"1\"]]}"),
	    error);

	PresentedFunctor F = parse_functor(
	    R"({"char":2,
	        "Q":{"points":[{"kind":"CO","lo":"0/1","hi":"1/1","deg":0}]},
	        "P":{"points":[{"kind":"CC","lo":"0/1","hi":"2/1","deg":0}]},
	        "delta":{"entries":[[0,0,"1"]]}})");
	CHECK(F.delta.entries.at(0, 0) == 1);
	CHECK(betti0(F).at(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0)) == 1);
}

TEST_CASE("function round trip") {
	IntStripFunction f;
	f.set(interval_point(IntervalKind::CO, ExtRat(0), ExtRat::plus_inf(), 2), -3);
	f.set(interval_point(IntervalKind::CC, ExtRat(Rational(1, 2)), ExtRat(5), 0), 7);
	IntStripFunction f2 = parse_fn(to_json(f));
	CHECK(f2 == f);
}

TEST_CASE("sheaf text and svg") {
	Diagram d = diagram_of(hood_f());
	CHECK(sheaf_text(d) == "F_[0,2] ⊕ F_[0,1)");
	CHECK(sheaf_text(Diagram{}) == "0");
	std::string svg = diagram_svg(d);
	CHECK(svg.find("<svg") == 0);
	CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("document detection and check reports") {
	CHECK(detect_document(R"({"values":{},"simplices":[]})") == DocKind::Complex);
	CHECK(detect_document(R"({"points":[]})") == DocKind::Diagram);
	CHECK_THROWS_AS((void)detect_document(R"({"x":1})"), error);
	CheckReport r = run_checks(diagram_of(circle3()));
	CHECK(r.ok());
	CHECK(report_text(r).find("pass") != std::string::npos);
	CHECK(report_json(r).find("\"ok\":true") != std::string::npos);
}
