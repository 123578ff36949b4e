#include "core/json_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace sheafline {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& msg) { fail(errc::schema_error, msg); }

std::string line_of(const std::string& text, size_t byte) {
	size_t line = 1, col = 1;
	for (size_t i = 0; i < byte && i < text.size(); ++i) {
		if (text[i] == '\n') { ++line; col = 1; }
		else ++col;
	}
	return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_text(const std::string& text) {
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		schema_fail(std::string("JSON parse error at ") + line_of(text, e.byte) + ": " + e.what());
	}
}

int parse_char(const json& j, int fallback) {
	int p = fallback;
	if (j.contains("char")) {
		if (!j["char"].is_number_integer()) schema_fail("\"char\" must be an integer");
		p = j["char"].get<int>();
	}
	if (!is_prime(p)) schema_fail("characteristic " + std::to_string(p) + " is not prime");
	return p;
}

Rational parse_rational(const std::string& s) {
	size_t slash = s.find('/');
	try {
		if (slash == std::string::npos) return Rational(std::stoll(s));
		long long num = std::stoll(s.substr(0, slash));
		long long den = std::stoll(s.substr(slash + 1));
		if (den == 0) schema_fail("rational with zero denominator: " + s);
		return Rational(num, den);
	} catch (const std::invalid_argument&) {
		schema_fail("malformed rational \"" + s + "\"");
	} catch (const std::out_of_range&) {
		schema_fail("rational out of range: " + s);
	}
}

ExtRat parse_extrat(const json& j, const char* what) {
	if (!j.is_string()) schema_fail(std::string(what) + " must be a string like \"p/q\" or \"-inf\"");
	std::string s = j.get<std::string>();
	if (s == "-inf") return ExtRat::minus_inf();
	if (s == "+inf" || s == "inf") return ExtRat::plus_inf();
	return ExtRat(parse_rational(s));
}

CanonicalPoint parse_point(const json& j) {
	if (!j.is_object()) schema_fail("point must be an object");
	for (const char* key : {"kind", "lo", "hi", "deg"})
		if (!j.contains(key)) schema_fail(std::string("point misses \"") + key + "\"");
	CanonicalPoint c;
	auto kind = kind_from_name(j["kind"].get<std::string>());
	if (!kind) schema_fail("unknown interval kind \"" + j["kind"].get<std::string>() + "\"");
	c.kind = *kind;
	c.lo = parse_extrat(j["lo"], "lo");
	c.hi = parse_extrat(j["hi"], "hi");
	if (!j["deg"].is_number_integer()) schema_fail("\"deg\" must be an integer");
	c.deg = j["deg"].get<int>();
	validate(c);
	return c;
}

json point_json(const CanonicalPoint& c) {
	return json{{"kind", kind_name(c.kind)},
	            {"lo", to_string(c.lo)},
	            {"hi", to_string(c.hi)},
	            {"deg", c.deg}};
}

DcatObject parse_object_json(const json& j, int default_char) {
	if (!j.is_object() || !j.contains("points")) schema_fail("object needs a \"points\" array");
	DcatObject o;
	o.p = parse_char(j, default_char);
	for (const auto& pj : j["points"]) {
		CanonicalPoint c = parse_point(pj);
		int mult = 1;
		if (pj.contains("mult")) {
			if (!pj["mult"].is_number_integer() || pj["mult"].get<int>() < 1)
				schema_fail("\"mult\" must be a positive integer");
			mult = pj["mult"].get<int>();
		}
		for (int i = 0; i < mult; ++i) o.summands.push_back(c);
	}
	return o;
}

DcatMorphism parse_morphism_json(const json& j, int default_char) {
	for (const char* key : {"source", "target", "entries"})
		if (!j.contains(key)) schema_fail(std::string("morphism misses \"") + key + "\"");
	int p = parse_char(j, default_char);
	DcatObject src = parse_object_json(j["source"], p);
	DcatObject dst = parse_object_json(j["target"], p);
	if (src.p != p || dst.p != p) schema_fail("morphism endpoints with mixed characteristics");
	DcatMorphism f = zero_morphism(src, dst);
	for (const auto& e : j["entries"]) {
		if (!e.is_array() || e.size() != 3) schema_fail("entry must be [target, source, scalar]");
		int jj = e[0].get<int>(), ii = e[1].get<int>();
		if (jj < 0 || jj >= dst.size() || ii < 0 || ii >= src.size())
			schema_fail("entry index out of range");
		Rational s = parse_rational(e[2].get<std::string>());
		if (s.den != 1) schema_fail("matrix scalar must be an integer");
		f.entries.at(jj, ii) = fp_normalize(s.num, p);
	}
	try {
		validate(f);
	} catch (const error& e) {
		schema_fail(e.what());
	}
	return f;
}

} // namespace

SimplicialFunction parse_complex(const std::string& text, int default_char) {
	json j = parse_text(text);
	if (!j.is_object() || !j.contains("values") || !j.contains("simplices"))
		schema_fail("complex needs \"values\" and \"simplices\"");
	int p = parse_char(j, default_char);
	std::vector<std::pair<std::string, Rational>> values;
	for (const auto& [name, vj] : j["values"].items()) {
		ExtRat v = parse_extrat(vj, "vertex value");
		if (!v.is_finite()) schema_fail("vertex values must be finite");
		values.push_back({name, v.q});
	}
	std::vector<std::vector<std::string>> simplices;
	for (const auto& sj : j["simplices"]) {
		if (!sj.is_array() || sj.empty()) schema_fail("simplices must be non-empty vertex arrays");
		std::vector<std::string> s;
		for (const auto& v : sj) s.push_back(v.get<std::string>());
		simplices.push_back(s);
	}
	try {
		return make_complex(p, values, simplices);
	} catch (const error& e) {
		schema_fail(e.what());
	}
}

Diagram parse_diagram(const std::string& text, int default_char) {
	json j = parse_text(text);
	if (!j.is_object() || !j.contains("points")) schema_fail("diagram needs a \"points\" array");
	Diagram d;
	d.p = parse_char(j, default_char);
	for (const auto& pj : j["points"]) {
		CanonicalPoint c = parse_point(pj);
		int mult = 1;
		if (pj.contains("mult")) mult = pj["mult"].get<int>();
		if (mult < 1) schema_fail("\"mult\" must be a positive integer");
		d.points[c] += mult;
	}
	return d;
}

DcatObject parse_object(const std::string& text, int default_char) {
	return parse_object_json(parse_text(text), default_char);
}

DcatMorphism parse_morphism(const std::string& text, int default_char) {
	return parse_morphism_json(parse_text(text), default_char);
}

PresentedFunctor parse_functor(const std::string& text, int default_char) {
	json j = parse_text(text);
	for (const char* key : {"Q", "P", "delta"})
		if (!j.contains(key)) schema_fail(std::string("functor misses \"") + key + "\"");
	int p = parse_char(j, default_char);
	DcatObject Q = parse_object_json(j["Q"], p);
	DcatObject P = parse_object_json(j["P"], p);
	json dj = j["delta"];
	if (!dj.contains("source")) dj["source"] = j["Q"];
	if (!dj.contains("target")) dj["target"] = j["P"];
	DcatMorphism delta = parse_morphism_json(dj, p);
	if (!(delta.src == Q) || !(delta.dst == P))
		schema_fail("delta endpoints disagree with Q and P");
	try {
		return presented(Q, P, delta);
	} catch (const error& e) {
		schema_fail(e.what());
	}
}

IntStripFunction parse_fn(const std::string& text) {
	json j = parse_text(text);
	if (!j.is_object() || !j.contains("terms")) schema_fail("function needs a \"terms\" array");
	IntStripFunction f;
	for (const auto& tj : j["terms"]) {
		if (!tj.contains("point") || !tj.contains("coef")) schema_fail("term needs point and coef");
		CanonicalPoint c = parse_point(tj["point"]);
		f.set(c, f.at(c) + tj["coef"].get<int>());
	}
	return f;
}

DocKind detect_document(const std::string& text) {
	json j = parse_text(text);
	if (j.is_object() && j.contains("simplices")) return DocKind::Complex;
	if (j.is_object() && j.contains("points")) return DocKind::Diagram;
	schema_fail("document is neither a complex nor a diagram");
}

std::string to_json(const Diagram& d) {
	json pts = json::array();
	for (const auto& [c, mult] : d.points) {
		json p = point_json(c);
		p["mult"] = mult;
		pts.push_back(p);
	}
	return json{{"char", d.p}, {"points", pts}}.dump();
}

std::string to_json(const DcatObject& o) {
	json pts = json::array();
	for (const auto& c : o.summands) pts.push_back(point_json(c));
	return json{{"char", o.p}, {"points", pts}}.dump();
}

std::string to_json(const DcatMorphism& f) {
	json entries = json::array();
	for (int j = 0; j < f.entries.rows; ++j)
		for (int i = 0; i < f.entries.cols; ++i)
			if (f.entries.at(j, i))
				entries.push_back(json::array({j, i, std::to_string(f.entries.at(j, i))}));
	return json{{"char", f.src.p},
	            {"source", json::parse(to_json(f.src))},
	            {"target", json::parse(to_json(f.dst))},
	            {"entries", entries}}
	    .dump();
}

std::string to_json(const IntStripFunction& f) {
	json terms = json::array();
	for (const auto& [c, coef] : f.terms)
		terms.push_back(json{{"point", point_json(c)}, {"coef", coef}});
	return json{{"terms", terms}}.dump();
}

std::string hom_json(const DcatObject& A, const DcatObject& B) {
	auto slots = hom_slots(A, B);
	json sj = json::array();
	for (auto [j, i] : slots) sj.push_back(json::array({j, i}));
	return json{{"dim", (int)slots.size()}, {"slots", sj}}.dump();
}

std::string resolve_json(const PresentedFunctor& F, int depth) {
	json betti_list = json::array();
	for (int n = 0; n <= depth; ++n) betti_list.push_back(json::parse(to_json(betti(F, n))));
	return json{{"char", F.P.p},
	            {"betti", betti_list},
	            {"euler", json::parse(to_json(euler(F)))}}
	    .dump();
}

std::string sheaf_text(const Diagram& d) {
	if (d.points.empty()) return "0";
	std::string out;
	for (const auto& [c, mult] : d.points)
		for (int i = 0; i < mult; ++i) {
			if (!out.empty()) out += " ⊕ ";
			out += sheaf_name(c);
		}
	return out;
}

std::string diagram_svg(const Diagram& d) {
	// presentation-only floating point; every computation stays exact upstream
	double lo = -2.0, hi = 8.0;
	std::vector<std::pair<double, double>> marks;
	for (const auto& [c, mult] : d.points) {
		(void)mult;
		StripPoint u = from_canonical(c);
		double x = approx(u.x), y = approx(u.y);
		marks.push_back({x, y});
		lo = std::min({lo, x - 1.5, y - 1.5});
		hi = std::max({hi, x + 1.5, y + 1.5});
	}
	double scale = 640.0 / (hi - lo);
	auto X = [&](double x) { return (x - lo) * scale; };
	auto Y = [&](double y) { return (hi - y) * scale; };
	std::ostringstream svg;
	svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
	       "viewBox=\"0 0 640 640\">\n";
	svg << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
	// strip boundary: l0 (x + y = -pi) and l1 (x + y = pi)
	for (double c : {-M_PI, M_PI}) {
		svg << "<line x1=\"" << X(lo) << "\" y1=\"" << Y(c - lo) << "\" x2=\"" << X(hi)
		    << "\" y2=\"" << Y(c - hi) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
	}
	// tessellation: the T-orbit of the compactified diagonal q
	int tiles = (int)std::ceil((hi - lo) / M_PI) + 4;
	for (int k = -tiles; k <= tiles; ++k) {
		double ax = -M_PI / 2, ay = -M_PI / 2, bx = M_PI / 2, by = M_PI / 2;
		for (int step = 0; step < std::abs(k); ++step) {
			auto tf = [&](double& x, double& y) {
				double nx = k > 0 ? -M_PI - y : M_PI - y;
				double ny = k > 0 ? M_PI - x : -M_PI - x;
				x = nx;
				y = ny;
			};
			tf(ax, ay);
			tf(bx, by);
		}
		svg << "<line x1=\"" << X(ax) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(bx) << "\" y2=\""
		    << Y(by) << "\" stroke=\"#888\" stroke-width=\"0.7\" stroke-dasharray=\"4 3\"/>\n";
	}
	for (const auto& [c, mult] : d.points) {
		StripPoint u = from_canonical(c);
		svg << "<circle cx=\"" << X(approx(u.x)) << "\" cy=\"" << Y(approx(u.y)) << "\" r=\""
		    << 3.0 + 1.5 * mult << "\" fill=\"#c22\" fill-opacity=\"0.8\"/>\n";
	}
	svg << "</svg>\n";
	return svg.str();
}

} // namespace sheafline
