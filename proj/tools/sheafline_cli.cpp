// Command-line front end over the sheafline C API: reads JSON files, writes
// JSON/text/SVG.  Exit codes: 0 success, 2 malformed input, 3 invariant or
// domain failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sheafline/sheafline.h"

namespace {

int fail_with(slc_status st) {
	std::cerr << "error: " << slc_last_error() << "\n";
	return (int)st;
}

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cerr << "error: cannot open " << path << "\n";
		std::exit(2);
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
	if (path.empty() || path == "-") {
		std::cout << text;
		if (text.empty() || text.back() != '\n') std::cout << "\n";
		return;
	}
	std::ofstream out(path, std::ios::binary);
	out << text;
}

struct StringGuard {
	char* s = nullptr;
	~StringGuard() { slc_string_free(s); }
};

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"sheafline: extended persistence diagrams, interval sheaves, and "
	             "Grothendieck classes on the strip"};
	app.require_subcommand(1);
	int charp = 2;
	app.add_option("--char", charp, "coefficient field characteristic (prime, default 2)")
	    ->capture_default_str();

	std::string in_path, in_path2, out_path, svg_path, mode;
	int depth = 3;

	auto* epd = app.add_subcommand("epd", "extended persistence diagram of a complex");
	epd->add_option("complex", in_path, "complex JSON file")->required();
	epd->add_option("-o,--output", out_path, "output file (default stdout)");
	epd->add_option("--svg", svg_path, "also write an SVG strip plot");

	auto* sheaf = app.add_subcommand("sheaf", "interval-sheaf summands of a diagram");
	sheaf->add_option("diagram", in_path, "diagram JSON file")->required();
	sheaf->add_option("-o,--output", out_path, "output file (default stdout)");

	auto* hom = app.add_subcommand("hom", "Hom dimension and slots between two objects");
	hom->add_option("source", in_path, "source object JSON")->required();
	hom->add_option("target", in_path2, "target object JSON")->required();
	hom->add_option("-o,--output", out_path, "output file (default stdout)");

	auto* conecmd = app.add_subcommand("cone", "mapping cone of a morphism");
	conecmd->add_option("morphism", in_path, "morphism JSON")->required();
	conecmd->add_option("-o,--output", out_path, "output file (default stdout)");

	auto* resolve = app.add_subcommand("resolve", "Betti and Euler functions of a functor");
	resolve->add_option("functor", in_path, "presented functor JSON")->required();
	resolve->add_option("--depth", depth, "highest Betti index")->capture_default_str();
	resolve->add_option("-o,--output", out_path, "output file (default stdout)");

	auto* k0 = app.add_subcommand("k0", "Grothendieck group arithmetic on class functions");
	k0->add_option("op", mode, "add | sub | eq")->required();
	k0->add_option("a", in_path, "first function JSON")->required();
	k0->add_option("b", in_path2, "second function JSON")->required();
	k0->add_option("-o,--output", out_path, "output file (default stdout)");

	auto* check = app.add_subcommand("check", "run the invariant suite on a complex or diagram");
	check->add_option("input", in_path, "complex or diagram JSON")->required();

	auto* plot = app.add_subcommand("plot", "SVG strip plot of a diagram");
	plot->add_option("diagram", in_path, "diagram JSON file")->required();
	plot->add_option("--svg,-o", svg_path, "output SVG file")->required();

	CLI11_PARSE(app, argc, argv);

	if (*epd) {
		slc_complex* c = nullptr;
		if (auto st = slc_complex_parse(read_file(in_path).c_str(), charp, &c)) return fail_with(st);
		slc_diagram* d = nullptr;
		if (auto st = slc_epd(c, &d)) return fail_with(st);
		StringGuard js;
		if (auto st = slc_diagram_json(d, &js.s)) return fail_with(st);
		write_output(js.s, out_path);
		if (!svg_path.empty()) {
			StringGuard svg;
			if (auto st = slc_diagram_svg(d, &svg.s)) return fail_with(st);
			write_output(svg.s, svg_path);
		}
		slc_diagram_free(d);
		slc_complex_free(c);
		return 0;
	}
	if (*sheaf) {
		slc_diagram* d = nullptr;
		if (auto st = slc_diagram_parse(read_file(in_path).c_str(), charp, &d)) return fail_with(st);
		StringGuard txt;
		if (auto st = slc_sheaf_text(d, &txt.s)) return fail_with(st);
		write_output(txt.s, out_path);
		slc_diagram_free(d);
		return 0;
	}
	if (*hom) {
		slc_object *a = nullptr, *b = nullptr;
		if (auto st = slc_object_parse(read_file(in_path).c_str(), charp, &a)) return fail_with(st);
		if (auto st = slc_object_parse(read_file(in_path2).c_str(), charp, &b)) return fail_with(st);
		StringGuard js;
		if (auto st = slc_hom(a, b, &js.s)) return fail_with(st);
		write_output(js.s, out_path);
		slc_object_free(a);
		slc_object_free(b);
		return 0;
	}
	if (*conecmd) {
		slc_morphism* f = nullptr;
		if (auto st = slc_morphism_parse(read_file(in_path).c_str(), charp, &f)) return fail_with(st);
		slc_object* c = nullptr;
		if (auto st = slc_cone(f, &c)) return fail_with(st);
		StringGuard js;
		if (auto st = slc_object_json(c, &js.s)) return fail_with(st);
		write_output(js.s, out_path);
		slc_object_free(c);
		slc_morphism_free(f);
		return 0;
	}
	if (*resolve) {
		slc_functor* f = nullptr;
		if (auto st = slc_functor_parse(read_file(in_path).c_str(), charp, &f)) return fail_with(st);
		StringGuard js;
		if (auto st = slc_resolve(f, depth, &js.s)) return fail_with(st);
		write_output(js.s, out_path);
		slc_functor_free(f);
		return 0;
	}
	if (*k0) {
		slc_fn *a = nullptr, *b = nullptr;
		if (auto st = slc_fn_parse(read_file(in_path).c_str(), &a)) return fail_with(st);
		if (auto st = slc_fn_parse(read_file(in_path2).c_str(), &b)) return fail_with(st);
		if (mode == "eq") {
			int equal = 0;
			if (auto st = slc_fn_eq(a, b, &equal)) return fail_with(st);
			write_output(equal ? "equal" : "different", out_path);
			slc_fn_free(a);
			slc_fn_free(b);
			return 0;
		}
		slc_fn* r = nullptr;
		if (mode == "add") {
			if (auto st = slc_fn_add(a, b, &r)) return fail_with(st);
		} else if (mode == "sub") {
			slc_fn* nb = nullptr;
			if (auto st = slc_fn_neg(b, &nb)) return fail_with(st);
			if (auto st = slc_fn_add(a, nb, &r)) return fail_with(st);
			slc_fn_free(nb);
		} else {
			std::cerr << "error: k0 op must be add, sub, or eq\n";
			return 2;
		}
		StringGuard js;
		if (auto st = slc_fn_json(r, &js.s)) return fail_with(st);
		write_output(js.s, out_path);
		slc_fn_free(r);
		slc_fn_free(a);
		slc_fn_free(b);
		return 0;
	}
	if (*check) {
		std::string text = read_file(in_path);
		StringGuard report;
		int ok = 0;
		// try complex first, then diagram
		slc_complex* c = nullptr;
		if (slc_complex_parse(text.c_str(), charp, &c) == SLC_OK) {
			if (auto st = slc_check_complex(c, &report.s, &ok)) return fail_with(st);
			slc_complex_free(c);
		} else {
			slc_diagram* d = nullptr;
			if (auto st = slc_diagram_parse(text.c_str(), charp, &d)) return fail_with(st);
			if (auto st = slc_check_diagram(d, &report.s, &ok)) return fail_with(st);
			slc_diagram_free(d);
		}
		write_output(report.s, "");
		return ok ? 0 : 3;
	}
	if (*plot) {
		slc_diagram* d = nullptr;
		if (auto st = slc_diagram_parse(read_file(in_path).c_str(), charp, &d)) return fail_with(st);
		StringGuard svg;
		if (auto st = slc_diagram_svg(d, &svg.s)) return fail_with(st);
		write_output(svg.s, svg_path);
		slc_diagram_free(d);
		return 0;
	}
	return 2;
}
