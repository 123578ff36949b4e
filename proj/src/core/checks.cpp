#include "core/checks.hpp"

#include <json.hpp>

#include "core/k0.hpp"
#include "core/presj.hpp"

namespace sheafline {

namespace {

CheckItem item(const std::string& name, bool pass, const std::string& detail = "") {
	return CheckItem{name, pass, detail};
}

void append_diagram_checks(CheckReport& r, const Diagram& d) {
	bool nonneg = true;
	for (const auto& [pt, mult] : d.points) nonneg = nonneg && mult > 0;
	r.items.push_back(item("multiplicities positive", nonneg));
	r.items.push_back(item("block sequences cohomological", check_cohomological(d)));

	// right continuity along increasing chains toward each corner
	bool cont = true;
	for (const auto& [c, mult] : d.points) {
		(void)mult;
		StripPoint u = from_canonical(c);
		if (!u.x.t.is_finite() || !u.y.t.is_finite()) continue;
		int at_u = evaluate_diagram(d, u);
		for (int k = 1; k <= 3 && cont; ++k) {
			Rational eps(1, 128 << k);
			StripPoint uk{ExactCoord(u.x.n, ExtRat(u.x.t.q + eps)),
			              ExactCoord(u.y.n, ExtRat(u.y.t.q - eps))};
			if (!in_interior(uk)) continue;
			cont = cont && evaluate_diagram(d, uk) == at_u;
		}
	}
	r.items.push_back(item("evaluation right-continuous", cont));

	r.items.push_back(item("class admissible", is_admissible(class_of_diagram(d).fn)));

	// beta0 of the presented J-object equals the multiplicity function
	IntStripFunction mult_fn = class_of_diagram(d).fn;
	r.items.push_back(item("beta0 equals multiplicities", betti0(from_diagram(d)) == mult_fn));
}

} // namespace

CheckReport run_checks(const SimplicialFunction& f) {
	CheckReport r;
	// lower-star order is a filtration
	bool filt = true;
	{
		auto order = lower_star_order(f);
		std::vector<char> seen(f.simplices.size(), 0);
		for (int s : order) {
			const auto& verts = f.verts(s);
			if (verts.size() > 1)
				for (size_t drop = 0; drop < verts.size() && filt; ++drop) {
					std::vector<int> face;
					for (size_t i = 0; i < verts.size(); ++i)
						if (i != drop) face.push_back(verts[i]);
					filt = filt && seen[f.simplex_index(face)];
				}
			seen[s] = 1;
		}
	}
	r.items.push_back(item("lower-star order is a filtration", filt));

	// Euler characteristic consistency
	{
		Subcomplex none(f.simplices.size(), 0);
		auto dims = relative_cohomology_dims(f, none);
		int chi_coh = 0, sign = 1;
		for (int d : dims) { chi_coh += sign * d; sign = -sign; }
		int chi_cells = 0;
		for (const auto& s : f.simplices) chi_cells += s.size() % 2 == 1 ? 1 : -1;
		r.items.push_back(item("Euler characteristic consistent", chi_coh == chi_cells));
	}

	Diagram d = diagram_of(f);
	if (f.dim() <= 1) {
		bool agree = false;
		std::string detail;
		try {
			agree = d == diagram_via_sampling(f);
		} catch (const error& e) {
			detail = e.what();
		}
		r.items.push_back(item("sampling pipeline agrees", agree, detail));
	}
	append_diagram_checks(r, d);
	return r;
}

CheckReport run_checks(const Diagram& d) {
	CheckReport r;
	append_diagram_checks(r, d);
	return r;
}

std::string report_json(const CheckReport& r) {
	nlohmann::json items = nlohmann::json::array();
	for (const auto& i : r.items) {
		nlohmann::json ij{{"name", i.name}, {"pass", i.pass}};
		if (!i.detail.empty()) ij["detail"] = i.detail;
		items.push_back(ij);
	}
	return nlohmann::json{{"ok", r.ok()}, {"checks", items}}.dump();
}

std::string report_text(const CheckReport& r) {
	std::string out;
	for (const auto& i : r.items) {
		out += i.pass ? "pass  " : "FAIL  ";
		out += i.name;
		if (!i.detail.empty()) out += "  (" + i.detail + ")";
		out += "\n";
	}
	return out;
}

} // namespace sheafline
