#include "core/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/errors.hpp"

namespace sheafline {

int SimplicialFunction::dim() const {
	int d = -1;
	for (const auto& s : simplices) d = std::max(d, (int)s.size() - 1);
	return d;
}

Rational SimplicialFunction::lower_value(int s) const {
	const auto& v = simplices[s];
	Rational m = values[v[0]];
	for (int x : v)
		if (values[x] > m) m = values[x];
	return m;
}

Rational SimplicialFunction::upper_value(int s) const {
	const auto& v = simplices[s];
	Rational m = values[v[0]];
	for (int x : v)
		if (values[x] < m) m = values[x];
	return m;
}

int SimplicialFunction::simplex_index(const std::vector<int>& verts) const {
	auto it = std::lower_bound(simplices.begin(), simplices.end(), verts,
	                           [](const std::vector<int>& a, const std::vector<int>& b) {
		                           if (a.size() != b.size()) return a.size() < b.size();
		                           return a < b;
	                           });
	if (it == simplices.end() || *it != verts) return -1;
	return (int)(it - simplices.begin());
}

static void sort_simplices(std::vector<std::vector<int>>& ss) {
	std::sort(ss.begin(), ss.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
		if (a.size() != b.size()) return a.size() < b.size();
		return a < b;
	});
	ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
}

SimplicialFunction make_complex(int p,
                                const std::vector<std::pair<std::string, Rational>>& vertex_values,
                                const std::vector<std::vector<std::string>>& simplices) {
	if (!is_prime(p)) fail(errc::schema_error, "coefficient characteristic must be prime");
	SimplicialFunction K;
	K.p = p;
	std::map<std::string, int> id;
	for (const auto& [name, val] : vertex_values) {
		if (id.count(name)) fail(errc::schema_error, "duplicate vertex " + name);
		id[name] = (int)K.vertex_names.size();
		K.vertex_names.push_back(name);
		K.values.push_back(val);
	}
	std::set<std::vector<int>> all;
	for (int v = 0; v < (int)K.vertex_names.size(); ++v) all.insert({v});
	for (const auto& s : simplices) {
		std::vector<int> verts;
		for (const auto& name : s) {
			auto it = id.find(name);
			if (it == id.end()) fail(errc::schema_error, "simplex uses unknown vertex " + name);
			verts.push_back(it->second);
		}
		std::sort(verts.begin(), verts.end());
		if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
			fail(errc::schema_error, "simplex with repeated vertex");
		// close under faces
		int m = (int)verts.size();
		for (unsigned mask = 1; mask < (1u << m); ++mask) {
			std::vector<int> face;
			for (int i = 0; i < m; ++i)
				if (mask & (1u << i)) face.push_back(verts[i]);
			all.insert(face);
		}
	}
	K.simplices.assign(all.begin(), all.end());
	sort_simplices(K.simplices);
	return K;
}

void check_subcomplex(const SimplicialFunction& K, const Subcomplex& A) {
	if (A.size() != K.simplices.size()) fail(errc::invalid_pair, "subcomplex flags have wrong length");
	for (size_t s = 0; s < K.simplices.size(); ++s) {
		if (!A[s]) continue;
		const auto& verts = K.simplices[s];
		if (verts.size() <= 1) continue;
		for (size_t drop = 0; drop < verts.size(); ++drop) {
			std::vector<int> face;
			for (size_t i = 0; i < verts.size(); ++i)
				if (i != drop) face.push_back(verts[i]);
			int fi = K.simplex_index(face);
			require(fi >= 0, "complex not face-closed");
			if (!A[fi]) fail(errc::invalid_pair, "A is not a subcomplex");
		}
	}
}

std::vector<int> relative_cohomology_dims(const SimplicialFunction& K, const Subcomplex& A) {
	check_subcomplex(K, A);
	int d = K.dim();
	if (d < 0) return {};
	// relative k-simplices (not in A), indexed per degree
	std::vector<std::vector<int>> rel(d + 1);
	std::vector<int> pos(K.simplices.size(), -1);
	for (size_t s = 0; s < K.simplices.size(); ++s) {
		if (A[s]) continue;
		int k = (int)K.simplices[s].size() - 1;
		pos[s] = (int)rel[k].size();
		rel[k].push_back((int)s);
	}
	// coboundary ranks
	std::vector<int> rk(d + 1, 0);
	for (int k = 0; k < d; ++k) {
		if (rel[k].empty() || rel[k + 1].empty()) continue;
		Mat delta((int)rel[k + 1].size(), (int)rel[k].size(), K.p);
		for (size_t r = 0; r < rel[k + 1].size(); ++r) {
			const auto& verts = K.simplices[rel[k + 1][r]];
			int sign = 1;
			for (size_t drop = 0; drop < verts.size(); ++drop) {
				std::vector<int> face;
				for (size_t i = 0; i < verts.size(); ++i)
					if (i != drop) face.push_back(verts[i]);
				int fi = K.simplex_index(face);
				if (fi >= 0 && pos[fi] >= 0)
					delta.at((int)r, pos[fi]) = fp_normalize(sign, K.p);
				sign = -sign;
			}
		}
		rk[k] = rank(delta);
	}
	std::vector<int> dims(d + 1, 0);
	for (int k = 0; k <= d; ++k) {
		int above = k < d ? rk[k] : 0;
		int below = k > 0 ? rk[k - 1] : 0;
		dims[k] = (int)rel[k].size() - above - below;
	}
	while (!dims.empty() && dims.back() == 0) dims.pop_back();
	return dims;
}

std::vector<int> lower_star_order(const SimplicialFunction& f) {
	std::vector<int> order(f.simplices.size());
	std::iota(order.begin(), order.end(), 0);
	std::vector<Rational> lv(f.simplices.size());
	for (size_t s = 0; s < f.simplices.size(); ++s) lv[s] = f.lower_value((int)s);
	auto name_key = [&](int s) {
		std::vector<std::string> names;
		for (int v : f.simplices[s]) names.push_back(f.vertex_names[v]);
		return names;
	};
	std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
		int c = cmp(lv[a], lv[b]);
		if (c) return c < 0;
		if (f.simplices[a].size() != f.simplices[b].size())
			return f.simplices[a].size() < f.simplices[b].size();
		return name_key(a) < name_key(b);
	});
	return order;
}

bool OpenInterval::contains(const Rational& v) const {
	ExtRat e(v);
	return cmp(lo, e) < 0 && cmp(e, hi) < 0;
}

bool CoreInterval::contains(const Rational& v) const {
	ExtRat e(v);
	return cmp(lo, e) <= 0 && cmp(e, hi) <= 0;
}

namespace {

// Subdivided graph model: vertex values plus edges between vertex ids.
struct Graph {
	std::vector<Rational> val;
	std::vector<std::pair<int, int>> edges;
};

struct UnionFind {
	std::vector<int> parent;
	explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x) {
		while (parent[x] != x) x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(int a, int b) { parent[find(a)] = find(b); }
};

// dims (H^0, H^1) of the pair (full graph restricted to U, restricted to C).
// For graphs this is exact over any field: relative H^0 counts components of
// the big model disjoint from the small one, and H^1 follows from the relative
// Euler characteristic.
std::pair<int, int> graph_pair_dims(const Graph& g, const std::vector<char>& inK,
                                    const std::vector<char>& inA,
                                    const std::vector<char>& edgeK, const std::vector<char>& edgeA) {
	int n = (int)g.val.size();
	UnionFind uf(n);
	for (size_t e = 0; e < g.edges.size(); ++e)
		if (edgeK[e]) uf.unite(g.edges[e].first, g.edges[e].second);
	std::vector<char> touched(n, 0);
	for (int v = 0; v < n; ++v)
		if (inA[v]) touched[uf.find(v)] = 1;
	std::set<int> comps;
	int clean = 0;
	for (int v = 0; v < n; ++v) {
		if (!inK[v]) continue;
		int r = uf.find(v);
		if (comps.insert(r).second && !touched[r]) ++clean;
	}
	int vrel = 0, erel = 0;
	for (int v = 0; v < n; ++v) vrel += inK[v] && !inA[v];
	for (size_t e = 0; e < g.edges.size(); ++e) erel += edgeK[e] && !edgeA[e];
	int h0 = clean;
	int h1 = h0 - vrel + erel;
	require(h1 >= 0, "negative relative H^1");
	return {h0, h1};
}

} // namespace

int interlevel_pair_dims(const SimplicialFunction& f, const OpenInterval& I,
                         const CoreInterval& core, int n) {
	if (f.dim() > 1) fail(errc::unsupported_dimension, "interlevel oracle handles graphs only");
	if (n < 0 || n > 1) return 0;
	if (f.simplices.empty()) return 0;

	// boundary levels of I and of C = I \ core, plus a witness level inside
	// every region between them so no open piece is modelled by nothing
	std::vector<Rational> cuts;
	for (const ExtRat* e : {&I.lo, &I.hi, &core.lo, &core.hi})
		if (e->is_finite()) cuts.push_back(e->q);
	std::sort(cuts.begin(), cuts.end());
	cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
	if (!cuts.empty()) {
		std::vector<Rational> aug = cuts;
		aug.push_back(cuts.front() - Rational(1));
		aug.push_back(cuts.back() + Rational(1));
		for (size_t i = 0; i + 1 < cuts.size(); ++i) aug.push_back(midpoint(cuts[i], cuts[i + 1]));
		std::sort(aug.begin(), aug.end());
		aug.erase(std::unique(aug.begin(), aug.end()), aug.end());
		cuts = std::move(aug);
	}

	Graph g;
	g.val = f.values;
	for (const auto& s : f.simplices) {
		if (s.size() != 2) continue;
		Rational a = f.values[s[0]], b = f.values[s[1]];
		int lo = s[0], hi = s[1];
		if (a > b) { std::swap(a, b); std::swap(lo, hi); }
		int prev = lo;
		for (const auto& c : cuts) {
			if (c > a && c < b) {
				int nv = (int)g.val.size();
				g.val.push_back(c);
				g.edges.push_back({prev, nv});
				prev = nv;
			}
		}
		g.edges.push_back({prev, hi});
	}

	auto in_C = [&](const Rational& v) {
		return I.contains(v) && !core.contains(v);
	};
	int nverts = (int)g.val.size();
	std::vector<char> inK(nverts), inA(nverts);
	for (int v = 0; v < nverts; ++v) {
		inK[v] = I.contains(g.val[v]);
		inA[v] = in_C(g.val[v]);
	}
	std::vector<char> edgeK(g.edges.size()), edgeA(g.edges.size());
	for (size_t e = 0; e < g.edges.size(); ++e) {
		edgeK[e] = inK[g.edges[e].first] && inK[g.edges[e].second];
		edgeA[e] = inA[g.edges[e].first] && inA[g.edges[e].second];
	}
	auto [h0, h1] = graph_pair_dims(g, inK, inA, edgeK, edgeA);
	return n == 0 ? h0 : h1;
}

} // namespace sheafline
