#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/fp.hpp"
#include "core/rational.hpp"

namespace sheafline {

// A finite simplicial complex with rational vertex values and a coefficient
// prime.  Simplices are sorted vertex-index lists, face-closed, ordered by
// (dimension, lexicographic vertices).
struct SimplicialFunction {
	int p = 2;
	std::vector<std::string> vertex_names;
	std::vector<Rational> values;
	std::vector<std::vector<int>> simplices;

	int dim() const;
	Rational lower_value(int s) const; // max vertex value of simplex s
	Rational upper_value(int s) const; // min vertex value of simplex s
	int simplex_index(const std::vector<int>& verts) const;
	const std::vector<int>& verts(int s) const { return simplices[s]; }
};

// Build a face-closed complex; `simplices` may omit faces.  Vertex values must
// cover every named vertex; p must be prime.
SimplicialFunction make_complex(int p,
                                const std::vector<std::pair<std::string, Rational>>& vertex_values,
                                const std::vector<std::vector<std::string>>& simplices);

// Subcomplex given by inclusion flags aligned with `simplices`.
using Subcomplex = std::vector<char>;
void check_subcomplex(const SimplicialFunction& K, const Subcomplex& A); // InvalidPair

// Dimensions of H^n(K, A; F_p) via ranks of relative coboundary matrices.
std::vector<int> relative_cohomology_dims(const SimplicialFunction& K, const Subcomplex& A);

// Total order on simplices: ascending max vertex value, faces before cofaces,
// deterministic tie-break by (dimension, lexicographic vertex lists).
std::vector<int> lower_star_order(const SimplicialFunction& f);

// Open interval of the extended value line (both ends open; +-inf allowed).
struct OpenInterval {
	ExtRat lo = ExtRat::minus_inf();
	ExtRat hi = ExtRat::plus_inf();
	bool contains(const Rational& v) const;
};

// Closed interval (ends may be +-inf, so it can be empty, a ray, or everything).
struct CoreInterval {
	ExtRat lo, hi;
	bool contains(const Rational& v) const;
};

// dim H^n(f^-1(I), f^-1(C); F_p) for C = I \ core, computed on the graph
// obtained by subdividing every edge at each endpoint level and modelling the
// open preimages by open-star subcomplexes.  Only complexes of dimension <= 1.
int interlevel_pair_dims(const SimplicialFunction& f, const OpenInterval& I,
                         const CoreInterval& core, int n);

} // namespace sheafline
