#pragma once

#include <cstdint>

#include "core/homology.hpp"

namespace sheafline::fixtures {

// Y = |5 * C4|: the simplicial cone over the cyclic graph on {1,2,3,4},
// with g(1) = g(3) = g(4) = a, g(2) = b, g(5) = c.
inline SimplicialFunction hood_g(Rational a = 0, Rational b = 1, Rational c = 2, int p = 2) {
	return make_complex(p,
	                    {{"1", a}, {"2", b}, {"3", a}, {"4", a}, {"5", c}},
	                    {{"5", "1", "2"}, {"5", "2", "3"}, {"5", "3", "4"}, {"5", "4", "1"}});
}

// X = |A|: the full subcomplex of 5 * C4 spanned by {1, 2, 3, 5}.
inline SimplicialFunction hood_f(Rational a = 0, Rational b = 1, Rational c = 2, int p = 2) {
	return make_complex(p,
	                    {{"1", a}, {"2", b}, {"3", a}, {"5", c}},
	                    {{"5", "1", "2"}, {"5", "2", "3"}, {"1", "2"}, {"2", "3"}});
}

inline SimplicialFunction circle4(Rational v1, Rational v2, Rational v3, Rational v4, int p = 2) {
	return make_complex(p,
	                    {{"1", v1}, {"2", v2}, {"3", v3}, {"4", v4}},
	                    {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

// circle with a single min and a single max
inline SimplicialFunction circle3(int p = 2) {
	return make_complex(p, {{"a", 0}, {"b", 1}, {"c", Rational(1, 2)}},
	                    {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// deterministic xorshift for hand-rolled property tests
struct Rng {
	uint64_t s;
	explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
	uint64_t next() {
		s ^= s << 13;
		s ^= s >> 7;
		s ^= s << 17;
		return s;
	}
	int uniform(int n) { return (int)(next() % (uint64_t)n); }
};

// random graph on <= max_v vertices with random small rational values
inline SimplicialFunction random_graph(Rng& rng, int max_v = 12, int p = 2) {
	int n = 1 + rng.uniform(max_v);
	std::vector<std::pair<std::string, Rational>> verts;
	for (int i = 0; i < n; ++i) {
		Rational v(rng.uniform(7) - 2, 1 + rng.uniform(3));
		verts.push_back({"v" + std::to_string(i), v});
	}
	std::vector<std::vector<std::string>> simplices;
	for (int i = 0; i < n; ++i) simplices.push_back({"v" + std::to_string(i)});
	int edges = rng.uniform(2 * n + 1);
	for (int e = 0; e < edges; ++e) {
		int a = rng.uniform(n), b = rng.uniform(n);
		if (a == b) continue;
		simplices.push_back({"v" + std::to_string(a), "v" + std::to_string(b)});
	}
	return make_complex(p, verts, simplices);
}

} // namespace sheafline::fixtures
