#pragma once

#include <map>
#include <vector>

#include "core/homology.hpp"
#include "core/strip.hpp"

namespace sheafline {

enum class PairClass : uint8_t { Ord, Rel, Ext };

// One extended persistence pair.  k is the cohomological degree of the
// corresponding block: for Ord and for Ext pairs with birth <= death this is
// the dimension of the creating simplex; descending classes (Ext with
// birth > death, and all Rel pairs) are recorded one degree lower, which is
// the normalization the sheaf-level dictionary below expects (see
// docs/dictionary.md).
struct RawPair {
	PairClass klass;
	int k = 0;
	Rational birth, death;
};

bool operator==(const RawPair& a, const RawPair& b);

// Extended persistence diagram as a block multiset on the strip.
struct Diagram {
	int p = 2;
	std::map<CanonicalPoint, int, CanonicalPointLess> points;
};

bool operator==(const Diagram& a, const Diagram& b);

// Complete extended persistence pairing of f via one ascending lower-star
// sweep followed by the descending cone sweep.  Zero-persistence Ord/Rel
// pairs carry no block and are not reported.
std::vector<RawPair> extended_persistence(const SimplicialFunction& f);

// Dictionary between raw pairs and block labels:
//   Ord_k (p,q), p < q   ->  (CO, p, q, deg k)
//   Ext_k (p,q), p <= q  ->  (CC, p, q, deg k)
//   Ext_k (p,q), p > q   ->  (OO, q, p, deg k)
//   Rel_k (p,q), p > q   ->  (OC, q, p, deg k)
Diagram pairs_to_diagram(const std::vector<RawPair>& pairs, int p);

// Independent pipeline for graphs: sample dim h(f) on a grid refining the
// critical values and recover multiplicities by rectangle corner counts.
Diagram diagram_via_sampling(const SimplicialFunction& f);

// dim h(f)(u) read off a diagram: the number of blocks whose support contains
// u (counted with multiplicity).  Zero on the boundary of the strip.
int evaluate_diagram(const Diagram& D, const StripPoint& u);

// dim h(f)(u) computed directly through the interlevel oracle (graphs only).
int sampled_dim(const SimplicialFunction& f, const StripPoint& u);

Diagram diagram_of(const SimplicialFunction& f); // pairs_to_diagram . extended_persistence

} // namespace sheafline
