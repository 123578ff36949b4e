#pragma once

#include <optional>
#include <vector>

#include "core/fp.hpp"
#include "core/strip.hpp"

namespace sheafline {

// Stratification of the real line by finitely many rational cuts.  Stratum
// indices 0..2k alternate: even = open interval, odd = the point cuts[(s-1)/2];
// stratum 0 is (-inf, cuts[0]) and stratum 2k is (cuts[k-1], +inf).
struct Stratification {
	std::vector<Rational> cuts; // sorted, distinct
	int count() const { return 2 * (int)cuts.size() + 1; }
	bool is_point(int s) const { return s % 2 == 1; }
	int cut_index(const Rational& v) const; // -1 when absent
};

// Stratum range <-> interval of the value line.
struct StratumRange {
	int a = 0, b = 0; // inclusive
};
CanonicalPoint range_to_interval(const Stratification& st, const StratumRange& r, int deg);
StratumRange interval_to_range(const Stratification& st, const CanonicalPoint& c);

// A constructible sheaf on the stratified line as a zigzag representation:
// one space per stratum and a generization map from every point stratum to
// each of its two open neighbours.
struct Rep {
	int p = 2;
	std::vector<int> dim;
	std::vector<Mat> lmap, rmap; // per cut index: V_{2k+1} -> W_{2k} and -> W_{2k+2}

	int strata() const { return (int)dim.size(); }
	int total_dim() const;
	bool is_zero() const { return total_dim() == 0; }
};

Rep zero_rep(const Stratification& st, int p);
Rep interval_rep(const Stratification& st, const StratumRange& r, int p);
Rep direct_sum(const std::vector<const Rep*>& parts, const Stratification& st, int p);

// A homomorphism of representations: one matrix per stratum commuting with
// the generization maps.
using RepHom = std::vector<Mat>;

RepHom rep_hom_zero(const Rep& src, const Rep& dst);
RepHom rep_hom_id(const Rep& a);
RepHom compose(const Rep& a, const Rep& b, const Rep& c, const RepHom& g, const RepHom& f); // g.f
RepHom add(const RepHom& f, const RepHom& g);
RepHom scale_hom(const RepHom& f, int c);
bool is_zero(const RepHom& f);
bool hom_commutes(const Rep& src, const Rep& dst, const RepHom& f);

// Basis of the space of representation homomorphisms src -> dst.
std::vector<RepHom> hom_space(const Rep& src, const Rep& dst);

// Flat coordinates of a rep hom (fixed layout: stratum-major, row-major).
int rep_hom_len(const Rep& src, const Rep& dst);
std::vector<int> vec_rep_hom(const Rep& src, const Rep& dst, const RepHom& f);
RepHom unvec_rep_hom(const Rep& src, const Rep& dst, const std::vector<int>& v);

// Explicit interval decomposition: ranges plus the inclusion of each interval
// summand expressed in the coordinates of the original representation.
struct IntervalSummand {
	StratumRange range;
	RepHom incl; // interval_rep(range) -> M
};
std::vector<IntervalSummand> split_intervals(const Stratification& st, const Rep& M);

// Test oracle: multiplicity of the interval summand on `r` via generalized
// rank counts (limit-to-colimit ranks over restricted ranges).
int interval_multiplicity_by_rank(const Stratification& st, const Rep& M, const StratumRange& r);

// --- bounded complexes of representations over a fixed degree window ---

// Terms cover degrees window_lo .. window_lo + terms.size() - 1; boundary
// entries are zero representations.
struct RepComplex {
	int window_lo = 0;
	std::vector<Rep> terms;
	std::vector<RepHom> diff; // diff[i]: terms[i] -> terms[i+1]

	int size() const { return (int)terms.size(); }
	const Rep& term(int i) const { return terms[i]; }
};

void check_complex(const Stratification& st, const RepComplex& C);

// Chain map between complexes over the same window.
using ChainMapVec = std::vector<RepHom>; // comp[i]: X.terms[i] -> Y.terms[i]

ChainMapVec chain_map_zero(const RepComplex& X, const RepComplex& Y);
bool chain_commutes(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f);
ChainMapVec compose_chain(const RepComplex& X, const RepComplex& Y, const RepComplex& Z,
                          const ChainMapVec& g, const ChainMapVec& f);
ChainMapVec add_chain(const ChainMapVec& f, const ChainMapVec& g);
ChainMapVec scale_chain(const ChainMapVec& f, int c);
bool chain_is_zero(const ChainMapVec& f);

// Flattened coordinates of chain maps X -> Y (fixed layout shared by all
// helpers below).
std::vector<int> vec_chain(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f);
ChainMapVec unvec_chain(const RepComplex& X, const RepComplex& Y, const std::vector<int>& v);
int chain_vec_len(const RepComplex& X, const RepComplex& Y);

// Basis of the chain-map space and of its subspace of null-homotopic maps.
std::vector<ChainMapVec> chain_map_space(const RepComplex& X, const RepComplex& Y);
RowSpace null_homotopic_space(const RepComplex& X, const RepComplex& Y);

// dim Hom_{K}(X, Y): chain maps modulo homotopy.
int hom_dim_mod_homotopy(const RepComplex& X, const RepComplex& Y);

// Whether f is homotopic to g.
bool homotopic(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f, const ChainMapVec& g);

// Mapping cone of f: X -> Y with the convention d = [[-d_X, 0], [f, d_Y]]
// (cone term in degree n is X^{n+1} (+) Y^n), together with the inclusion of Y
// and the projection onto the X-part.
struct ConeData {
	RepComplex cone;
	ChainMapVec include_target;  // Y -> cone
	// projection components cone^n -> X^{n+1}; not a chain map towards X
	// itself, callers compose with the degree bookkeeping they need
	std::vector<RepHom> project_source;
};
ConeData mapping_cone(const Stratification& st, const RepComplex& X, const RepComplex& Y,
                      const ChainMapVec& f);

// Cohomology of C in window degree slot i, with an explicit section: the
// returned summands' columns live in the coordinates of C.terms[i].
struct CohomologySlot {
	Rep H;
	// lift: H-basis vectors as columns inside C.terms[i] (per stratum)
	std::vector<Mat> lift;
	// project: coordinates of the H-class of a cycle (per stratum), defined on
	// all of the ambient space (arbitrary on a complement of the cycles)
	std::vector<Mat> project;
};
CohomologySlot cohomology_slot(const Stratification& st, const RepComplex& C, int i);

} // namespace sheafline
