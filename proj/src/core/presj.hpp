#pragma once

#include "core/dcat.hpp"
#include "core/epd.hpp"

namespace sheafline {

// A J-presentable functor F = coker(h(delta)) for delta: Q -> P.
struct PresentedFunctor {
	DcatObject Q, P;
	DcatMorphism delta;
};

PresentedFunctor presented(const DcatObject& Q, const DcatObject& P, const DcatMorphism& delta);
PresentedFunctor from_object(const DcatObject& D); // Q = 0
PresentedFunctor from_diagram(const Diagram& D);

int dim_at(const PresentedFunctor& F, const StripPoint& u);

// Finitely supported integer function on interior points, the common value
// type of Betti functions, Euler functions and Grothendieck classes.
struct IntStripFunction {
	std::map<CanonicalPoint, int, CanonicalPointLess> terms;
	int at(const CanonicalPoint& c) const {
		auto it = terms.find(c);
		return it == terms.end() ? 0 : it->second;
	}
	void set(const CanonicalPoint& c, int v) {
		if (v) terms[c] = v;
		else terms.erase(c);
	}
};

bool operator==(const IntStripFunction& a, const IntStripFunction& b);
IntStripFunction add(const IntStripFunction& a, const IntStripFunction& b);
IntStripFunction neg(const IntStripFunction& a);
IntStripFunction precompose_T(const IntStripFunction& a, int k); // u -> a(T^k u)

// beta^0 from the presentation: multiplicities of P minus the rank of the
// label-diagonal part of delta.
IntStripFunction betti0(const PresentedFunctor& F);

// Equivariant projective resolution ... -> P_1 -> P_0 (-> F): P_0 = P,
// P_1 = Q, P_2 = shift(cone(delta), -1), and P_{k+3} = shift(P_k, -1) with
// differentials repeating up to sign.
struct EquivariantResolution {
	std::vector<DcatObject> terms;   // P_0 .. P_depth
	std::vector<DcatMorphism> diffs; // diffs[k]: P_{k+1} -> P_k
};
EquivariantResolution equivariant_resolution(const PresentedFunctor& F, int depth);

// n-th Betti function: Ext^n(F, S_u) dimensions via the Nat(P_., S_u) complexes.
IntStripFunction betti(const PresentedFunctor& F, int n);

// Euler function restricted to the canonical window (the labels of P_0..P_2
// and their T^{-1}-images); euler_at evaluates the full alternating sum at
// any interior point (the function is eventually T-antiperiodic downwards).
IntStripFunction euler(const PresentedFunctor& F);
int euler_at(const PresentedFunctor& F, const StripPoint& u);

// The domain of the projective cover, one block per unit of beta^0, plus the
// essential epimorphism's P-level matrix solved by linear lifting.
struct ProjectiveCover {
	DcatObject domain;
	DcatMorphism p_map; // domain -> F.P, covering F
};
ProjectiveCover projective_cover(const PresentedFunctor& F);

// A morphism of presented functors, specified on P-parts; the Q-level lift is
// solved by linear algebra (NotAMorphism when none exists).
struct PresMorphism {
	PresentedFunctor src, dst;
	DcatMorphism p_map;
	DcatMorphism q_map;
};
PresMorphism make_morphism(const PresentedFunctor& src, const PresentedFunctor& dst,
                           const DcatMorphism& p_map);

// Induced map on pointwise cokernels.
Mat eval_mor(const PresMorphism& f, const StripPoint& u);

PresentedFunctor cokernel(const PresMorphism& f);

// Kernel via two homotopy-fiber steps; also returns the inclusion into src.
struct KernelData {
	PresentedFunctor ker;
	PresMorphism incl;
};
KernelData kernel(const PresMorphism& f);

// check f (mono), g (epi) with im f = ker g pointwise on the sample grid
bool exact_at_grid(const PresMorphism& inc, const PresMorphism& prj);

// Horseshoe: the middle equivariant resolution of G for a short exact
// sequence F -> G -> H, with degreewise split rows Q_k = P_k (+) R_k.
struct HorseshoeData {
	EquivariantResolution middle;
	std::vector<int> left_sizes; // summand count of P_k inside Q_k (prefix)
};
HorseshoeData horseshoe(const PresMorphism& inc, const PresMorphism& prj, int depth);

} // namespace sheafline
