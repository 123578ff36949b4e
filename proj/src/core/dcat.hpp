#pragma once

#include <map>
#include <vector>

#include "core/zigzag.hpp"

namespace sheafline {

// A formal finite direct sum of indecomposables iota(u).
struct DcatObject {
	int p = 2;
	std::vector<CanonicalPoint> summands;
	int size() const { return (int)summands.size(); }
};

bool operator==(const DcatObject& a, const DcatObject& b);

// A morphism as a scalar matrix on the allowed slots: entry (j, i) may be
// nonzero only when Hom(iota(src_i), iota(dst_j)) is nonzero, and that Hom
// space is at most one-dimensional.
struct DcatMorphism {
	DcatObject src, dst;
	Mat entries; // dst.size() x src.size()
};

bool slot_allowed(const CanonicalPoint& from, const CanonicalPoint& to);
void validate(const DcatMorphism& f); // composition_error on shape/slot violations

int hom_dim(const DcatObject& A, const DcatObject& B);
std::vector<std::pair<int, int>> hom_slots(const DcatObject& A, const DcatObject& B); // (j, i)

DcatMorphism zero_morphism(const DcatObject& A, const DcatObject& B);
DcatMorphism identity_morphism(const DcatObject& A);
DcatMorphism compose(const DcatMorphism& g, const DcatMorphism& f); // g . f
DcatMorphism add(const DcatMorphism& f, const DcatMorphism& g);
DcatMorphism scale(const DcatMorphism& f, int c);

// The suspension: shift(A, k) applies T^k to every summand (iota.T = [1].iota).
DcatObject shift(const DcatObject& A, int k);
DcatMorphism shift(const DcatMorphism& f, int k);

DcatObject direct_sum(const DcatObject& A, const DcatObject& B);

// Pointwise evaluation of h_gamma: indices of summands whose block support
// contains u, its count, and the induced matrix of a morphism.
std::vector<int> h_basis(const DcatObject& A, const StripPoint& u);
int h_eval(const DcatObject& A, const StripPoint& u);
Mat h_eval_mor(const DcatMorphism& f, const StripPoint& u);

// --- strict zigzag models ---

// Shared environment for one computation: a stratification refining all the
// finite interval endpoints involved and a degree window enclosing all
// summand degrees with room for cones and shifts.
struct DcatContext {
	int p = 2;
	Stratification strat;
	int window_lo = 0, window_len = 0;

	DcatContext(int p, const std::vector<const DcatObject*>& objs);

	RepComplex zero_complex() const;

	// the standard two-term projective resolution of an interval module,
	// placed at the summand's degree, with the covering map onto the module
	struct BlockData {
		RepComplex C;
		Rep module;
		RepHom cover; // P0 -> module
	};
	BlockData block_data(const CanonicalPoint& pt) const;
	RepComplex block_complex(const CanonicalPoint& pt) const;

	// canonical generator of Hom(iota(from), iota(to)) as a chain map between
	// the standard block complexes (cached together with the null-homotopic
	// subspace certifying the one-dimensionality of the class space)
	struct GenData {
		ChainMapVec gen;
		std::vector<int> gen_vec; // reduced coordinates of the generator
		RowSpace boundaries;
		GenData() : boundaries(0, 2) {}
	};
	const GenData& generator(const CanonicalPoint& from, const CanonicalPoint& to) const;

	struct PairLess {
		bool operator()(const std::pair<CanonicalPoint, CanonicalPoint>& a,
		                const std::pair<CanonicalPoint, CanonicalPoint>& b) const {
			if (int c = cmp(a.first, b.first)) return c < 0;
			return cmp(a.second, b.second) < 0;
		}
	};
	mutable std::map<std::pair<CanonicalPoint, CanonicalPoint>, GenData, PairLess> gen_cache;
};

// Strict model of an object: the total complex plus per-summand inclusion and
// projection chain maps (the model is a literal direct sum of block complexes).
struct StrictModel {
	RepComplex C;
	std::vector<RepComplex> blocks;
	std::vector<ChainMapVec> incl; // block -> C
	std::vector<ChainMapVec> proj; // C -> block
};

StrictModel to_rep(const DcatContext& ctx, const DcatObject& A);

// Chain-map realization of a morphism between the strict models.
ChainMapVec strictify(const DcatContext& ctx, const DcatMorphism& f, const StrictModel& SA,
                      const StrictModel& SB);

// Interval decomposition of an arbitrary complex of representations.
DcatObject decompose(const DcatContext& ctx, const RepComplex& C);

// Oracle: dim Hom computed as chain maps modulo homotopy between the models.
int hom_dim_strict(const DcatObject& A, const DcatObject& B);

// Mapping cone.  The production route recovers the block multiset from the
// pointwise triangle dimension count by corner inversion, which is exact over
// every prime; the strict-model route below is the chain-level ground truth
// (strictify, cone, cohomology, interval decomposition) and the two are kept
// equal by tests.
DcatObject cone(const DcatMorphism& f);
DcatObject cone_strict_model(const DcatMorphism& f);

// Sample points separating every cell of the block arrangement spanned by the
// given objects (support boundary lines plus their T^{+-1} images).
std::vector<StripPoint> sample_grid(const std::vector<const DcatObject*>& objs);

// Distinguished triangle A -> B -> C -> A[1] around f: the cone object with
// the structural morphisms expressed back in the iota-basis.  The maps are
// pinned by the triangle identities (consecutive composites vanish) together
// with pointwise exactness of the induced block evaluations.
struct ConeTriangle {
	DcatObject cone;
	DcatMorphism to_cone;  // B -> C
	DcatMorphism to_shift; // C -> shift(A, 1)
};
ConeTriangle cone_with_maps(const DcatMorphism& f);

} // namespace sheafline
