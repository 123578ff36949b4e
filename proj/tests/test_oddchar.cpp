#include <doctest.h>

#include "core/k0.hpp"
#include "core/presj.hpp"
#include "fixtures.hpp"

using namespace sheafline;
using namespace sheafline::fixtures;

namespace {

std::vector<CanonicalPoint> pool() {
	std::vector<CanonicalPoint> out;
	for (int deg : {0, 1})
		for (auto k : {IntervalKind::CC, IntervalKind::CO, IntervalKind::OC, IntervalKind::OO})
			for (long long lo = 0; lo <= 2; ++lo)
				for (long long hi = lo; hi <= 3; ++hi) {
					CanonicalPoint c{k, ExtRat(lo), ExtRat(hi), deg};
					try {
						validate(c);
					} catch (const error&) {
						continue;
					}
					out.push_back(c);
				}
	return out;
}

PresentedFunctor random_functor(Rng& rng, int p) {
	static std::vector<CanonicalPoint> pts = pool();
	DcatObject Q, P;
	Q.p = P.p = p;
	for (int i = 0; i <= rng.uniform(2); ++i) Q.summands.push_back(pts[rng.uniform((int)pts.size())]);
	for (int i = 0; i <= rng.uniform(2); ++i) P.summands.push_back(pts[rng.uniform((int)pts.size())]);
	DcatMorphism d = zero_morphism(Q, P);
	for (auto [j, i] : hom_slots(Q, P)) d.entries.at(j, i) = rng.uniform(p);
	return presented(Q, P, d);
}

} // namespace

TEST_CASE("hood diagrams at odd characteristic") {
	for (int p : {3, 5}) {
		Diagram df = diagram_of(hood_f(0, 1, 2, p));
		CHECK(df.points.size() == 2);
		CHECK(df.points.at(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0)) == 1);
		CHECK(df.points.at(interval_point(IntervalKind::CO, ExtRat(0), ExtRat(1), 0)) == 1);
		auto X1 = make_complex(p, {{"1", 0}, {"2", 1}, {"3", 0}, {"5", 2}},
		                       {{"1", "2"}, {"2", "3"}, {"1", "5"}, {"2", "5"}, {"3", "5"}});
		CHECK(diagram_of(X1) == diagram_via_sampling(X1));
	}
}

TEST_CASE("resolutions, kernels and Euler additivity at p = 3") {
	int p = 3;
	Rng rng(333);
	int kernels = 0;
	for (int trial = 0; trial < 15; ++trial) {
		PresentedFunctor F = random_functor(rng, p);
		EquivariantResolution res = equivariant_resolution(F, 5);
		std::vector<const DcatObject*> objs;
		for (const auto& t : res.terms) objs.push_back(&t);
		for (const StripPoint& u : sample_grid(objs)) {
			for (size_t k = 0; k + 1 < res.diffs.size(); ++k) {
				Mat a = h_eval_mor(res.diffs[k + 1], u);
				Mat b = h_eval_mor(res.diffs[k], u);
				CHECK(mul(b, a).is_zero());
				CHECK(rank(a) + rank(b) == h_eval(res.terms[k + 1], u));
			}
		}
		for (int n = 1; n <= 2; ++n) CHECK(betti(F, n + 3) == precompose_T(betti(F, n), 1));

		PresentedFunctor G = random_functor(rng, p);
		DcatMorphism pm = zero_morphism(F.P, G.P);
		for (auto [j, i] : hom_slots(F.P, G.P)) pm.entries.at(j, i) = rng.uniform(p);
		PresMorphism f;
		try {
			f = make_morphism(F, G, pm);
		} catch (const error&) {
			continue;
		}
		KernelData ker = kernel(f);
		PresentedFunctor img = cokernel(ker.incl);
		for (const StripPoint& u : sample_grid({&F.P, &F.Q, &G.P, &G.Q, &ker.ker.P, &ker.ker.Q})) {
			Mat m = eval_mor(f, u);
			CHECK(dim_at(ker.ker, u) == dim_at(F, u) - rank(m));
			CHECK(euler_at(F, u) == euler_at(ker.ker, u) + euler_at(img, u));
		}
		++kernels;
	}
	CHECK(kernels > 5);
}
