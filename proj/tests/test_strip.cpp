#include <doctest.h>

#include <vector>

#include "core/strip.hpp"

using namespace sheafline;

namespace {

ExactCoord at(long long v) { return ExactCoord::atan_of(ExtRat(v)); }
ExactCoord at(ExtRat v) { return ExactCoord::atan_of(v); }

// points of the hood example with a=0, b=1, c=2
const StripPoint corner_ca{at(2), at(0)};                            // (c-bar, a-bar)
const StripPoint corner_ba{pi_minus(at(1)), at(0)};                  // (pi - b-bar, a-bar)
const StripPoint corner_cb{pi_minus(at(2)), at(1)};                  // (pi - c-bar, b-bar)
const StripPoint corner_bc{pi_minus(at(1)), add_pi(at(2), -2)};      // (pi - b-bar, c-bar - 2pi)

std::vector<StripPoint> rational_grid() {
	std::vector<StripPoint> pts;
	std::vector<ExactCoord> coords;
	for (long long v : {-2, 0, 1, 3}) {
		coords.push_back(at(v));
		coords.push_back(pi_minus(at(v)));
		coords.push_back(neg_pi_minus(at(v)));
	}
	for (const auto& x : coords)
		for (const auto& y : coords) {
			StripPoint u{x, y};
			if (in_strip(u)) pts.push_back(u);
		}
	return pts;
}

} // namespace

TEST_CASE("exact coordinate order and arithmetic") {
	CHECK(cmp(at(0), at(1)) < 0);
	CHECK(cmp(at(ExtRat::minus_inf()), at(-1000)) < 0);
	CHECK(at(ExtRat::plus_inf()) == ExactCoord(1, ExtRat::minus_inf())); // pi/2 normal form
	CHECK(neg(ExactCoord(1, ExtRat::minus_inf())) == ExactCoord(0, ExtRat::minus_inf()));
	CHECK(neg(at(5)) == at(-5));
	CHECK(pi_minus(at(1)) == ExactCoord(1, ExtRat(Rational(-1))));

	// arctan(1) + arctan(2) > 0, arctan(1) + arctan(-3) < 0
	CHECK(sum_cmp(at(1), at(2), 0) > 0);
	CHECK(sum_cmp(at(1), at(-3), 0) < 0);
	CHECK(sum_cmp(at(1), at(-1), 0) == 0);
	// (-pi/2) + (-pi/2) == -pi
	CHECK(sum_cmp(at(ExtRat::minus_inf()), at(ExtRat::minus_inf()), -1) == 0);
	CHECK(sum_cmp(pi_minus(at(0)), at(0), 1) == 0);

	ExactCoord mid = coord_between(at(0), pi_minus(at(1)));
	CHECK(cmp(at(0), mid) < 0);
	CHECK(cmp(mid, pi_minus(at(1))) < 0);
}

TEST_CASE("glide reflection T") {
	CHECK(t_apply(corner_ba, 0) == corner_ba);
	// T(pi - b, a) = (-pi - a, b)
	StripPoint expect{neg_pi_minus(at(0)), at(1)};
	CHECK(t_apply(corner_ba, 1) == expect);
	// T^{-1}(pi - c, b) = (pi - b, c - 2pi), forced by the incidences
	CHECK(t_apply(corner_cb, -1) == corner_bc);

	for (const auto& u : rational_grid()) {
		for (int k : {-3, -2, -1, 0, 1, 2, 3}) {
			CHECK(in_strip(t_apply(u, k)));
			for (int m : {-2, 0, 1, 2})
				CHECK(t_apply(t_apply(u, k), m) == t_apply(u, k + m));
		}
		// T^2 is translation by (-2pi, 2pi)
		StripPoint uu = t_apply(u, 2);
		CHECK(uu.x == add_pi(u.x, -2));
		CHECK(uu.y == add_pi(u.y, 2));
	}
}

TEST_CASE("strip order") {
	for (const auto& u : rational_grid()) CHECK(leq(u, u));
	CHECK(leq(corner_ba, corner_ca));
	CHECK(!leq(corner_ca, corner_ba));
}

TEST_CASE("hom_nonzero") {
	CHECK(hom_nonzero(corner_ba, corner_ca)); // Hom(F_[0,1), F_[0,2]) = F
	for (const auto& u : rational_grid()) {
		if (in_interior(u))
			CHECK(hom_nonzero(u, u));
	}
	// boundary targets and boundary sources vanish
	StripPoint on_l0{at(0), neg_pi_minus(at(0))};
	REQUIRE(in_strip(on_l0));
	REQUIRE(!in_interior(on_l0));
	for (const auto& u : rational_grid()) {
		CHECK(!hom_nonzero(u, on_l0));
		CHECK(!hom_nonzero(on_l0, u));
	}
	// hom_nonzero(u, v) iff u lies in supp B_v = (down v) /\ int(up T^{-1}(v))
	for (const auto& u : rational_grid())
		for (const auto& v : rational_grid()) {
			bool in_supp = leq(u, v) && lt(t_apply(v, -1), u);
			CHECK(hom_nonzero(u, v) == in_supp);
		}
}

TEST_CASE("canonical correspondence on the hood intervals") {
	CanonicalPoint cc = to_canonical(corner_ca);
	CHECK(cc == interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0)); // F_[a,c]
	CanonicalPoint co = to_canonical(corner_bc);
	CHECK(co == interval_point(IntervalKind::CO, ExtRat(1), ExtRat(2), 1)); // F_[b,c)[-1]
	CHECK(to_canonical(corner_ba) == interval_point(IntervalKind::CO, ExtRat(0), ExtRat(1), 0));
}

TEST_CASE("canonical round trip") {
	std::vector<CanonicalPoint> pts;
	std::vector<ExtRat> ends = {ExtRat::minus_inf(), ExtRat(-1), ExtRat(0), ExtRat(Rational(1, 2)),
	                            ExtRat(2), ExtRat::plus_inf()};
	for (int deg : {-1, 0, 1, 2})
		for (auto k : {IntervalKind::CC, IntervalKind::CO, IntervalKind::OC, IntervalKind::OO})
			for (const auto& lo : ends)
				for (const auto& hi : ends) {
					CanonicalPoint c{k, lo, hi, deg};
					try {
						validate(c);
					} catch (const error&) {
						continue;
					}
					pts.push_back(c);
				}
	CHECK(pts.size() > 40);
	for (const auto& c : pts) {
		StripPoint u = from_canonical(c);
		CHECK(in_interior(u));
		CHECK(to_canonical(u) == c);
	}
	// diagonal point round trip (kind CC with lo = hi)
	CanonicalPoint diag = interval_point(IntervalKind::CC, ExtRat(3), ExtRat(3), 0);
	CHECK(to_canonical(from_canonical(diag)) == diag);
	// from_canonical . to_canonical is the identity on interior grid points
	for (const auto& u : rational_grid())
		if (in_interior(u)) CHECK(from_canonical(to_canonical(u)) == u);
}

TEST_CASE("boundary points carry no indecomposable") {
	StripPoint on_l1{at(0), pi_minus(at(0))};
	CHECK_THROWS_AS((void)to_canonical(on_l1), error);
}

TEST_CASE("sheaf names") {
	CHECK(sheaf_name(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0)) == "F_[0,2]");
	CHECK(sheaf_name(interval_point(IntervalKind::CO, ExtRat(1), ExtRat(2), 1)) == "F_[1,2)[-1]");
	CHECK(sheaf_name(interval_point(IntervalKind::OO, ExtRat::minus_inf(), ExtRat::plus_inf(), 0)) ==
	      "F_(-inf,+inf)");
}

TEST_CASE("rho on the hood corner") {
	ClosedPair r = rho(corner_ca);
	REQUIRE(r.rho0.has_value());
	CHECK(*r.rho0 == ValueInterval{ExtRat(0), ExtRat(2), true, true});
	CHECK(r.rho1.empty());
	REQUIRE(r.z().has_value());
	CHECK(*r.z() == ValueInterval{ExtRat(0), ExtRat(2), true, true});
}

TEST_CASE("rho at points of q and of D /\\ boundary") {
	// on the diagonal: rho(t) = (q /\ up(t), dq /\ up(t)) per the explicit formula
	StripPoint diag{at(1), at(1)};
	ClosedPair r = rho(diag);
	REQUIRE(r.rho0.has_value());
	CHECK(*r.rho0 == ValueInterval{ExtRat(1), ExtRat(1), true, true});
	CHECK(r.rho1.empty());

	// at a point of D on l_0 the two components agree
	StripPoint bd{at(0), neg_pi_minus(at(0))};
	ClosedPair rb = rho(bd);
	REQUIRE(rb.rho0.has_value());
	REQUIRE(rb.rho1.size() == 1);
	CHECK(*rb.rho0 == rb.rho1[0]);
	CHECK(!rb.z().has_value());

	// at the lower corner of q both components are the single point -inf
	StripPoint corner{ExactCoord(0, ExtRat::minus_inf()), ExactCoord(0, ExtRat::minus_inf())};
	ClosedPair rc = rho(corner);
	REQUIRE(rc.rho0.has_value());
	CHECK(*rc.rho0 == ValueInterval{ExtRat::minus_inf(), ExtRat::minus_inf(), true, true});
	REQUIRE(rc.rho1.size() == 1);
	CHECK(rc.rho1[0] == *rc.rho0);
}

TEST_CASE("rho rejects points outside Q") {
	StripPoint above{at(0), at(1)}; // y > x
	CHECK_THROWS_AS((void)rho(above), error);
}

TEST_CASE("rho is order-reversing and preserves rectangle joins/meets") {
	auto contains = [](const ValueInterval& big, const ValueInterval& small) {
		if (small.empty()) return true;
		if (big.empty()) return false;
		return cmp(big.lo, small.lo) <= 0 && cmp(big.hi, small.hi) >= 0;
	};
	std::vector<StripPoint> qpts;
	for (const auto& u : rational_grid())
		if (in_Q(u)) qpts.push_back(u);
	REQUIRE(qpts.size() > 5);
	for (const auto& u : qpts)
		for (const auto& v : qpts) {
			if (!leq(u, v)) continue;
			ClosedPair ru = rho(u), rv = rho(v);
			if (rv.rho0) CHECK(contains(*ru.rho0, *rv.rho0));
			for (const auto& pv : rv.rho1) {
				bool inside = false;
				for (const auto& pu : ru.rho1) inside = inside || contains(pu, pv);
				CHECK(inside);
			}
		}

	// axis-aligned rectangle u <= v1, v2 <= w inside D: rho_0 sends the meet to
	// the union and the join to the intersection (Z-level check via endpoints)
	StripPoint u{at(3), at(0)}, v1{at(2), at(0)}, v2{at(3), at(1)}, w{at(2), at(1)};
	ClosedPair ru = rho(u), rv1 = rho(v1), rv2 = rho(v2), rw = rho(w);
	CHECK(*ru.rho0 == ValueInterval{ExtRat(0), ExtRat(3), true, true});
	CHECK(rw.rho0->lo == std::max(rv1.rho0->lo, rv2.rho0->lo, [](auto a, auto b) { return cmp(a, b) < 0; }));
	CHECK(rw.rho0->hi == std::min(rv1.rho0->hi, rv2.rho0->hi, [](auto a, auto b) { return cmp(a, b) < 0; }));
	CHECK(ru.rho0->lo == std::min(rv1.rho0->lo, rv2.rho0->lo, [](auto a, auto b) { return cmp(a, b) < 0; }));
	CHECK(ru.rho0->hi == std::max(rv1.rho0->hi, rv2.rho0->hi, [](auto a, auto b) { return cmp(a, b) < 0; }));
}

TEST_CASE("Z(u) of a canonical point recovers its interval") {
	std::vector<CanonicalPoint> pts = {
	    interval_point(IntervalKind::CC, ExtRat(0), ExtRat(2), 0),
	    interval_point(IntervalKind::CO, ExtRat(0), ExtRat(1), 0),
	    interval_point(IntervalKind::OC, ExtRat::minus_inf(), ExtRat(1), 0),
	    interval_point(IntervalKind::OO, ExtRat(-1), ExtRat::plus_inf(), 0),
	    interval_point(IntervalKind::CC, ExtRat(1), ExtRat(1), 0),
	};
	for (const auto& c : pts) {
		ClosedPair r = rho(from_canonical(c));
		auto z = r.z();
		REQUIRE(z.has_value());
		CHECK(z->lo == c.lo);
		CHECK(z->hi == c.hi);
		CHECK(z->lo_cl == lo_closed(c.kind));
		CHECK(z->hi_cl == hi_closed(c.kind));
	}
}
