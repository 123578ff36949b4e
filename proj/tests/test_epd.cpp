#include <doctest.h>

#include "core/epd.hpp"
#include "fixtures.hpp"

using namespace sheafline;
using namespace sheafline::fixtures;

namespace {
CanonicalPoint pt(IntervalKind k, long long lo, long long hi, int deg) {
	return interval_point(k, ExtRat(lo), ExtRat(hi), deg);
}
} // namespace

TEST_CASE("extended persistence of a single vertex") {
	auto K = make_complex(2, {{"v", Rational(5)}}, {});
	auto pairs = extended_persistence(K);
	REQUIRE(pairs.size() == 1);
	CHECK(pairs[0] == RawPair{PairClass::Ext, 0, Rational(5), Rational(5)});
}

TEST_CASE("extended persistence of the hood functions") {
	auto pf = extended_persistence(hood_f());
	REQUIRE(pf.size() == 2);
	CHECK(pf[0] == RawPair{PairClass::Ord, 0, Rational(0), Rational(1)});
	CHECK(pf[1] == RawPair{PairClass::Ext, 0, Rational(0), Rational(2)});

	auto pg = extended_persistence(hood_g());
	REQUIRE(pg.size() == 2);
	CHECK(pg[0] == RawPair{PairClass::Ord, 1, Rational(1), Rational(2)});
	CHECK(pg[1] == RawPair{PairClass::Ext, 0, Rational(0), Rational(2)});
}

TEST_CASE("hood diagrams, bit-exact") {
	Diagram df = diagram_of(hood_f());
	REQUIRE(df.points.size() == 2);
	CHECK(df.points.at(pt(IntervalKind::CC, 0, 2, 0)) == 1);
	CHECK(df.points.at(pt(IntervalKind::CO, 0, 1, 0)) == 1);

	Diagram dg = diagram_of(hood_g());
	REQUIRE(dg.points.size() == 2);
	CHECK(dg.points.at(pt(IntervalKind::CC, 0, 2, 0)) == 1);
	CHECK(dg.points.at(pt(IntervalKind::CO, 1, 2, 1)) == 1);
}

TEST_CASE("one-max circle gives the open interval in degree 0") {
	Diagram d = diagram_of(circle3());
	REQUIRE(d.points.size() == 2);
	CHECK(d.points.at(interval_point(IntervalKind::CC, ExtRat(0), ExtRat(1), 0)) == 1);
	CHECK(d.points.at(interval_point(IntervalKind::OO, ExtRat(0), ExtRat(1), 0)) == 1);
}

TEST_CASE("two-max circle decomposes into all four kinds") {
	Diagram d = diagram_of(circle4(0, 1, 0, 1));
	REQUIRE(d.points.size() == 4);
	CHECK(d.points.at(pt(IntervalKind::CC, 0, 1, 0)) == 1);
	CHECK(d.points.at(pt(IntervalKind::CO, 0, 1, 0)) == 1);
	CHECK(d.points.at(pt(IntervalKind::OC, 0, 1, 0)) == 1);
	CHECK(d.points.at(pt(IntervalKind::OO, 0, 1, 0)) == 1);
}

TEST_CASE("constant cycle contributes a degree-1 skyscraper") {
	Diagram d = diagram_of(circle4(0, 0, 0, 0));
	REQUIRE(d.points.size() == 2);
	CHECK(d.points.at(pt(IntervalKind::CC, 0, 0, 0)) == 1);
	CHECK(d.points.at(pt(IntervalKind::CC, 0, 0, 1)) == 1);
}

TEST_CASE("empty complex gives the empty diagram") {
	auto K = make_complex(2, {}, {});
	CHECK(extended_persistence(K).empty());
	CHECK(diagram_via_sampling(K).points.empty());
}

TEST_CASE("evaluate_diagram") {
	Diagram dg = diagram_of(hood_g());
	StripPoint corner_ca = from_canonical(pt(IntervalKind::CC, 0, 2, 0));
	CHECK(evaluate_diagram(dg, corner_ca) == 1);
	CHECK(evaluate_diagram(Diagram{}, corner_ca) == 0);
	StripPoint boundary{ExactCoord::atan_of(ExtRat(0)), neg_pi_minus(ExactCoord::atan_of(ExtRat(0)))};
	CHECK(evaluate_diagram(dg, boundary) == 0);
}

TEST_CASE("sampling pipeline reproduces the hood 1-skeleton diagram") {
	auto X1 = make_complex(2, {{"1", 0}, {"2", 1}, {"3", 0}, {"5", 2}},
	                       {{"1", "2"}, {"2", "3"}, {"1", "5"}, {"2", "5"}, {"3", "5"}});
	Diagram via_pairs = diagram_of(X1);
	Diagram via_sampling = diagram_via_sampling(X1);
	CHECK(via_pairs == via_sampling);
}

TEST_CASE("sampling a constant point gives the single diagonal block") {
	auto K = make_complex(2, {{"v", Rational(0)}}, {});
	Diagram d = diagram_via_sampling(K);
	REQUIRE(d.points.size() == 1);
	CHECK(d.points.at(pt(IntervalKind::CC, 0, 0, 0)) == 1);
	CHECK(d == diagram_of(K));
}

TEST_CASE("sampling pipeline on fixed small graphs") {
	for (auto make : {+[] { return circle3(); }, +[] { return circle4(0, 1, 0, 1); },
	                  +[] { return circle4(0, 0, 0, 0); },
	                  +[] { return make_complex(2, {{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(1)}},
	                                            {{"a", "b"}, {"b", "c"}}); }}) {
		auto K = make();
		CHECK(diagram_of(K) == diagram_via_sampling(K));
	}
}

TEST_CASE("cross-pipeline equality on random graphs") {
	Rng rng(2024);
	for (int trial = 0; trial < 40; ++trial) {
		auto K = random_graph(rng, 9);
		Diagram a = diagram_of(K);
		Diagram b = diagram_via_sampling(K);
		REQUIRE(a == b);
	}
}

TEST_CASE("sampled dims match diagram evaluation at random interior points") {
	Rng rng(5);
	for (int trial = 0; trial < 10; ++trial) {
		auto K = random_graph(rng, 7);
		Diagram d = diagram_of(K);
		for (int probe = 0; probe < 25; ++probe) {
			Rational xv(rng.uniform(13) - 6, 1 + rng.uniform(4));
			Rational yv(rng.uniform(13) - 6, 1 + rng.uniform(4));
			ExactCoord x = ExactCoord::atan_of(ExtRat(xv));
			ExactCoord y = ExactCoord::atan_of(ExtRat(yv));
			for (int dx = 0; dx < 2; ++dx)
				for (int k = -1; k <= 1; ++k) {
					StripPoint u{dx ? pi_minus(x) : x, y};
					u = t_apply(u, k);
					if (!in_interior(u)) continue;
					CHECK(evaluate_diagram(d, u) == sampled_dim(K, u));
				}
		}
	}
}

TEST_CASE("right continuity of diagram evaluation along increasing chains") {
	Diagram d = diagram_of(hood_f());
	// approach each block corner from below-right inside one tile
	for (const auto& [c, mult] : d.points) {
		StripPoint u = from_canonical(c);
		int at_u = evaluate_diagram(d, u);
		// u_k -> u with x_k decreasing to x and y_k increasing to y
		for (int k = 1; k <= 4; ++k) {
			Rational eps(1, 64 << k);
			StripPoint uk{ExactCoord(u.x.n, ExtRat(u.x.t.q + eps)), ExactCoord(u.y.n, ExtRat(u.y.t.q - eps))};
			REQUIRE(in_interior(uk));
			CHECK(leq(uk, u));
			CHECK(evaluate_diagram(d, uk) == at_u);
		}
	}
}
