#include "core/strip.hpp"

#include <cmath>

namespace sheafline {

ExactCoord ExactCoord::atan_of(const ExtRat& v) {
	if (v.kind == ExtRat::pos_inf) return ExactCoord(1, ExtRat::minus_inf()); // pi/2
	return ExactCoord(0, v);
}

int cmp(const ExactCoord& a, const ExactCoord& b) {
	if (a.n != b.n) return a.n < b.n ? -1 : 1;
	return cmp(a.t, b.t);
}

ExactCoord neg(const ExactCoord& a) {
	if (a.t.kind == ExtRat::neg_inf) return ExactCoord(1 - a.n, ExtRat::minus_inf());
	return ExactCoord(-a.n, -a.t);
}

int sum_cmp(const ExactCoord& a, const ExactCoord& b, int m) {
	// a + b - m*pi = k*pi + arctan(a.t) + arctan(b.t), k = a.n + b.n - m;
	// the arctan part s lies in [-pi, pi).
	int k = a.n + b.n - m;
	if (k >= 1) {
		// k*pi + s >= (k-1)*pi >= 0, equality only for k = 1 and s = -pi
		if (k == 1 && a.t.kind == ExtRat::neg_inf && b.t.kind == ExtRat::neg_inf) return 0;
		return 1;
	}
	if (k <= -1) return -1; // k*pi + s <= -pi + s < 0
	if (a.t.kind == ExtRat::neg_inf || b.t.kind == ExtRat::neg_inf) return -1;
	return cmp(a.t.q + b.t.q, Rational(0));
}

ExactCoord coord_between(const ExactCoord& a, const ExactCoord& b) {
	require(cmp(a, b) < 0, "coord_between needs a < b");
	if (a.n == b.n) {
		if (a.t.kind == ExtRat::neg_inf) {
			// (-pi/2-edge, arctan t_b): one unit below t_b works
			return ExactCoord(a.n, ExtRat(b.t.q - Rational(1)));
		}
		return ExactCoord(a.n, ExtRat(midpoint(a.t.q, b.t.q)));
	}
	// different pi-levels: anything strictly above a within its level
	if (a.t.kind == ExtRat::neg_inf) return ExactCoord(a.n, ExtRat(Rational(0)));
	return ExactCoord(a.n, ExtRat(a.t.q + Rational(1)));
}

std::string to_string(const ExactCoord& a) {
	std::string tail = a.t.kind == ExtRat::neg_inf ? std::string("-pi/2")
	                                               : "atan(" + to_string(a.t) + ")";
	if (a.n == 0) return tail;
	return std::to_string(a.n) + "pi" + (tail[0] == '-' ? "" : "+") + tail;
}

double approx(const ExactCoord& a) {
	double base = a.n * M_PI;
	if (a.t.kind == ExtRat::neg_inf) return base - M_PI / 2;
	return base + std::atan((double)a.t.q.num / (double)a.t.q.den);
}

bool in_strip(const StripPoint& u) {
	return sum_cmp(u.x, u.y, -1) >= 0 && sum_cmp(u.x, u.y, 1) <= 0;
}

bool in_interior(const StripPoint& u) {
	return sum_cmp(u.x, u.y, -1) > 0 && sum_cmp(u.x, u.y, 1) < 0;
}

bool leq(const StripPoint& u, const StripPoint& v) {
	return cmp(u.x, v.x) >= 0 && cmp(u.y, v.y) <= 0;
}

bool lt(const StripPoint& u, const StripPoint& v) {
	return cmp(u.x, v.x) > 0 && cmp(u.y, v.y) < 0;
}

StripPoint t_apply(const StripPoint& u, int k) {
	// T^2 is translation by (-2pi, 2pi)
	int m = (k >= 0 ? k / 2 : -((-k + 1) / 2));
	int r = k - 2 * m; // r in {0, 1}
	StripPoint v{add_pi(u.x, -2 * m), add_pi(u.y, 2 * m)};
	if (r == 1) v = StripPoint{neg_pi_minus(v.y), pi_minus(v.x)};
	return v;
}

bool hom_nonzero(const StripPoint& u, const StripPoint& v) {
	if (!leq(u, v)) return false;
	StripPoint tu = t_apply(u, 1);
	return cmp(v.x, tu.x) > 0 && cmp(v.y, tu.y) < 0;
}

std::string to_string(const StripPoint& u) {
	return "(" + to_string(u.x) + ", " + to_string(u.y) + ")";
}

const char* kind_name(IntervalKind k) {
	switch (k) {
	case IntervalKind::CC: return "CC";
	case IntervalKind::CO: return "CO";
	case IntervalKind::OC: return "OC";
	case IntervalKind::OO: return "OO";
	}
	return "??";
}

std::optional<IntervalKind> kind_from_name(const std::string& s) {
	if (s == "CC") return IntervalKind::CC;
	if (s == "CO") return IntervalKind::CO;
	if (s == "OC") return IntervalKind::OC;
	if (s == "OO") return IntervalKind::OO;
	return std::nullopt;
}

IntervalKind make_kind(bool lo_cl, bool hi_cl) {
	if (lo_cl) return hi_cl ? IntervalKind::CC : IntervalKind::CO;
	return hi_cl ? IntervalKind::OC : IntervalKind::OO;
}

int cmp(const CanonicalPoint& a, const CanonicalPoint& b) {
	if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
	if (a.kind != b.kind) return (int)a.kind < (int)b.kind ? -1 : 1;
	if (int c = cmp(a.lo, b.lo)) return c;
	return cmp(a.hi, b.hi);
}

void validate(const CanonicalPoint& c) {
	bool lc = lo_closed(c.kind), hc = hi_closed(c.kind);
	if (lc && !c.lo.is_finite()) fail(errc::schema_error, "closed lower endpoint must be finite");
	if (hc && !c.hi.is_finite()) fail(errc::schema_error, "closed upper endpoint must be finite");
	if (c.lo.kind == ExtRat::pos_inf || c.hi.kind == ExtRat::neg_inf)
		fail(errc::schema_error, "interval endpoints out of order");
	if (c.kind == IntervalKind::CC) {
		if (cmp(c.lo, c.hi) > 0) fail(errc::schema_error, "interval with lo > hi");
	} else if (cmp(c.lo, c.hi) >= 0) {
		fail(errc::schema_error, "empty half-open interval");
	}
}

std::string to_string(const CanonicalPoint& c) {
	return std::string("(") + kind_name(c.kind) + "," + to_string(c.lo) + "," + to_string(c.hi) +
	       ",deg " + std::to_string(c.deg) + ")";
}

static std::string endpoint_str(const ExtRat& v) {
	if (!v.is_finite()) return to_string(v);
	if (v.q.den == 1) return std::to_string(v.q.num);
	return to_string(v.q);
}

std::string sheaf_name(const CanonicalPoint& c) {
	std::string s = "F_";
	s += lo_closed(c.kind) ? "[" : "(";
	s += endpoint_str(c.lo) + "," + endpoint_str(c.hi);
	s += hi_closed(c.kind) ? "]" : ")";
	if (c.deg != 0) s += "[" + std::to_string(-c.deg) + "]";
	return s;
}

CanonicalPoint interval_point(IntervalKind k, ExtRat lo, ExtRat hi, int deg) {
	CanonicalPoint c{k, lo, hi, deg};
	validate(c);
	return c;
}

StripPoint from_canonical(const CanonicalPoint& c) {
	validate(c);
	ExactCoord x0 = hi_closed(c.kind) ? ExactCoord::atan_of(c.hi)
	                                  : pi_minus(ExactCoord::atan_of(c.hi));
	ExactCoord y0 = lo_closed(c.kind) ? ExactCoord::atan_of(c.lo)
	                                  : neg_pi_minus(ExactCoord::atan_of(c.lo));
	return t_apply(StripPoint{x0, y0}, -c.deg);
}

int tile_index(const StripPoint& u) {
	require(in_interior(u), "tile index of a boundary point");
	// the degree-d tile is 2d*pi <= x - y < 2(d+1)*pi; x - y lies within
	// (N-1, N+1)*pi for N = pi-count of x plus pi-count of -y
	ExactCoord ny = neg(u.y);
	int n_total = u.x.n + ny.n;
	int d = (n_total >= 0 ? n_total : n_total - 1) / 2 - 1;
	for (int step = 0; step < 4; ++step, ++d)
		if (sum_cmp(u.x, ny, 2 * d) >= 0 && sum_cmp(u.x, ny, 2 * d + 2) < 0) return d;
	require(false, "tile search runaway");
	return 0;
}

CanonicalPoint to_canonical(const StripPoint& u) {
	if (!in_strip(u)) fail(errc::out_of_domain, "point outside the strip");
	if (!in_interior(u)) fail(errc::boundary_point, "boundary points carry no indecomposable");
	int d = tile_index(u);
	StripPoint u0 = t_apply(u, d);
	CanonicalPoint c;
	c.deg = d;
	bool hi_cl, lo_cl;
	if (u0.x.n == 0 && u0.x.t.is_finite()) {
		hi_cl = true;
		c.hi = u0.x.t;
	} else if (u0.x.n == 1) {
		hi_cl = false;
		c.hi = u0.x.t.kind == ExtRat::neg_inf ? ExtRat::plus_inf() : -u0.x.t;
	} else {
		fail(errc::out_of_domain, "coordinate not of arctan-rational form");
	}
	if (u0.y.n == 0 && u0.y.t.is_finite()) {
		lo_cl = true;
		c.lo = u0.y.t;
	} else if (u0.y.n == 0 && u0.y.t.kind == ExtRat::neg_inf) {
		lo_cl = false;
		c.lo = ExtRat::minus_inf();
	} else if (u0.y.n == -1 && u0.y.t.is_finite()) {
		lo_cl = false;
		c.lo = -u0.y.t;
	} else {
		fail(errc::out_of_domain, "coordinate not of arctan-rational form");
	}
	c.kind = make_kind(lo_cl, hi_cl);
	validate(c);
	return c;
}

bool ValueInterval::empty() const {
	int c = cmp(lo, hi);
	if (c > 0) return true;
	if (c == 0) return !(lo_cl && hi_cl);
	return false;
}

bool operator==(const ValueInterval& a, const ValueInterval& b) {
	if (a.empty() && b.empty()) return true;
	return a.lo == b.lo && a.hi == b.hi && a.lo_cl == b.lo_cl && a.hi_cl == b.hi_cl;
}

std::string to_string(const ValueInterval& i) {
	if (i.empty()) return "{}";
	std::string s = i.lo_cl ? "[" : "(";
	s += to_string(i.lo) + "," + to_string(i.hi);
	s += i.hi_cl ? "]" : ")";
	return s;
}

bool in_Q(const StripPoint& u) {
	ExactCoord half_pi(1, ExtRat::minus_inf());
	ExactCoord neg_half_pi(0, ExtRat::minus_inf());
	return cmp(u.y, u.x) <= 0 && cmp(u.x, neg_half_pi) >= 0 && cmp(u.y, half_pi) <= 0;
}

ExtRat value_on_q(const ExactCoord& c) {
	ExactCoord half_pi(1, ExtRat::minus_inf());
	ExactCoord neg_half_pi(0, ExtRat::minus_inf());
	if (cmp(c, neg_half_pi) <= 0) return ExtRat::minus_inf();
	if (cmp(c, half_pi) >= 0) return ExtRat::plus_inf();
	require(c.n == 0 && c.t.is_finite(), "value coordinate not arctan-rational");
	return c.t;
}

ClosedPair rho(const StripPoint& u) {
	if (!in_strip(u) || !in_Q(u)) fail(errc::out_of_domain, "rho needs a point of Q");
	ClosedPair r;
	ValueInterval r0{value_on_q(u.y), value_on_q(u.x), true, true};
	if (!r0.empty()) r.rho0 = r0;

	// rho_1 = { t : tri(t) outside int(down T(u)) }: values <= -pi - y or >= pi - x
	ExactCoord left_cut = neg_pi_minus(u.y);
	ExactCoord right_cut = pi_minus(u.x);
	ExactCoord half_pi(1, ExtRat::minus_inf());
	ExactCoord neg_half_pi(0, ExtRat::minus_inf());
	std::optional<ValueInterval> left, right;
	if (cmp(left_cut, neg_half_pi) >= 0)
		left = ValueInterval{ExtRat::minus_inf(), value_on_q(left_cut), true, true};
	if (cmp(right_cut, half_pi) <= 0)
		right = ValueInterval{value_on_q(right_cut), ExtRat::plus_inf(), true, true};
	if (left && right && cmp(right->lo, left->hi) <= 0) {
		r.rho1.push_back(ValueInterval{ExtRat::minus_inf(), ExtRat::plus_inf(), true, true});
	} else {
		if (left && !left->empty()) r.rho1.push_back(*left);
		if (right && !right->empty()) r.rho1.push_back(*right);
	}
	return r;
}

InterlevelWindow interlevel_window(const StripPoint& u) {
	InterlevelWindow w;
	w.n = tile_index(u);
	StripPoint u0 = t_apply(u, w.n);
	w.I_lo = value_on_q(neg_pi_minus(u0.y));
	w.I_hi = value_on_q(pi_minus(u0.x));
	w.core_lo = value_on_q(u0.y);
	w.core_hi = value_on_q(u0.x);
	return w;
}

std::optional<ValueInterval> ClosedPair::z() const {
	if (!rho0) return std::nullopt;
	ValueInterval z = *rho0;
	for (const auto& piece : rho1) {
		if (z.empty()) return std::nullopt;
		// each piece is [-inf, a] or [b, +inf] (or everything)
		bool covers_lo = cmp(piece.lo, z.lo) <= 0;
		bool covers_hi = cmp(piece.hi, z.hi) >= 0;
		if (covers_lo && covers_hi) return std::nullopt;
		if (covers_lo) {
			// cut from below: new lo is piece.hi, open
			if (cmp(piece.hi, z.lo) >= 0) { z.lo = piece.hi; z.lo_cl = false; }
		} else if (covers_hi) {
			if (cmp(piece.lo, z.hi) <= 0) { z.hi = piece.lo; z.hi_cl = false; }
		} else {
			require(false, "rho_1 piece strictly inside rho_0");
		}
	}
	if (z.empty()) return std::nullopt;
	return z;
}

} // namespace sheafline
