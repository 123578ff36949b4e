#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace sheafline {

// One coordinate of a strip point, kept exact as n*pi + arctan(t) with t a
// rational or -inf (arctan(-inf) = -pi/2).  Restricting t to [-inf, +inf)
// makes the representation unique, so pi/2 is stored as (1, -inf).
struct ExactCoord {
	int n = 0;
	ExtRat t = ExtRat::minus_inf();

	ExactCoord() = default;
	ExactCoord(int n_, ExtRat t_) : n(n_), t(t_) {
		require(t.kind != ExtRat::pos_inf, "exact coordinate with t = +inf");
	}
	static ExactCoord atan_of(const ExtRat& v); // arctan(v) for v in [-inf, +inf]
};

int cmp(const ExactCoord& a, const ExactCoord& b);
inline bool operator==(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) == 0; }
inline bool operator!=(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) != 0; }
inline bool operator<(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) < 0; }
inline bool operator<=(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) <= 0; }
inline bool operator>(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) > 0; }
inline bool operator>=(const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) >= 0; }

ExactCoord neg(const ExactCoord& a);                   // -a
inline ExactCoord add_pi(const ExactCoord& a, int k) { return ExactCoord(a.n + k, a.t); }
inline ExactCoord pi_minus(const ExactCoord& a) { return add_pi(neg(a), 1); }      // pi - a
inline ExactCoord neg_pi_minus(const ExactCoord& a) { return add_pi(neg(a), -1); } // -pi - a

// Compare a + b against m*pi.  Decidable exactly because
// arctan(t1) + arctan(t2) compares to 0 as t1 + t2 does.
int sum_cmp(const ExactCoord& a, const ExactCoord& b, int m);

// Some exact coordinate strictly between a and b (requires a < b).
ExactCoord coord_between(const ExactCoord& a, const ExactCoord& b);

std::string to_string(const ExactCoord& a);
double approx(const ExactCoord& a); // float approximation, for SVG output only

// A point of the strip M = { -pi <= x + y <= pi } in R° x R,
// ordered by (x1,y1) <= (x2,y2) iff x1 >= x2 and y1 <= y2.
struct StripPoint {
	ExactCoord x, y;
};

inline bool operator==(const StripPoint& a, const StripPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const StripPoint& a, const StripPoint& b) { return !(a == b); }

bool in_strip(const StripPoint& u);
bool in_interior(const StripPoint& u);
bool leq(const StripPoint& u, const StripPoint& v);
bool lt(const StripPoint& u, const StripPoint& v); // strict in both coordinates

// The glide reflection T(x, y) = (-pi - y, pi - x); T^2 translates by (-2pi, 2pi).
StripPoint t_apply(const StripPoint& u, int k);

// Hom(iota(u), iota(v)) != 0, i.e. v in (up u) /\ int(down T(u)).
// Equivalently u lies in the support of the contravariant block B_v.
bool hom_nonzero(const StripPoint& u, const StripPoint& v);

std::string to_string(const StripPoint& u);

// Interval endpoint types: [.,.], [.,.), (.,.], (.,.).
enum class IntervalKind : uint8_t { CC, CO, OC, OO };

const char* kind_name(IntervalKind k);
std::optional<IntervalKind> kind_from_name(const std::string& s);
inline bool lo_closed(IntervalKind k) { return k == IntervalKind::CC || k == IntervalKind::CO; }
inline bool hi_closed(IntervalKind k) { return k == IntervalKind::CC || k == IntervalKind::OC; }
IntervalKind make_kind(bool lo_cl, bool hi_cl);

// An indecomposable iota(u) = F_I[-deg]: an interval of the value line plus a
// cohomological degree.  deg counts applications of T^-1 from the degree-0 tile.
struct CanonicalPoint {
	IntervalKind kind = IntervalKind::CC;
	ExtRat lo, hi;
	int deg = 0;
};

// Total order (deg, kind, lo, hi); used everywhere a stable ordering is needed.
int cmp(const CanonicalPoint& a, const CanonicalPoint& b);
inline bool operator==(const CanonicalPoint& a, const CanonicalPoint& b) { return cmp(a, b) == 0; }
inline bool operator!=(const CanonicalPoint& a, const CanonicalPoint& b) { return cmp(a, b) != 0; }
struct CanonicalPointLess {
	bool operator()(const CanonicalPoint& a, const CanonicalPoint& b) const { return cmp(a, b) < 0; }
};

void validate(const CanonicalPoint& c); // throws schema_error on malformed data
std::string to_string(const CanonicalPoint& c);
std::string sheaf_name(const CanonicalPoint& c); // e.g. "F_[0,2]" or "F_[1,2)[-1]"

StripPoint from_canonical(const CanonicalPoint& c);
CanonicalPoint to_canonical(const StripPoint& u); // BoundaryPoint error on the boundary

// Convenience for tests and generators: the degree-d point of an interval.
CanonicalPoint interval_point(IntervalKind k, ExtRat lo, ExtRat hi, int deg = 0);

// A closed subinterval of the value line [-inf, +inf], possibly empty.
struct ValueInterval {
	ExtRat lo, hi;
	bool lo_cl = true, hi_cl = true;
	bool empty() const;
};
bool operator==(const ValueInterval& a, const ValueInterval& b);
std::string to_string(const ValueInterval& i);

// rho(u) = (rho_0, rho_1) in value coordinates on q = Im(tri) ~ [-inf, +inf]:
// rho_0(u) = q /\ up(u), rho_1(u) = q \ int(down T(u)).
struct ClosedPair {
	std::optional<ValueInterval> rho0;        // closed interval, or nothing when empty
	std::vector<ValueInterval> rho1;          // at most two disjoint closed intervals
	std::optional<ValueInterval> z() const;   // Z(u) = rho_0 \ rho_1
};

ClosedPair rho(const StripPoint& u); // OutOfDomain unless u in Q = down(Im tri)

bool in_Q(const StripPoint& u);

// The tile index d with T^d(u) inside the degree-0 tile D (interior points only).
int tile_index(const StripPoint& u);

// Value coordinate on q: arctan-scale positions at or below -pi/2 read as
// -inf, at or above pi/2 as +inf; in between the rational arctan argument.
ExtRat value_on_q(const ExactCoord& c);

// The interlevel window of an interior point u = T^{-n}(u0): h(f)(u) is
// H^n(f^-1(I), f^-1(I \ core)) for this open interval I and closed core.
struct InterlevelWindow {
	int n = 0;
	ExtRat I_lo, I_hi;       // open interval endpoints
	ExtRat core_lo, core_hi; // closed core endpoints
};
InterlevelWindow interlevel_window(const StripPoint& u);

} // namespace sheafline
