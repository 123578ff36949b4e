#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace sheafline {

// Exact rational with normalized representation (den > 0, gcd(num, den) = 1).
// Intermediate products go through __int128; magnitudes in this pipeline stay
// far below the overflow range (values are user inputs and their midpoints).
struct Rational {
	long long num = 0;
	long long den = 1;

	Rational() = default;
	Rational(long long n) : num(n), den(1) {}
	Rational(long long n, long long d) : num(n), den(d) { normalize(); }

	void normalize() {
		require(den != 0, "rational with zero denominator");
		if (den < 0) { num = -num; den = -den; }
		long long g = std::gcd(num < 0 ? -num : num, den);
		if (g > 1) { num /= g; den /= g; }
		if (num == 0) den = 1;
	}
};

inline int cmp(const Rational& a, const Rational& b) {
	__int128 l = (__int128)a.num * b.den;
	__int128 r = (__int128)b.num * a.den;
	return l < r ? -1 : l > r ? 1 : 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

inline Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

namespace detail {
inline __int128 gcd128(__int128 x, __int128 y) {
	if (x < 0) x = -x;
	while (y) { __int128 t = x % y; x = y; y = t; }
	return x;
}
} // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
	__int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
	__int128 d = (__int128)a.den * b.den;
	__int128 g = detail::gcd128(n, d);
	if (g > 1) { n /= g; d /= g; }
	require(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX, "rational overflow");
	return Rational((long long)n, (long long)d);
}

inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

inline Rational operator*(const Rational& a, const Rational& b) {
	__int128 n = (__int128)a.num * b.num;
	__int128 d = (__int128)a.den * b.den;
	__int128 g = detail::gcd128(n, d);
	if (g > 1) { n /= g; d /= g; }
	require(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX, "rational overflow");
	return Rational((long long)n, (long long)d);
}

inline Rational midpoint(const Rational& a, const Rational& b) {
	return (a + b) * Rational(1, 2);
}

inline std::string to_string(const Rational& a) {
	return std::to_string(a.num) + "/" + std::to_string(a.den);
}

// Extended rational: a rational number or one of the two infinities.
struct ExtRat {
	enum Kind : int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };
	Kind kind = finite;
	Rational q;

	ExtRat() = default;
	ExtRat(Rational r) : kind(finite), q(r) {}
	ExtRat(long long n) : kind(finite), q(n) {}
	static ExtRat minus_inf() { ExtRat e; e.kind = neg_inf; return e; }
	static ExtRat plus_inf() { ExtRat e; e.kind = pos_inf; return e; }
	bool is_finite() const { return kind == finite; }
};

inline int cmp(const ExtRat& a, const ExtRat& b) {
	if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
	if (a.kind != ExtRat::finite) return 0;
	return cmp(a.q, b.q);
}

inline bool operator==(const ExtRat& a, const ExtRat& b) { return cmp(a, b) == 0; }
inline bool operator!=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) != 0; }
inline bool operator<(const ExtRat& a, const ExtRat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) <= 0; }
inline bool operator>(const ExtRat& a, const ExtRat& b) { return cmp(a, b) > 0; }
inline bool operator>=(const ExtRat& a, const ExtRat& b) { return cmp(a, b) >= 0; }

inline ExtRat operator-(const ExtRat& a) {
	switch (a.kind) {
	case ExtRat::neg_inf: return ExtRat::plus_inf();
	case ExtRat::pos_inf: return ExtRat::minus_inf();
	default: return ExtRat(-a.q);
	}
}

inline std::string to_string(const ExtRat& a) {
	if (a.kind == ExtRat::neg_inf) return "-inf";
	if (a.kind == ExtRat::pos_inf) return "+inf";
	return to_string(a.q);
}

} // namespace sheafline
