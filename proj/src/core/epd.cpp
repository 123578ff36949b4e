#include "core/epd.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace sheafline {

bool operator==(const RawPair& a, const RawPair& b) {
	return a.klass == b.klass && a.k == b.k && a.birth == b.birth && a.death == b.death;
}

bool operator==(const Diagram& a, const Diagram& b) { return a.p == b.p && a.points == b.points; }

namespace {

// sparse F_p column, rows sorted ascending
using Column = std::vector<std::pair<int, int>>;

void add_scaled(Column& dst, const Column& src, int c, int p) {
	Column out;
	out.reserve(dst.size() + src.size());
	size_t i = 0, j = 0;
	while (i < dst.size() || j < src.size()) {
		if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
			out.push_back(dst[i++]);
		} else if (i == dst.size() || src[j].first < dst[i].first) {
			out.push_back({src[j].first, (int)(((long long)src[j].second * c) % p)});
			++j;
		} else {
			int v = (int)((dst[i].second + (long long)src[j].second * c) % p);
			if (v) out.push_back({dst[i].first, v});
			++i, ++j;
		}
	}
	while (!out.empty() && out.back().second == 0) out.pop_back();
	out.erase(std::remove_if(out.begin(), out.end(), [](auto& e) { return e.second == 0; }),
	          out.end());
	dst = std::move(out);
}

} // namespace

std::vector<RawPair> extended_persistence(const SimplicialFunction& f) {
	std::vector<RawPair> out;
	size_t m = f.simplices.size();
	if (m == 0) return out;
	int p = f.p;

	std::vector<int> asc = lower_star_order(f);
	std::vector<int> desc(m);
	std::iota(desc.begin(), desc.end(), 0);
	std::stable_sort(desc.begin(), desc.end(), [&](int a, int b) {
		int c = cmp(f.upper_value(a), f.upper_value(b));
		if (c) return c > 0; // descending by min vertex value
		if (f.simplices[a].size() != f.simplices[b].size())
			return f.simplices[a].size() < f.simplices[b].size();
		return f.simplices[a] < f.simplices[b];
	});

	// filtration positions: 0 = cone apex, 1..m ascending, m+1..2m cone cells
	std::vector<int> asc_pos(m), cone_pos(m);
	for (size_t i = 0; i < m; ++i) asc_pos[asc[i]] = 1 + (int)i;
	for (size_t i = 0; i < m; ++i) cone_pos[desc[i]] = 1 + (int)m + (int)i;

	auto boundary = [&](int pos) {
		Column col;
		if (pos == 0) return col;
		if (pos <= (int)m) {
			int s = asc[pos - 1];
			const auto& verts = f.simplices[s];
			if (verts.size() == 1) return col;
			int sign = 1;
			for (size_t drop = 0; drop < verts.size(); ++drop) {
				std::vector<int> face;
				for (size_t i = 0; i < verts.size(); ++i)
					if (i != drop) face.push_back(verts[i]);
				col.push_back({asc_pos[f.simplex_index(face)], fp_normalize(sign, p)});
				sign = -sign;
			}
		} else {
			// cone cell [w, v0..vk]: boundary is [v0..vk] plus signed coned faces
			int s = desc[pos - 1 - (int)m];
			const auto& verts = f.simplices[s];
			col.push_back({asc_pos[s], 1});
			if (verts.size() == 1) {
				col.push_back({0, p - 1});
			} else {
				int sign = -1;
				for (size_t drop = 0; drop < verts.size(); ++drop) {
					std::vector<int> face;
					for (size_t i = 0; i < verts.size(); ++i)
						if (i != drop) face.push_back(verts[i]);
					col.push_back({cone_pos[f.simplex_index(face)], fp_normalize(sign, p)});
					sign = -sign;
				}
			}
		}
		std::sort(col.begin(), col.end());
		return col;
	};

	int total = 2 * (int)m + 1;
	std::vector<Column> reduced(total);
	std::vector<int> owner(total, -1); // owner[r] = column whose low is row r
	std::vector<int> partner(total, -1);

	for (int pos = 1; pos < total; ++pos) {
		Column col = boundary(pos);
		while (!col.empty()) {
			int low = col.back().first;
			int other = owner[low];
			if (other < 0) break;
			int c = fp_normalize(-(long long)col.back().second *
			                         fp_inv(reduced[other].back().second, p),
			                     p);
			add_scaled(col, reduced[other], c, p);
		}
		if (!col.empty()) {
			int low = col.back().first;
			owner[low] = pos;
			partner[low] = pos;
			partner[pos] = low;
			reduced[pos] = std::move(col);
		}
	}

	for (int pos = 1; pos < total; ++pos)
		require(partner[pos] >= 0, "extended persistence pairing incomplete");

	for (int death = 1; death < total; ++death) {
		int birth = partner[death];
		if (birth >= death || birth == 0) continue;
		bool birth_asc = birth <= (int)m;
		bool death_asc = death <= (int)m;
		RawPair pr;
		if (birth_asc && death_asc) {
			int s = asc[birth - 1];
			pr = {PairClass::Ord, (int)f.simplices[s].size() - 1, f.lower_value(s),
			      f.lower_value(asc[death - 1])};
			if (pr.birth == pr.death) continue;
			require(pr.birth < pr.death, "ordinary pair out of order");
		} else if (birth_asc && !death_asc) {
			int s = asc[birth - 1];
			int t = desc[death - 1 - (int)m];
			pr = {PairClass::Ext, (int)f.simplices[s].size() - 1, f.lower_value(s),
			      f.upper_value(t)};
			if (pr.birth > pr.death) --pr.k; // descending essential class
		} else {
			require(!birth_asc && !death_asc, "descending class killed in the ascending sweep");
			int s = desc[birth - 1 - (int)m];
			int t = desc[death - 1 - (int)m];
			pr = {PairClass::Rel, (int)f.simplices[s].size() - 1, f.upper_value(s),
			      f.upper_value(t)};
			if (pr.birth == pr.death) continue;
			require(pr.birth > pr.death, "relative pair out of order");
		}
		out.push_back(pr);
	}
	std::sort(out.begin(), out.end(), [](const RawPair& a, const RawPair& b) {
		if (a.klass != b.klass) return (int)a.klass < (int)b.klass;
		if (a.k != b.k) return a.k < b.k;
		if (a.birth != b.birth) return a.birth < b.birth;
		return a.death < b.death;
	});
	return out;
}

Diagram pairs_to_diagram(const std::vector<RawPair>& pairs, int p) {
	Diagram D;
	D.p = p;
	for (const auto& pr : pairs) {
		CanonicalPoint c;
		switch (pr.klass) {
		case PairClass::Ord:
			if (!(pr.birth < pr.death)) fail(errc::dictionary_error, "ordinary pair needs birth < death");
			c = interval_point(IntervalKind::CO, ExtRat(pr.birth), ExtRat(pr.death), pr.k);
			break;
		case PairClass::Ext:
			if (pr.birth <= pr.death)
				c = interval_point(IntervalKind::CC, ExtRat(pr.birth), ExtRat(pr.death), pr.k);
			else
				c = interval_point(IntervalKind::OO, ExtRat(pr.death), ExtRat(pr.birth), pr.k);
			break;
		case PairClass::Rel:
			if (!(pr.birth > pr.death)) fail(errc::dictionary_error, "relative pair needs birth > death");
			c = interval_point(IntervalKind::OC, ExtRat(pr.death), ExtRat(pr.birth), pr.k);
			break;
		}
		if (c.deg < 0) fail(errc::dictionary_error, "pair maps to a negative degree");
		D.points[c] += 1;
	}
	return D;
}

Diagram diagram_of(const SimplicialFunction& f) {
	return pairs_to_diagram(extended_persistence(f), f.p);
}

int sampled_dim(const SimplicialFunction& f, const StripPoint& u) {
	if (!in_interior(u)) return 0; // everything vanishes on the boundary
	InterlevelWindow w = interlevel_window(u);
	return interlevel_pair_dims(f, OpenInterval{w.I_lo, w.I_hi},
	                            CoreInterval{w.core_lo, w.core_hi}, w.n);
}

namespace {

struct CoordKey {
	int n;
	int8_t kind;
	long long num, den;
	auto operator<=>(const CoordKey&) const = default;
};

CoordKey key_of(const ExactCoord& c) {
	if (c.t.is_finite()) return {c.n, 0, c.t.q.num, c.t.q.den};
	return {c.n, -1, 0, 0};
}

} // namespace

Diagram diagram_via_sampling(const SimplicialFunction& f) {
	if (f.dim() > 1) fail(errc::unsupported_dimension, "sampling pipeline handles graphs only");
	Diagram D;
	D.p = f.p;
	if (f.simplices.empty()) return D;

	std::vector<Rational> crit = f.values;
	std::sort(crit.begin(), crit.end());
	crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
	int m = (int)crit.size();
	// grid[i] < crit[i] < grid[i+1]: midpoints plus outer sentinels
	std::vector<Rational> grid(m + 1);
	grid[0] = crit.front() - Rational(1);
	grid[m] = crit.back() + Rational(1);
	for (int i = 1; i < m; ++i) grid[i] = midpoint(crit[i - 1], crit[i]);

	std::map<std::pair<CoordKey, CoordKey>, int> memo;
	auto d_at = [&](const ExactCoord& x, const ExactCoord& y) {
		auto key = std::make_pair(key_of(x), key_of(y));
		auto it = memo.find(key);
		if (it != memo.end()) return it->second;
		int v = sampled_dim(f, StripPoint{x, y});
		memo.emplace(key, v);
		return v;
	};

	// The alternating corner count at a candidate position detects two things:
	// +1 for a block whose closed upper-left corner sits there, and +1 for a
	// block one degree up whose open lower-right corner (the T^{-1}-image of
	// its own corner) lands on the same position.  Walking the degrees upward
	// and subtracting the already-known multiplicity one degree below isolates
	// the genuine blocks.  Graphs produce nothing above degree 1; degree 2 is
	// scanned as a consistency check.
	std::map<CanonicalPoint, int, CanonicalPointLess> found;
	for (int deg = 0; deg <= 2; ++deg) {
		for (IntervalKind kind :
		     {IntervalKind::CC, IntervalKind::CO, IntervalKind::OC, IntervalKind::OO}) {
			for (int i = 0; i < m; ++i) {
				for (int j = (kind == IntervalKind::CC ? i : i + 1); j < m; ++j) {
					// candidate corner at (lo, hi) = (crit[i], crit[j])
					ExactCoord x_in, x_out, y_in, y_out;
					if (hi_closed(kind)) {
						x_in = ExactCoord::atan_of(ExtRat(grid[j + 1]));
						x_out = ExactCoord::atan_of(ExtRat(grid[j]));
					} else {
						x_in = pi_minus(ExactCoord::atan_of(ExtRat(grid[j])));
						x_out = pi_minus(ExactCoord::atan_of(ExtRat(grid[j + 1])));
					}
					if (lo_closed(kind)) {
						y_in = ExactCoord::atan_of(ExtRat(grid[i]));
						y_out = ExactCoord::atan_of(ExtRat(grid[i + 1]));
					} else {
						y_in = neg_pi_minus(ExactCoord::atan_of(ExtRat(grid[i + 1])));
						y_out = neg_pi_minus(ExactCoord::atan_of(ExtRat(grid[i])));
					}
					auto shift = [&](ExactCoord x, ExactCoord y) {
						StripPoint u = t_apply(StripPoint{x, y}, -deg);
						return d_at(u.x, u.y);
					};
					int count = shift(x_in, y_in) - shift(x_out, y_in) - shift(x_in, y_out) +
					            shift(x_out, y_out);
					CanonicalPoint c = interval_point(kind, ExtRat(crit[i]), ExtRat(crit[j]), deg);
					if (deg > 0) {
						CanonicalPoint below = c;
						below.deg = deg - 1;
						auto it = found.find(below);
						if (it != found.end()) count -= it->second;
					}
					if (count < 0)
						fail(errc::internal_error, "negative block multiplicity from corner counts");
					if (count > 0) {
						if (deg > 1)
							fail(errc::internal_error, "graph diagram with a block above degree 1");
						found[c] = count;
					}
				}
			}
		}
	}
	D.points = std::move(found);
	return D;
}

int evaluate_diagram(const Diagram& D, const StripPoint& u) {
	if (!in_interior(u)) return 0;
	int total = 0;
	for (const auto& [pt, mult] : D.points)
		if (hom_nonzero(u, from_canonical(pt))) total += mult;
	return total;
}

} // namespace sheafline
