#include "core/blockfn.hpp"

#include <algorithm>
#include <map>

namespace sheafline {

namespace {

std::vector<ExactCoord> axis_samples(std::vector<ExactCoord> lines) {
	auto less = [](const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) < 0; };
	std::sort(lines.begin(), lines.end(), less);
	lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
	std::vector<ExactCoord> samples;
	for (size_t i = 0; i + 1 < lines.size(); ++i)
		samples.push_back(coord_between(lines[i], lines[i + 1]));
	return samples;
}

} // namespace

int nat_dim(const DcatObject& A, const DcatObject& B) {
	int p = A.p;
	// sample one point inside every cell of the arrangement spanned by the
	// support boundaries of both objects
	std::vector<ExactCoord> xlines, ylines;
	for (const DcatObject* o : {&A, &B})
		for (const auto& s : o->summands) {
			StripPoint q = from_canonical(s);
			StripPoint q1 = t_apply(q, -1);
			// support boundaries: x in [x_v, pi - y_v), y in (-pi - x_v, y_v]
			xlines.push_back(q.x);
			xlines.push_back(pi_minus(q.y));
			ylines.push_back(q.y);
			ylines.push_back(neg_pi_minus(q.x));
			xlines.push_back(q1.x);
			ylines.push_back(q1.y);
		}
	std::vector<ExactCoord> xs = axis_samples(xlines), ys = axis_samples(ylines);
	// grid points with their functor fibers
	struct Node {
		StripPoint u;
		std::vector<int> fa, fb; // summand indices containing u
		int offset = 0;
	};
	std::vector<std::vector<int>> index((int)xs.size(), std::vector<int>((int)ys.size(), -1));
	std::vector<Node> nodes;
	int unknowns = 0;
	for (size_t xi = 0; xi < xs.size(); ++xi)
		for (size_t yi = 0; yi < ys.size(); ++yi) {
			StripPoint u{xs[xi], ys[yi]};
			if (!in_interior(u)) continue;
			Node n{u, h_basis(A, u), h_basis(B, u), unknowns};
			if (n.fa.empty() || n.fb.empty()) continue;
			index[xi][yi] = (int)nodes.size();
			unknowns += (int)n.fa.size() * (int)n.fb.size();
			nodes.push_back(std::move(n));
		}
	if (unknowns == 0) return 0;

	// internal map of a block functor between comparable points: the summand
	// contributes the identity iff its support contains both
	auto constraint_rows = [&](const Node* lower_opt, const Node& upper, const StripPoint& lo_pt,
	                           std::vector<std::vector<int>>& rows) {
		// naturality square between u' = upper.u and u = lo_pt:
		//   eta_u . resA(u' -> u) = resB(u' -> u) . eta_{u'}
		std::vector<int> fb_lo = h_basis(B, lo_pt);
		for (size_t r = 0; r < fb_lo.size(); ++r)
			for (size_t c = 0; c < upper.fa.size(); ++c) {
				std::vector<int> row(unknowns, 0);
				bool nz = false;
				// LHS: eta_u(row r, col position of upper summand if it survives)
				if (lower_opt) {
					int pos = -1;
					for (size_t i = 0; i < lower_opt->fa.size(); ++i)
						if (lower_opt->fa[i] == upper.fa[c]) pos = (int)i;
					if (pos >= 0) {
						row[lower_opt->offset + (int)r * (int)lower_opt->fa.size() + pos] = 1;
						nz = true;
					}
				}
				// RHS: resB . eta_{u'}: the B-summand of row r must contain u'
				int pos_up = -1;
				for (size_t j = 0; j < upper.fb.size(); ++j)
					if (upper.fb[j] == fb_lo[r]) pos_up = (int)j;
				if (pos_up >= 0) {
					int cell = upper.offset + pos_up * (int)upper.fa.size() + (int)c;
					row[cell] = fp_normalize(row[cell] - 1, p);
					nz = true;
				}
				if (nz) rows.push_back(std::move(row));
			}
	};

	std::vector<std::vector<int>> rows;
	for (size_t xi = 0; xi < xs.size(); ++xi)
		for (size_t yi = 0; yi < ys.size(); ++yi) {
			int id = index[xi][yi];
			if (id < 0) continue;
			const Node& upper = nodes[id];
			// steps down in the order: increase x, decrease y
			if (xi + 1 < xs.size()) {
				StripPoint lo{xs[xi + 1], ys[yi]};
				if (in_interior(lo)) {
					int lid = index[xi + 1][yi];
					constraint_rows(lid >= 0 ? &nodes[lid] : nullptr, upper, lo, rows);
				}
			}
			if (yi > 0) {
				StripPoint lo{xs[xi], ys[yi - 1]};
				if (in_interior(lo)) {
					int lid = index[xi][yi - 1];
					constraint_rows(lid >= 0 ? &nodes[lid] : nullptr, upper, lo, rows);
				}
			}
		}
	Mat constraints((int)rows.size(), unknowns, p);
	for (size_t r = 0; r < rows.size(); ++r)
		for (int c = 0; c < unknowns; ++c) constraints.at((int)r, c) = rows[r][c];
	return unknowns - rank(constraints);
}

Mat precompose_matrix(const DcatObject& X, const CanonicalPoint& a, const CanonicalPoint& b,
                      int scalar) {
	require(slot_allowed(b, a), "precomposition along a vanishing slot");
	std::vector<int> basis_a = h_basis(X, from_canonical(a));
	std::vector<int> basis_b = h_basis(X, from_canonical(b));
	Mat m((int)basis_b.size(), (int)basis_a.size(), X.p);
	for (size_t c = 0; c < basis_a.size(); ++c) {
		int j = basis_a[c];
		if (!slot_allowed(b, X.summands[j])) continue;
		for (size_t r = 0; r < basis_b.size(); ++r)
			if (basis_b[r] == j) m.at((int)r, (int)c) = fp_normalize(scalar, X.p);
	}
	return m;
}

bool cohomological_rectangle_ok(const Diagram& D, const TileRectangle& R) {
	DcatObject X;
	X.p = D.p;
	for (const auto& [pt, mult] : D.points)
		for (int i = 0; i < mult; ++i) X.summands.push_back(pt);
	int p = D.p;

	// tiles where anything lives
	int dmin = 0, dmax = 0;
	if (!D.points.empty()) {
		dmin = D.points.begin()->first.deg;
		dmax = D.points.rbegin()->first.deg;
	}
	// corners must be interior and share a tile
	for (const StripPoint* q : {&R.u, &R.v1, &R.v2, &R.w})
		if (!in_interior(*q)) return true; // degenerate rectangle: nothing to check
	int tile = tile_index(R.u);
	if (tile_index(R.v1) != tile || tile_index(R.v2) != tile || tile_index(R.w) != tile)
		return true;

	// the long sequence ... -> G(T^{-m}w) -> G(T^{-m}v1)+G(T^{-m}v2) ->
	// G(T^{-m}u) -> G(T^{-m-1}w) -> ... with precomposition matrices; the
	// connecting map uses the unique Hom slot, whose scalar does not affect
	// rank-level exactness
	auto pt_of = [&](const StripPoint& q, int m) { return to_canonical(t_apply(q, -m)); };
	int m_lo = tile - dmax - 2, m_hi = tile - dmin + 2; // window with zero margins
	struct Step {
		Mat mat;
		int dim_src;
	};
	std::vector<Mat> maps;
	std::vector<int> dims;
	for (int m = m_lo; m <= m_hi; ++m) {
		CanonicalPoint cu = pt_of(R.u, m), cv1 = pt_of(R.v1, m), cv2 = pt_of(R.v2, m),
		               cw = pt_of(R.w, m);
		int gw = h_eval(X, from_canonical(cw));
		int gv = h_eval(X, from_canonical(cv1)) + h_eval(X, from_canonical(cv2));
		int gu = h_eval(X, from_canonical(cu));
		dims.push_back(gw);
		dims.push_back(gv);
		dims.push_back(gu);
		// G(w) -> G(v1) (+) G(v2): components (+1, -1)
		Mat a1 = precompose_matrix(X, cw, cv1, 1);
		Mat a2 = precompose_matrix(X, cw, cv2, -1);
		Mat a(a1.rows + a2.rows, a1.cols, p);
		for (int r = 0; r < a1.rows; ++r)
			for (int c = 0; c < a1.cols; ++c) a.at(r, c) = a1.at(r, c);
		for (int r = 0; r < a2.rows; ++r)
			for (int c = 0; c < a2.cols; ++c) a.at(a1.rows + r, c) = a2.at(r, c);
		maps.push_back(a);
		// G(v1) (+) G(v2) -> G(u): components (+1, +1)
		Mat b1 = precompose_matrix(X, cv1, cu, 1);
		Mat b2 = precompose_matrix(X, cv2, cu, 1);
		Mat b(b1.rows, b1.cols + b2.cols, p);
		for (int r = 0; r < b1.rows; ++r) {
			for (int c = 0; c < b1.cols; ++c) b.at(r, c) = b1.at(r, c);
			for (int c = 0; c < b2.cols; ++c) b.at(r, b1.cols + c) = b2.at(r, c);
		}
		maps.push_back(b);
		// connecting G(u) -> G(T^{-1}w)
		CanonicalPoint cw_next = pt_of(R.w, m + 1);
		maps.push_back(precompose_matrix(X, cu, cw_next, 1));
	}
	// exactness along the window interior
	for (size_t k = 0; k + 1 < maps.size(); ++k) {
		if (!mul(maps[k + 1], maps[k]).is_zero()) return false;
		int middle = dims[k + 1];
		if (rank(maps[k]) + rank(maps[k + 1]) != middle) return false;
	}
	return true;
}

bool check_cohomological(const Diagram& D) {
	if (D.points.empty()) return true;
	// critical coordinate lines of the degree-0 tile positions
	std::vector<ExtRat> vals;
	for (const auto& [pt, mult] : D.points) {
		(void)mult;
		vals.push_back(pt.lo);
		vals.push_back(pt.hi);
	}
	std::vector<ExactCoord> xcands, ycands;
	for (const auto& v : vals) {
		ExactCoord c = ExactCoord::atan_of(v);
		xcands.push_back(c);
		if (v.kind != ExtRat::pos_inf) {
			// pi - arctan(v) only parses as a coordinate when v is finite or -inf
			xcands.push_back(pi_minus(c));
		}
		ycands.push_back(c);
		ycands.push_back(neg_pi_minus(c));
	}
	auto less = [](const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) < 0; };
	std::sort(xcands.begin(), xcands.end(), less);
	xcands.erase(std::unique(xcands.begin(), xcands.end()), xcands.end());
	std::sort(ycands.begin(), ycands.end(), less);
	ycands.erase(std::unique(ycands.begin(), ycands.end()), ycands.end());
	for (size_t x1 = 0; x1 < xcands.size(); ++x1)
		for (size_t x2 = x1 + 1; x2 < xcands.size(); ++x2)
			for (size_t y1 = 0; y1 < ycands.size(); ++y1)
				for (size_t y2 = y1 + 1; y2 < ycands.size(); ++y2) {
					TileRectangle R{{xcands[x2], ycands[y1]},
					                {xcands[x1], ycands[y1]},
					                {xcands[x2], ycands[y2]},
					                {xcands[x1], ycands[y2]}};
					if (!cohomological_rectangle_ok(D, R)) return false;
				}
	return true;
}

} // namespace sheafline
