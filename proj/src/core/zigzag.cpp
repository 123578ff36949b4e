#include "core/zigzag.hpp"

#include <algorithm>

namespace sheafline {

int Stratification::cut_index(const Rational& v) const {
	auto it = std::lower_bound(cuts.begin(), cuts.end(), v);
	if (it == cuts.end() || !(*it == v)) return -1;
	return (int)(it - cuts.begin());
}

CanonicalPoint range_to_interval(const Stratification& st, const StratumRange& r, int deg) {
	require(r.a >= 0 && r.a <= r.b && r.b < st.count(), "stratum range out of bounds");
	CanonicalPoint c;
	c.deg = deg;
	bool lo_cl, hi_cl;
	if (st.is_point(r.a)) {
		lo_cl = true;
		c.lo = st.cuts[(r.a - 1) / 2];
	} else {
		lo_cl = false;
		c.lo = r.a == 0 ? ExtRat::minus_inf() : ExtRat(st.cuts[r.a / 2 - 1]);
	}
	if (st.is_point(r.b)) {
		hi_cl = true;
		c.hi = st.cuts[(r.b - 1) / 2];
	} else {
		hi_cl = false;
		c.hi = r.b == st.count() - 1 ? ExtRat::plus_inf() : ExtRat(st.cuts[r.b / 2]);
	}
	c.kind = make_kind(lo_cl, hi_cl);
	validate(c);
	return c;
}

StratumRange interval_to_range(const Stratification& st, const CanonicalPoint& c) {
	StratumRange r;
	if (lo_closed(c.kind)) {
		int i = st.cut_index(c.lo.q);
		require(i >= 0, "interval endpoint not a cut");
		r.a = 2 * i + 1;
	} else if (c.lo.kind == ExtRat::neg_inf) {
		r.a = 0;
	} else {
		int i = st.cut_index(c.lo.q);
		require(i >= 0, "interval endpoint not a cut");
		r.a = 2 * i + 2;
	}
	if (hi_closed(c.kind)) {
		int i = st.cut_index(c.hi.q);
		require(i >= 0, "interval endpoint not a cut");
		r.b = 2 * i + 1;
	} else if (c.hi.kind == ExtRat::pos_inf) {
		r.b = st.count() - 1;
	} else {
		int i = st.cut_index(c.hi.q);
		require(i >= 0, "interval endpoint not a cut");
		r.b = 2 * i;
	}
	require(r.a <= r.b, "empty stratum range");
	return r;
}

int Rep::total_dim() const {
	int t = 0;
	for (int d : dim) t += d;
	return t;
}

Rep zero_rep(const Stratification& st, int p) {
	Rep r;
	r.p = p;
	r.dim.assign(st.count(), 0);
	int k = (int)st.cuts.size();
	r.lmap.assign(k, Mat(0, 0, p));
	r.rmap.assign(k, Mat(0, 0, p));
	return r;
}

Rep interval_rep(const Stratification& st, const StratumRange& r, int p) {
	Rep m = zero_rep(st, p);
	for (int s = r.a; s <= r.b; ++s) m.dim[s] = 1;
	int k = (int)st.cuts.size();
	for (int c = 0; c < k; ++c) {
		int pt = 2 * c + 1;
		m.lmap[c] = Mat(m.dim[pt - 1], m.dim[pt], p);
		m.rmap[c] = Mat(m.dim[pt + 1], m.dim[pt], p);
		if (m.dim[pt] && m.dim[pt - 1]) m.lmap[c].at(0, 0) = 1;
		if (m.dim[pt] && m.dim[pt + 1]) m.rmap[c].at(0, 0) = 1;
	}
	return m;
}

Rep direct_sum(const std::vector<const Rep*>& parts, const Stratification& st, int p) {
	Rep out = zero_rep(st, p);
	for (const Rep* r : parts)
		for (int s = 0; s < st.count(); ++s) out.dim[s] += r->dim[s];
	int k = (int)st.cuts.size();
	for (int c = 0; c < k; ++c) {
		int pt = 2 * c + 1;
		Mat L(out.dim[pt - 1], out.dim[pt], p), R(out.dim[pt + 1], out.dim[pt], p);
		int ro_l = 0, ro_r = 0, co = 0;
		for (const Rep* r : parts) {
			for (int i = 0; i < r->dim[pt - 1]; ++i)
				for (int j = 0; j < r->dim[pt]; ++j) L.at(ro_l + i, co + j) = r->lmap[c].at(i, j);
			for (int i = 0; i < r->dim[pt + 1]; ++i)
				for (int j = 0; j < r->dim[pt]; ++j) R.at(ro_r + i, co + j) = r->rmap[c].at(i, j);
			ro_l += r->dim[pt - 1];
			ro_r += r->dim[pt + 1];
			co += r->dim[pt];
		}
		out.lmap[c] = L;
		out.rmap[c] = R;
	}
	return out;
}

RepHom rep_hom_zero(const Rep& src, const Rep& dst) {
	RepHom f;
	for (int s = 0; s < src.strata(); ++s) f.push_back(Mat(dst.dim[s], src.dim[s], src.p));
	return f;
}

RepHom rep_hom_id(const Rep& a) {
	RepHom f;
	for (int s = 0; s < a.strata(); ++s) f.push_back(Mat::identity(a.dim[s], a.p));
	return f;
}

RepHom compose(const Rep&, const Rep&, const Rep&, const RepHom& g, const RepHom& f) {
	RepHom h;
	for (size_t s = 0; s < f.size(); ++s) h.push_back(mul(g[s], f[s]));
	return h;
}

RepHom add(const RepHom& f, const RepHom& g) {
	RepHom h;
	for (size_t s = 0; s < f.size(); ++s) h.push_back(add(f[s], g[s]));
	return h;
}

RepHom scale_hom(const RepHom& f, int c) {
	RepHom h;
	for (const auto& m : f) h.push_back(scale(m, c));
	return h;
}

bool is_zero(const RepHom& f) {
	for (const auto& m : f)
		if (!m.is_zero()) return false;
	return true;
}

bool hom_commutes(const Rep& src, const Rep& dst, const RepHom& f) {
	int k = (int)src.lmap.size();
	for (int c = 0; c < k; ++c) {
		int pt = 2 * c + 1;
		if (!(mul(dst.lmap[c], f[pt]) == mul(f[pt - 1], src.lmap[c]))) return false;
		if (!(mul(dst.rmap[c], f[pt]) == mul(f[pt + 1], src.rmap[c]))) return false;
	}
	return true;
}

int rep_hom_len(const Rep& src, const Rep& dst) {
	int n = 0;
	for (int s = 0; s < src.strata(); ++s) n += src.dim[s] * dst.dim[s];
	return n;
}

std::vector<int> vec_rep_hom(const Rep& src, const Rep& dst, const RepHom& f) {
	std::vector<int> v;
	v.reserve(rep_hom_len(src, dst));
	for (int s = 0; s < src.strata(); ++s)
		for (int i = 0; i < dst.dim[s]; ++i)
			for (int j = 0; j < src.dim[s]; ++j) v.push_back(f[s].at(i, j));
	return v;
}

RepHom unvec_rep_hom(const Rep& src, const Rep& dst, const std::vector<int>& v) {
	RepHom f = rep_hom_zero(src, dst);
	size_t idx = 0;
	for (int s = 0; s < src.strata(); ++s)
		for (int i = 0; i < dst.dim[s]; ++i)
			for (int j = 0; j < src.dim[s]; ++j) f[s].at(i, j) = v[idx++];
	return f;
}

std::vector<RepHom> hom_space(const Rep& src, const Rep& dst) {
	int p = src.p;
	int n = rep_hom_len(src, dst);
	if (n == 0) return {};
	// commutation constraints per cut and side
	std::vector<std::vector<int>> rows;
	auto add_constraints = [&](int c, bool left) {
		int pt = 2 * c + 1;
		int open = left ? pt - 1 : pt + 1;
		const Mat& A = left ? src.lmap[c] : src.rmap[c];
		const Mat& B = left ? dst.lmap[c] : dst.rmap[c];
		// B * f_pt - f_open * A = 0 : one row per (i, j) of the result
		for (int i = 0; i < B.rows; ++i)
			for (int j = 0; j < src.dim[pt]; ++j) {
				std::vector<int> row(n, 0);
				// offsets of f_pt and f_open inside the flat layout
				auto offset = [&](int stratum) {
					int off = 0;
					for (int s = 0; s < stratum; ++s) off += src.dim[s] * dst.dim[s];
					return off;
				};
				int off_pt = offset(pt), off_open = offset(open);
				for (int t = 0; t < dst.dim[pt]; ++t)
					row[off_pt + t * src.dim[pt] + j] =
					    fp_normalize(row[off_pt + t * src.dim[pt] + j] + B.at(i, t), p);
				for (int t = 0; t < src.dim[open]; ++t)
					row[off_open + i * src.dim[open] + t] =
					    fp_normalize(row[off_open + i * src.dim[open] + t] - A.at(t, j), p);
				bool nz = false;
				for (int x : row) nz = nz || x;
				if (nz) rows.push_back(std::move(row));
			}
	};
	for (size_t c = 0; c < src.lmap.size(); ++c) {
		add_constraints((int)c, true);
		add_constraints((int)c, false);
	}
	Mat constraints((int)rows.size(), n, p);
	for (size_t r = 0; r < rows.size(); ++r)
		for (int j = 0; j < n; ++j) constraints.at((int)r, j) = rows[r][j];
	Mat basis = nullspace(constraints);
	std::vector<RepHom> out;
	for (int b = 0; b < basis.cols; ++b) {
		std::vector<int> v(n);
		for (int i = 0; i < n; ++i) v[i] = basis.at(i, b);
		out.push_back(unvec_rep_hom(src, dst, v));
	}
	return out;
}

namespace {

// scalar of a rep endomorphism of an interval module (End = F)
int interval_endo_scalar(const RepHom& e, const Rep& interval) {
	for (int s = 0; s < interval.strata(); ++s)
		if (interval.dim[s]) return e[s].at(0, 0);
	require(false, "scalar of an empty interval");
	return 0;
}

// basis matrices of ker(e_s) per stratum
std::vector<Mat> kernel_basis(const Rep& M, const RepHom& e) {
	std::vector<Mat> out;
	for (int s = 0; s < M.strata(); ++s) out.push_back(nullspace(e[s]));
	return out;
}

} // namespace

std::vector<IntervalSummand> split_intervals(const Stratification& st, const Rep& M0) {
	std::vector<IntervalSummand> out;
	int p = M0.p;
	Rep W = M0;
	// embedding of W into M0, per stratum
	std::vector<Mat> embed;
	for (int s = 0; s < M0.strata(); ++s) embed.push_back(Mat::identity(M0.dim[s], p));

	int guard = M0.total_dim() + 4;
	while (!W.is_zero()) {
		require(--guard > 0, "interval splitting does not terminate");
		bool split_found = false;
		int ns = st.count();
		for (int a = 0; a < ns && !split_found; ++a) {
			if (!W.dim[a]) continue;
			for (int b = a; b < ns && !split_found; ++b) {
				if (!W.dim[b]) break; // candidate support must be contiguous
				StratumRange r{a, b};
				Rep I = interval_rep(st, r, p);
				auto to_W = hom_space(I, W);
				if (to_W.empty()) continue;
				auto from_W = hom_space(W, I);
				if (from_W.empty()) continue;
				for (const auto& phi : to_W) {
					for (const auto& psi : from_W) {
						RepHom comp = compose(I, W, I, psi, phi);
						int sc = interval_endo_scalar(comp, I);
						if (!sc) continue;
						// e = phi . psi / sc is an idempotent with image ~ I
						RepHom e = scale_hom(compose(W, I, W, phi, psi), fp_inv(sc, p));
						IntervalSummand summand;
						summand.range = r;
						summand.incl = rep_hom_zero(I, M0);
						for (int s = 0; s < ns; ++s)
							summand.incl[s] = mul(embed[s], scale(phi[s], fp_inv(sc, p)));
						out.push_back(summand);
						// restrict to ker(e)
						std::vector<Mat> kb = kernel_basis(W, e);
						Rep W2 = zero_rep(st, p);
						std::vector<Mat> embed2(ns);
						for (int s = 0; s < ns; ++s) {
							W2.dim[s] = kb[s].cols;
							embed2[s] = mul(embed[s], kb[s]);
						}
						for (size_t c = 0; c < st.cuts.size(); ++c) {
							int pt = 2 * (int)c + 1;
							auto restrict_map = [&](const Mat& m, int open) {
								auto X = solve(kb[open], mul(m, kb[pt]));
								require(X.has_value(), "kernel of an idempotent is not a subrepresentation");
								return *X;
							};
							W2.lmap[c] = restrict_map(W.lmap[c], pt - 1);
							W2.rmap[c] = restrict_map(W.rmap[c], pt + 1);
						}
						W = std::move(W2);
						embed = std::move(embed2);
						split_found = true;
						break;
					}
					if (split_found) break;
				}
			}
		}
		require(split_found || W.is_zero(), "no interval summand found in a nonzero representation");
	}
	return out;
}

int interval_multiplicity_by_rank(const Stratification& st, const Rep& M, const StratumRange& r) {
	auto gen_rank = [&](int a, int b) -> int {
		if (a < 0 || b >= st.count()) return 0;
		int p = M.p;
		// limit: compatible tuples over strata a..b
		int total = 0;
		std::vector<int> off(st.count() + 1, 0);
		for (int s = a; s <= b; ++s) off[s] = total, total += M.dim[s];
		// arrows inside the range
		std::vector<std::tuple<int, int, const Mat*>> arrows; // (point, open, map)
		for (size_t c = 0; c < st.cuts.size(); ++c) {
			int pt = 2 * (int)c + 1;
			if (pt >= a && pt <= b) {
				if (pt - 1 >= a) arrows.push_back({pt, pt - 1, &M.lmap[c]});
				if (pt + 1 <= b) arrows.push_back({pt, pt + 1, &M.rmap[c]});
			}
		}
		int rows = 0;
		for (auto& a : arrows) rows += M.dim[std::get<1>(a)];
		Mat L(rows, total, p);
		int ro = 0;
		for (auto& [pt, open, m] : arrows) {
			for (int i = 0; i < M.dim[open]; ++i) {
				for (int j = 0; j < M.dim[pt]; ++j) L.at(ro + i, off[pt] + j) = m->at(i, j);
				L.at(ro + i, off[open] + i) = fp_normalize(L.at(ro + i, off[open] + i) - 1, p);
			}
			ro += M.dim[open];
		}
		Mat lim = nullspace(L);
		// colimit: coker of sum of (incl_target . map - incl_source)
		int acols = 0;
		for (auto& a : arrows) acols += M.dim[std::get<0>(a)];
		Mat R(total, acols, p);
		int co = 0;
		for (auto& [pt, open, m] : arrows) {
			for (int j = 0; j < M.dim[pt]; ++j) {
				for (int i = 0; i < M.dim[open]; ++i) R.at(off[open] + i, co + j) = m->at(i, j);
				R.at(off[pt] + j, co + j) = fp_normalize(R.at(off[pt] + j, co + j) - 1, p);
			}
			co += M.dim[pt];
		}
		// rank of lim -> colim; the canonical map factors through any single
		// object of the connected range, so embed the a-components only
		Mat both(total, R.cols + lim.cols, p);
		for (int i = 0; i < total; ++i)
			for (int j = 0; j < R.cols; ++j) both.at(i, j) = R.at(i, j);
		for (int i = 0; i < M.dim[a]; ++i)
			for (int j = 0; j < lim.cols; ++j) both.at(off[a] + i, R.cols + j) = lim.at(off[a] + i, j);
		return rank(both) - rank(R);
	};
	return gen_rank(r.a, r.b) - gen_rank(r.a - 1, r.b) - gen_rank(r.a, r.b + 1) +
	       gen_rank(r.a - 1, r.b + 1);
}

void check_complex(const Stratification& st, const RepComplex& C) {
	for (size_t i = 0; i + 1 < C.terms.size(); ++i) {
		require(hom_commutes(C.terms[i], C.terms[i + 1], C.diff[i]), "differential is not a rep hom");
		if (i + 2 < C.terms.size())
			require(is_zero(compose(C.terms[i], C.terms[i + 1], C.terms[i + 2],
			                        C.diff[i + 1], C.diff[i])),
			        "differential does not square to zero");
	}
	(void)st;
}

ChainMapVec chain_map_zero(const RepComplex& X, const RepComplex& Y) {
	ChainMapVec f;
	for (int i = 0; i < X.size(); ++i) f.push_back(rep_hom_zero(X.terms[i], Y.terms[i]));
	return f;
}

bool chain_commutes(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f) {
	for (int i = 0; i < X.size(); ++i) {
		if (!hom_commutes(X.terms[i], Y.terms[i], f[i])) return false;
		if (i + 1 < X.size()) {
			RepHom a = compose(X.terms[i], X.terms[i + 1], Y.terms[i + 1], f[i + 1], X.diff[i]);
			RepHom b = compose(X.terms[i], Y.terms[i], Y.terms[i + 1], Y.diff[i], f[i]);
			if (!is_zero(add(a, scale_hom(b, X.terms[i].p - 1)))) return false;
		}
	}
	return true;
}

ChainMapVec compose_chain(const RepComplex& X, const RepComplex& Y, const RepComplex& Z,
                          const ChainMapVec& g, const ChainMapVec& f) {
	ChainMapVec h;
	for (int i = 0; i < X.size(); ++i)
		h.push_back(compose(X.terms[i], Y.terms[i], Z.terms[i], g[i], f[i]));
	return h;
}

ChainMapVec add_chain(const ChainMapVec& f, const ChainMapVec& g) {
	ChainMapVec h;
	for (size_t i = 0; i < f.size(); ++i) h.push_back(add(f[i], g[i]));
	return h;
}

ChainMapVec scale_chain(const ChainMapVec& f, int c) {
	ChainMapVec h;
	for (const auto& x : f) h.push_back(scale_hom(x, c));
	return h;
}

bool chain_is_zero(const ChainMapVec& f) {
	for (const auto& x : f)
		if (!is_zero(x)) return false;
	return true;
}

int chain_vec_len(const RepComplex& X, const RepComplex& Y) {
	int n = 0;
	for (int i = 0; i < X.size(); ++i) n += rep_hom_len(X.terms[i], Y.terms[i]);
	return n;
}

std::vector<int> vec_chain(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f) {
	std::vector<int> v;
	for (int i = 0; i < X.size(); ++i) {
		auto part = vec_rep_hom(X.terms[i], Y.terms[i], f[i]);
		v.insert(v.end(), part.begin(), part.end());
	}
	return v;
}

ChainMapVec unvec_chain(const RepComplex& X, const RepComplex& Y, const std::vector<int>& v) {
	ChainMapVec f;
	size_t idx = 0;
	for (int i = 0; i < X.size(); ++i) {
		int len = rep_hom_len(X.terms[i], Y.terms[i]);
		std::vector<int> part(v.begin() + idx, v.begin() + idx + len);
		idx += len;
		f.push_back(unvec_rep_hom(X.terms[i], Y.terms[i], part));
	}
	return f;
}

std::vector<ChainMapVec> chain_map_space(const RepComplex& X, const RepComplex& Y) {
	int p = X.terms.empty() ? 2 : X.terms[0].p;
	// degreewise rep-hom bases, then impose the commutation with differentials
	std::vector<std::vector<RepHom>> bases;
	std::vector<int> offsets{0};
	for (int i = 0; i < X.size(); ++i) {
		bases.push_back(hom_space(X.terms[i], Y.terms[i]));
		offsets.push_back(offsets.back() + (int)bases.back().size());
	}
	int unknowns = offsets.back();
	if (unknowns == 0) return {};
	// constraints: for each i: Y.d . f_i - f_{i+1} . X.d = 0, in the flat
	// coordinates of rep maps X.terms[i] -> Y.terms[i+1]
	std::vector<std::vector<int>> rows;
	for (int i = 0; i + 1 < X.size(); ++i) {
		int len = rep_hom_len(X.terms[i], Y.terms[i + 1]);
		if (len == 0) continue;
		std::vector<std::vector<int>> cols(unknowns);
		bool any = false;
		for (size_t b = 0; b < bases[i].size(); ++b) {
			RepHom v = compose(X.terms[i], Y.terms[i], Y.terms[i + 1], Y.diff[i], bases[i][b]);
			cols[offsets[i] + b] = vec_rep_hom(X.terms[i], Y.terms[i + 1], v);
			any = true;
		}
		for (size_t b = 0; b < bases[i + 1].size(); ++b) {
			RepHom v = compose(X.terms[i], X.terms[i + 1], Y.terms[i + 1], bases[i + 1][b], X.diff[i]);
			cols[offsets[i + 1] + b] = vec_rep_hom(X.terms[i], Y.terms[i + 1], scale_hom(v, p - 1));
			any = true;
		}
		if (!any) continue;
		for (int r = 0; r < len; ++r) {
			std::vector<int> row(unknowns, 0);
			bool nz = false;
			for (int u = 0; u < unknowns; ++u) {
				if (cols[u].empty()) continue;
				row[u] = cols[u][r];
				nz = nz || row[u];
			}
			if (nz) rows.push_back(std::move(row));
		}
	}
	Mat constraints((int)rows.size(), unknowns, p);
	for (size_t r = 0; r < rows.size(); ++r)
		for (int j = 0; j < unknowns; ++j) constraints.at((int)r, j) = rows[r][j];
	Mat basis = nullspace(constraints);
	std::vector<ChainMapVec> out;
	for (int col = 0; col < basis.cols; ++col) {
		ChainMapVec f = chain_map_zero(X, Y);
		for (int i = 0; i < X.size(); ++i)
			for (size_t b = 0; b < bases[i].size(); ++b) {
				int c = basis.at(offsets[i] + (int)b, col);
				if (c) f[i] = add(f[i], scale_hom(bases[i][b], c));
			}
		require(chain_commutes(X, Y, f), "chain map space solver produced a non-chain map");
		out.push_back(std::move(f));
	}
	return out;
}

RowSpace null_homotopic_space(const RepComplex& X, const RepComplex& Y) {
	int p = X.terms.empty() ? 2 : X.terms[0].p;
	int n = chain_vec_len(X, Y);
	RowSpace space(n, p);
	if (n == 0) return space;
	// homotopy components h_i : X.terms[i] -> Y.terms[i-1]; the boundary
	// d_Y h + h d_X of each rep-hom basis element spans the subspace
	for (int i = 0; i < X.size(); ++i) {
		if (i == 0) continue;
		for (const RepHom& h : hom_space(X.terms[i], Y.terms[i - 1])) {
			ChainMapVec b = chain_map_zero(X, Y);
			// d_Y^{i-1} . h lands in degree slot i
			b[i] = compose(X.terms[i], Y.terms[i - 1], Y.terms[i], Y.diff[i - 1], h);
			// h . d_X^{i-1} lands in degree slot i-1
			b[i - 1] = add(b[i - 1], compose(X.terms[i - 1], X.terms[i], Y.terms[i - 1], h, X.diff[i - 1]));
			space.insert(vec_chain(X, Y, b));
		}
	}
	return space;
}

int hom_dim_mod_homotopy(const RepComplex& X, const RepComplex& Y) {
	auto maps = chain_map_space(X, Y);
	RowSpace span = null_homotopic_space(X, Y);
	// dim(chain maps / boundaries) = dim span(maps + boundaries) - dim boundaries
	int extra = 0;
	for (const auto& f : maps)
		if (span.insert(vec_chain(X, Y, f))) ++extra;
	return extra;
}

bool homotopic(const RepComplex& X, const RepComplex& Y, const ChainMapVec& f, const ChainMapVec& g) {
	RowSpace boundaries = null_homotopic_space(X, Y);
	return boundaries.contains(vec_chain(X, Y, add_chain(f, scale_chain(g, X.terms[0].p - 1))));
}

ConeData mapping_cone(const Stratification& st, const RepComplex& X, const RepComplex& Y,
                      const ChainMapVec& f) {
	int p = X.terms[0].p;
	require(X.size() == Y.size() && X.window_lo == Y.window_lo, "cone over mismatched windows");
	ConeData out;
	out.cone.window_lo = X.window_lo;
	int n = X.size();
	for (int i = 0; i < n; ++i) {
		const Rep* xs = i + 1 < n ? &X.terms[i + 1] : nullptr;
		Rep shifted = xs ? *xs : zero_rep(st, p);
		out.cone.terms.push_back(direct_sum({&shifted, &Y.terms[i]}, st, p));
	}
	for (int i = 0; i + 1 < n; ++i) {
		RepHom d = rep_hom_zero(out.cone.terms[i], out.cone.terms[i + 1]);
		for (int s = 0; s < st.count(); ++s) {
			int x_rows = i + 2 < n ? X.terms[i + 2].dim[s] : 0;
			int x_cols = X.terms[i + 1].dim[s];
			int y_rows = Y.terms[i + 1].dim[s];
			// block [-d_X, 0; f, d_Y]
			if (i + 2 < n)
				for (int r = 0; r < x_rows; ++r)
					for (int c = 0; c < x_cols; ++c)
						d[s].at(r, c) = fp_normalize(-X.diff[i + 1][s].at(r, c), p);
			for (int r = 0; r < y_rows; ++r) {
				for (int c = 0; c < x_cols; ++c) d[s].at(x_rows + r, c) = f[i + 1][s].at(r, c);
				for (int c = 0; c < Y.terms[i].dim[s]; ++c)
					d[s].at(x_rows + r, x_cols + c) = Y.diff[i][s].at(r, c);
			}
		}
		out.cone.diff.push_back(std::move(d));
	}
	// inclusion of Y
	out.include_target = chain_map_zero(Y, out.cone);
	for (int i = 0; i < n; ++i) {
		for (int s = 0; s < st.count(); ++s) {
			int off = i + 1 < n ? X.terms[i + 1].dim[s] : 0;
			for (int r = 0; r < Y.terms[i].dim[s]; ++r)
				out.include_target[i][s].at(off + r, r) = 1;
		}
	}
	// projection onto the shifted X part
	for (int i = 0; i < n; ++i) {
		const Rep& xs = i + 1 < n ? X.terms[i + 1] : X.terms[0];
		Rep target = i + 1 < n ? xs : zero_rep(st, p);
		RepHom pr = rep_hom_zero(out.cone.terms[i], target);
		for (int s = 0; s < st.count(); ++s)
			for (int r = 0; r < target.dim[s]; ++r) pr[s].at(r, r) = 1;
		out.project_source.push_back(std::move(pr));
	}
	check_complex(st, out.cone);
	require(chain_commutes(Y, out.cone, out.include_target), "cone inclusion is not a chain map");
	return out;
}

CohomologySlot cohomology_slot(const Stratification& st, const RepComplex& C, int i) {
	int p = C.terms[0].p;
	CohomologySlot out;
	out.H = zero_rep(st, p);
	int ns = st.count();
	std::vector<Mat> zbasis(ns), bbasis(ns), full_inv(ns);
	for (int s = 0; s < ns; ++s) {
		int dim = C.terms[i].dim[s];
		// cycles
		if (i + 1 < C.size()) {
			zbasis[s] = nullspace(C.diff[i][s]);
		} else {
			zbasis[s] = Mat::identity(dim, p);
		}
		// boundaries, expressed inside the cycle space
		Mat b_in_z(zbasis[s].cols, 0, p);
		if (i > 0 && zbasis[s].cols > 0) {
			const Mat& d_prev = C.diff[i - 1][s];
			auto coords = solve(zbasis[s], d_prev);
			require(coords.has_value(), "boundaries are not cycles");
			Mat reduced = *coords;
			Mat rr = reduced;
			std::vector<int> piv = rref(rr);
			Mat cols(zbasis[s].cols, (int)piv.size(), p);
			// pick independent boundary columns from the reduced matrix
			{
				Mat work = reduced;
				RowSpace seen(zbasis[s].cols, p);
				int idx = 0;
				for (int c = 0; c < work.cols && idx < (int)piv.size(); ++c) {
					std::vector<int> col(zbasis[s].cols);
					for (int r = 0; r < zbasis[s].cols; ++r) col[r] = work.at(r, c);
					if (seen.insert(col)) {
						for (int r = 0; r < zbasis[s].cols; ++r) cols.at(r, idx) = work.at(r, c);
						++idx;
					}
				}
				require(idx == (int)piv.size(), "boundary basis extraction failed");
			}
			b_in_z = cols;
		}
		// extend boundary basis to a basis of the cycle space; the added
		// columns represent cohomology classes
		int zdim = zbasis[s].cols;
		RowSpace span(zdim, p);
		std::vector<std::vector<int>> hcols;
		for (int c = 0; c < b_in_z.cols; ++c) {
			std::vector<int> col(zdim);
			for (int r = 0; r < zdim; ++r) col[r] = b_in_z.at(r, c);
			require(span.insert(col), "boundary basis not independent");
		}
		for (int e = 0; e < zdim && (int)hcols.size() < zdim - b_in_z.cols; ++e) {
			std::vector<int> col(zdim, 0);
			col[e] = 1;
			if (span.insert(col)) hcols.push_back(col);
		}
		int hdim = (int)hcols.size();
		out.H.dim[s] = hdim;
		// lift: H-basis as ambient columns
		Mat lift(C.terms[i].dim[s], hdim, p);
		for (int c = 0; c < hdim; ++c)
			for (int r = 0; r < C.terms[i].dim[s]; ++r) {
				long long acc = 0;
				for (int t = 0; t < zdim; ++t) acc += (long long)zbasis[s].at(r, t) * hcols[c][t];
				lift.at(r, c) = fp_normalize(acc, p);
			}
		out.lift.push_back(lift);
		// projection: solve [B | H | K] coordinates, H block
		Mat fullbasis(C.terms[i].dim[s], C.terms[i].dim[s], p);
		int colidx = 0;
		RowSpace ambient(C.terms[i].dim[s], p);
		auto push_col = [&](const std::vector<int>& col) {
			if (!ambient.insert(col)) return false;
			for (int r = 0; r < C.terms[i].dim[s]; ++r) fullbasis.at(r, colidx) = col[r];
			++colidx;
			return true;
		};
		// boundaries in ambient coordinates first
		for (int c = 0; c < b_in_z.cols; ++c) {
			std::vector<int> col(C.terms[i].dim[s], 0);
			for (int r = 0; r < C.terms[i].dim[s]; ++r) {
				long long acc = 0;
				for (int t = 0; t < zdim; ++t) acc += (long long)zbasis[s].at(r, t) * b_in_z.at(t, c);
				col[r] = fp_normalize(acc, p);
			}
			require(push_col(col), "dependent boundary column");
		}
		int hstart = colidx;
		for (int c = 0; c < hdim; ++c) {
			std::vector<int> col(C.terms[i].dim[s]);
			for (int r = 0; r < C.terms[i].dim[s]; ++r) col[r] = lift.at(r, c);
			require(push_col(col), "dependent cohomology column");
		}
		for (int e = 0; e < C.terms[i].dim[s] && colidx < C.terms[i].dim[s]; ++e) {
			std::vector<int> col(C.terms[i].dim[s], 0);
			col[e] = 1;
			push_col(col);
		}
		require(colidx == C.terms[i].dim[s], "ambient basis incomplete");
		Mat inv = colidx ? inverse(fullbasis) : Mat(0, 0, p);
		Mat proj(hdim, C.terms[i].dim[s], p);
		for (int r = 0; r < hdim; ++r)
			for (int c = 0; c < C.terms[i].dim[s]; ++c) proj.at(r, c) = inv.at(hstart + r, c);
		out.project.push_back(proj);
	}
	// induced maps of the cohomology representation
	for (size_t c = 0; c < st.cuts.size(); ++c) {
		int pt = 2 * (int)c + 1;
		out.H.lmap[c] = mul(out.project[pt - 1], mul(C.terms[i].lmap[c], out.lift[pt]));
		out.H.rmap[c] = mul(out.project[pt + 1], mul(C.terms[i].rmap[c], out.lift[pt]));
	}
	return out;
}

} // namespace sheafline
