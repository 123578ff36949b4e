#include "core/dcat.hpp"

#include <algorithm>

namespace sheafline {

bool operator==(const DcatObject& a, const DcatObject& b) {
	if (a.p != b.p || a.summands.size() != b.summands.size()) return false;
	for (size_t i = 0; i < a.summands.size(); ++i)
		if (a.summands[i] != b.summands[i]) return false;
	return true;
}

bool slot_allowed(const CanonicalPoint& from, const CanonicalPoint& to) {
	return hom_nonzero(from_canonical(from), from_canonical(to));
}

void validate(const DcatMorphism& f) {
	if (f.src.p != f.dst.p || f.entries.p != f.src.p)
		fail(errc::composition_error, "morphism with mixed characteristics");
	if (f.entries.rows != f.dst.size() || f.entries.cols != f.src.size())
		fail(errc::composition_error, "morphism matrix has wrong shape");
	for (int j = 0; j < f.entries.rows; ++j)
		for (int i = 0; i < f.entries.cols; ++i)
			if (f.entries.at(j, i) && !slot_allowed(f.src.summands[i], f.dst.summands[j]))
				fail(errc::composition_error, "nonzero entry on a vanishing Hom slot");
}

int hom_dim(const DcatObject& A, const DcatObject& B) {
	return (int)hom_slots(A, B).size();
}

std::vector<std::pair<int, int>> hom_slots(const DcatObject& A, const DcatObject& B) {
	std::vector<std::pair<int, int>> slots;
	std::vector<StripPoint> a_pts, b_pts;
	for (const auto& s : A.summands) a_pts.push_back(from_canonical(s));
	for (const auto& s : B.summands) b_pts.push_back(from_canonical(s));
	for (int j = 0; j < (int)b_pts.size(); ++j)
		for (int i = 0; i < (int)a_pts.size(); ++i)
			if (hom_nonzero(a_pts[i], b_pts[j])) slots.push_back({j, i});
	return slots;
}

DcatMorphism zero_morphism(const DcatObject& A, const DcatObject& B) {
	return DcatMorphism{A, B, Mat(B.size(), A.size(), A.p)};
}

DcatMorphism identity_morphism(const DcatObject& A) {
	return DcatMorphism{A, A, Mat::identity(A.size(), A.p)};
}

DcatMorphism compose(const DcatMorphism& g, const DcatMorphism& f) {
	if (!(g.src == f.dst)) fail(errc::composition_error, "source/target mismatch in composition");
	DcatMorphism h{f.src, g.dst, mul(g.entries, f.entries)};
	// a slot whose Hom space vanishes kills every composite through it
	for (int j = 0; j < h.entries.rows; ++j)
		for (int i = 0; i < h.entries.cols; ++i)
			if (h.entries.at(j, i) && !slot_allowed(h.src.summands[i], h.dst.summands[j]))
				h.entries.at(j, i) = 0;
	return h;
}

DcatMorphism add(const DcatMorphism& f, const DcatMorphism& g) {
	require(f.src == g.src && f.dst == g.dst, "sum of incompatible morphisms");
	return DcatMorphism{f.src, f.dst, add(f.entries, g.entries)};
}

DcatMorphism scale(const DcatMorphism& f, int c) {
	return DcatMorphism{f.src, f.dst, scale(f.entries, c)};
}

DcatObject shift(const DcatObject& A, int k) {
	DcatObject B;
	B.p = A.p;
	for (const auto& s : A.summands) {
		CanonicalPoint t = s;
		t.deg = s.deg - k; // T^k lowers the tile count of T^{-1} applications
		B.summands.push_back(t);
	}
	return B;
}

DcatMorphism shift(const DcatMorphism& f, int k) {
	return DcatMorphism{shift(f.src, k), shift(f.dst, k), f.entries};
}

DcatObject direct_sum(const DcatObject& A, const DcatObject& B) {
	DcatObject C = A;
	C.summands.insert(C.summands.end(), B.summands.begin(), B.summands.end());
	return C;
}

std::vector<int> h_basis(const DcatObject& A, const StripPoint& u) {
	std::vector<int> idx;
	if (!in_interior(u)) return idx;
	for (int i = 0; i < A.size(); ++i)
		if (hom_nonzero(u, from_canonical(A.summands[i]))) idx.push_back(i);
	return idx;
}

int h_eval(const DcatObject& A, const StripPoint& u) { return (int)h_basis(A, u).size(); }

Mat h_eval_mor(const DcatMorphism& f, const StripPoint& u) {
	std::vector<int> rows = h_basis(f.dst, u), cols = h_basis(f.src, u);
	Mat m((int)rows.size(), (int)cols.size(), f.src.p);
	for (size_t r = 0; r < rows.size(); ++r)
		for (size_t c = 0; c < cols.size(); ++c) m.at((int)r, (int)c) = f.entries.at(rows[r], cols[c]);
	return m;
}

// --- strict models ---

DcatContext::DcatContext(int p_, const std::vector<const DcatObject*>& objs) : p(p_) {
	std::vector<Rational> cuts;
	int dmin = 0, dmax = 0;
	bool any = false;
	for (const DcatObject* o : objs)
		for (const auto& s : o->summands) {
			if (s.lo.is_finite()) cuts.push_back(s.lo.q);
			if (s.hi.is_finite()) cuts.push_back(s.hi.q);
			dmin = any ? std::min(dmin, s.deg) : s.deg;
			dmax = any ? std::max(dmax, s.deg) : s.deg;
			any = true;
		}
	std::sort(cuts.begin(), cuts.end());
	cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
	strat.cuts = std::move(cuts);
	window_lo = dmin - 2;
	window_len = (dmax - dmin) + 5;
}

RepComplex DcatContext::zero_complex() const {
	RepComplex C;
	C.window_lo = window_lo;
	for (int i = 0; i < window_len; ++i) C.terms.push_back(zero_rep(strat, p));
	for (int i = 0; i + 1 < window_len; ++i)
		C.diff.push_back(rep_hom_zero(C.terms[i], C.terms[i + 1]));
	return C;
}

// The projectives of the representation category are the single open strata
// and the single stars (one point stratum with its two open neighbours).  An
// interval module resolves by one star per interior point stratum, glued with
// difference maps on the shared open strata, plus flank corrections at closed
// ends:  0 -> (flanks + overlaps) -> (+) stars -> M -> 0.
DcatContext::BlockData DcatContext::block_data(const CanonicalPoint& pt) const {
	StratumRange r = interval_to_range(strat, pt);
	BlockData out;
	out.module = interval_rep(strat, r, p);
	int slot0 = pt.deg - window_lo;
	require(slot0 >= 1 && slot0 < window_len, "summand degree outside the context window");
	out.C = zero_complex();
	std::vector<int> pts;
	for (int s = r.a; s <= r.b; ++s)
		if (strat.is_point(s)) pts.push_back(s);
	if (pts.empty()) {
		// a single open stratum is projective already
		require(r.a == r.b, "interval without point strata must be one stratum");
		out.C.terms[slot0] = out.module;
		out.cover = rep_hom_id(out.module);
		for (int i = 0; i + 1 < window_len; ++i)
			out.C.diff[i] = rep_hom_zero(out.C.terms[i], out.C.terms[i + 1]);
		check_complex(strat, out.C);
		return out;
	}
	std::vector<Rep> stars;
	for (int s : pts) stars.push_back(interval_rep(strat, {s - 1, s + 1}, p));
	std::vector<const Rep*> star_ptrs;
	for (const auto& s : stars) star_ptrs.push_back(&s);
	Rep P0 = direct_sum(star_ptrs, strat, p);
	// relation strata: left flank, overlaps between consecutive stars, right flank
	std::vector<int> rel;
	if (strat.is_point(r.a)) rel.push_back(r.a - 1);
	for (size_t i = 0; i + 1 < pts.size(); ++i) rel.push_back(pts[i] + 1);
	if (strat.is_point(r.b)) rel.push_back(r.b + 1);
	Rep P1 = zero_rep(strat, p);
	std::vector<Rep> seeds;
	for (int o : rel) seeds.push_back(interval_rep(strat, {o, o}, p));
	std::vector<const Rep*> seed_ptrs;
	for (const auto& s : seeds) seed_ptrs.push_back(&s);
	if (!seeds.empty()) P1 = direct_sum(seed_ptrs, strat, p);
	RepHom d = rep_hom_zero(P1, P0);
	// column of star k at an open stratum o: stars are concatenated in order
	auto star_col = [&](int k, int o) {
		int col = 0;
		for (int i = 0; i < k; ++i)
			if (o >= pts[i] - 1 && o <= pts[i] + 1) ++col;
		return col;
	};
	for (int o : rel) {
		// stars containing o, in order
		std::vector<int> owners;
		for (size_t k = 0; k < pts.size(); ++k)
			if (o >= pts[k] - 1 && o <= pts[k] + 1) owners.push_back((int)k);
		require(!owners.empty() && owners.size() <= 2, "relation stratum with bad star count");
		d[o].at(star_col(owners[0], o), 0) = 1;
		if (owners.size() == 2)
			d[o].at(star_col(owners[1], o), 0) = fp_normalize(-1, p);
	}
	out.C.terms[slot0] = P0;
	out.C.terms[slot0 - 1] = P1;
	for (int i = 0; i + 1 < window_len; ++i)
		out.C.diff[i] = rep_hom_zero(out.C.terms[i], out.C.terms[i + 1]);
	out.C.diff[slot0 - 1] = std::move(d);
	// cover: every star column maps to the module where the module is nonzero
	out.cover = rep_hom_zero(P0, out.module);
	for (int s = r.a; s <= r.b; ++s)
		for (int c = 0; c < P0.dim[s]; ++c) out.cover[s].at(0, c) = 1;
	require(hom_commutes(P0, out.module, out.cover), "block cover is not a rep hom");
	check_complex(strat, out.C);
	return out;
}

RepComplex DcatContext::block_complex(const CanonicalPoint& pt) const {
	return block_data(pt).C;
}

StrictModel to_rep(const DcatContext& ctx, const DcatObject& A) {
	StrictModel sm;
	for (const auto& pt : A.summands) sm.blocks.push_back(ctx.block_complex(pt));
	int W = ctx.window_len;
	int ns = ctx.strat.count();
	sm.C.window_lo = ctx.window_lo;
	// offsets[i][k][s]: column offset of block k at slot i, stratum s
	std::vector<std::vector<std::vector<int>>> offsets(W);
	for (int i = 0; i < W; ++i) {
		std::vector<const Rep*> parts;
		offsets[i].resize(sm.blocks.size());
		std::vector<int> acc(ns, 0);
		for (size_t k = 0; k < sm.blocks.size(); ++k) {
			offsets[i][k] = acc;
			for (int s = 0; s < ns; ++s) acc[s] += sm.blocks[k].terms[i].dim[s];
			parts.push_back(&sm.blocks[k].terms[i]);
		}
		sm.C.terms.push_back(parts.empty() ? zero_rep(ctx.strat, ctx.p)
		                                   : direct_sum(parts, ctx.strat, ctx.p));
	}
	for (int i = 0; i + 1 < W; ++i) {
		RepHom d = rep_hom_zero(sm.C.terms[i], sm.C.terms[i + 1]);
		for (size_t k = 0; k < sm.blocks.size(); ++k) {
			const RepHom& bd = sm.blocks[k].diff[i];
			for (int s = 0; s < ns; ++s)
				for (int r = 0; r < bd[s].rows; ++r)
					for (int c = 0; c < bd[s].cols; ++c)
						d[s].at(offsets[i + 1][k][s] + r, offsets[i][k][s] + c) = bd[s].at(r, c);
		}
		sm.C.diff.push_back(std::move(d));
	}
	check_complex(ctx.strat, sm.C);
	for (size_t k = 0; k < sm.blocks.size(); ++k) {
		ChainMapVec incl = chain_map_zero(sm.blocks[k], sm.C);
		ChainMapVec proj = chain_map_zero(sm.C, sm.blocks[k]);
		for (int i = 0; i < W; ++i)
			for (int s = 0; s < ns; ++s)
				for (int r = 0; r < sm.blocks[k].terms[i].dim[s]; ++r) {
					incl[i][s].at(offsets[i][k][s] + r, r) = 1;
					proj[i][s].at(r, offsets[i][k][s] + r) = 1;
				}
		require(chain_commutes(sm.blocks[k], sm.C, incl), "block inclusion is not a chain map");
		require(chain_commutes(sm.C, sm.blocks[k], proj), "block projection is not a chain map");
		sm.incl.push_back(std::move(incl));
		sm.proj.push_back(std::move(proj));
	}
	return sm;
}

const DcatContext::GenData& DcatContext::generator(const CanonicalPoint& from,
                                                   const CanonicalPoint& to) const {
	auto key = std::make_pair(from, to);
	auto it = gen_cache.find(key);
	if (it != gen_cache.end()) return it->second;
	RepComplex X = block_complex(from), Y = block_complex(to);
	GenData data;
	data.boundaries = null_homotopic_space(X, Y);
	auto maps = chain_map_space(X, Y);
	int quotient_dim = 0;
	RowSpace span = data.boundaries;
	std::vector<int> rep_vec;
	for (const auto& f : maps) {
		std::vector<int> v = vec_chain(X, Y, f);
		data.boundaries.reduce(v);
		bool nz = false;
		for (int x : v) nz = nz || x;
		if (!nz) continue;
		if (span.insert(v)) {
			++quotient_dim;
			if (rep_vec.empty()) rep_vec = v;
		}
	}
	bool allowed = slot_allowed(from, to);
	require(quotient_dim == (allowed ? 1 : 0), "strict model disagrees with the Hom geometry");
	if (allowed) {
		int lead = -1;
		for (size_t i = 0; i < rep_vec.size(); ++i)
			if (rep_vec[i]) { lead = (int)i; break; }
		int inv = fp_inv(rep_vec[lead], p);
		for (auto& x : rep_vec) x = (int)(((long long)x * inv) % p);
		data.gen_vec = rep_vec;
		data.gen = unvec_chain(X, Y, rep_vec);
		require(chain_commutes(X, Y, data.gen), "canonical generator is not a chain map");
	}
	return gen_cache.emplace(key, std::move(data)).first->second;
}

ChainMapVec strictify(const DcatContext& ctx, const DcatMorphism& f, const StrictModel& SA,
                      const StrictModel& SB) {
	validate(f);
	ChainMapVec total = chain_map_zero(SA.C, SB.C);
	for (int j = 0; j < f.dst.size(); ++j)
		for (int i = 0; i < f.src.size(); ++i) {
			int c = f.entries.at(j, i);
			if (!c) continue;
			const auto& gen = ctx.generator(f.src.summands[i], f.dst.summands[j]).gen;
			ChainMapVec via = compose_chain(SA.C, SA.blocks[i], SB.blocks[j], gen, SA.proj[i]);
			via = compose_chain(SA.C, SB.blocks[j], SB.C, SB.incl[j], via);
			total = add_chain(total, scale_chain(via, c));
		}
	require(chain_commutes(SA.C, SB.C, total), "strictified morphism is not a chain map");
	return total;
}

DcatObject decompose(const DcatContext& ctx, const RepComplex& C) {
	DcatObject out;
	out.p = ctx.p;
	for (int i = 0; i < (int)C.terms.size(); ++i) {
		CohomologySlot slot = cohomology_slot(ctx.strat, C, i);
		if (slot.H.is_zero()) continue;
		for (const auto& s : split_intervals(ctx.strat, slot.H))
			out.summands.push_back(range_to_interval(ctx.strat, s.range, C.window_lo + i));
	}
	std::sort(out.summands.begin(), out.summands.end(),
	          [](const CanonicalPoint& a, const CanonicalPoint& b) { return cmp(a, b) < 0; });
	return out;
}

int hom_dim_strict(const DcatObject& A, const DcatObject& B) {
	DcatContext ctx(A.p, {&A, &B});
	StrictModel SA = to_rep(ctx, A), SB = to_rep(ctx, B);
	return hom_dim_mod_homotopy(SA.C, SB.C);
}

DcatObject cone_strict_model(const DcatMorphism& f) {
	validate(f);
	DcatContext ctx(f.src.p, {&f.src, &f.dst});
	StrictModel SA = to_rep(ctx, f.src), SB = to_rep(ctx, f.dst);
	ChainMapVec g = strictify(ctx, f, SA, SB);
	ConeData cd = mapping_cone(ctx.strat, SA.C, SB.C, g);
	return decompose(ctx, cd.cone);
}

DcatObject cone(const DcatMorphism& f) {
	validate(f);
	int p = f.src.p;
	DcatMorphism f1 = shift(f, 1);
	const DcatObject& A1 = f1.src;

	DcatObject out;
	out.p = p;
	if (f.src.size() == 0 && f.dst.size() == 0) return out;

	// pointwise cone dimension from the long exact block sequence
	auto dim_cone = [&](const StripPoint& u) {
		if (!in_interior(u)) return 0;
		return h_eval(f.dst, u) - rank(h_eval_mor(f, u)) + h_eval(A1, u) -
		       rank(h_eval_mor(f1, u));
	};

	// endpoint values and the degree window of possible summands
	std::vector<ExtRat> ends;
	int deg_lo = 0, deg_hi = 0;
	bool first = true;
	for (const DcatObject* O : {&f.dst, &A1})
		for (const auto& s : O->summands) {
			ends.push_back(s.lo);
			ends.push_back(s.hi);
			deg_lo = first ? s.deg : std::min(deg_lo, s.deg);
			deg_hi = first ? s.deg : std::max(deg_hi, s.deg);
			first = false;
		}
	auto ext_less = [](const ExtRat& a, const ExtRat& b) { return cmp(a, b) < 0; };
	std::sort(ends.begin(), ends.end(), ext_less);
	ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

	// corner lines per axis, in exact coordinates
	auto coord_less = [](const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) < 0; };
	std::vector<ExactCoord> xlines, ylines;
	for (const auto& v : ends) {
		if (v.kind != ExtRat::neg_inf) {
			xlines.push_back(ExactCoord::atan_of(v));            // hi closed (finite only)
			xlines.push_back(pi_minus(ExactCoord::atan_of(v)));  // hi open
		}
		if (v.kind != ExtRat::pos_inf) {
			ylines.push_back(ExactCoord::atan_of(v));                // lo closed
			ylines.push_back(neg_pi_minus(ExactCoord::atan_of(v)));  // lo open
		}
	}
	for (auto* lines : {&xlines, &ylines}) {
		std::sort(lines->begin(), lines->end(), coord_less);
		lines->erase(std::unique(lines->begin(), lines->end()), lines->end());
	}

	// one sample strictly between consecutive lines, plus outer sentinels
	auto below_coord = [](const ExactCoord& c) {
		if (c.t.is_finite()) return ExactCoord(c.n, ExtRat(c.t.q - Rational(1)));
		return ExactCoord(c.n - 1, ExtRat(Rational(0)));
	};
	auto above_coord = [](const ExactCoord& c) {
		if (c.t.is_finite()) return ExactCoord(c.n, ExtRat(c.t.q + Rational(1)));
		return ExactCoord(c.n, ExtRat(Rational(0)));
	};
	auto samples_of = [&](const std::vector<ExactCoord>& lines) {
		std::vector<ExactCoord> s;
		s.push_back(below_coord(lines.front()));
		for (size_t i = 0; i + 1 < lines.size(); ++i) s.push_back(coord_between(lines[i], lines[i + 1]));
		s.push_back(above_coord(lines.back()));
		return s;
	};
	std::vector<ExactCoord> xsamples = samples_of(xlines), ysamples = samples_of(ylines);
	auto line_index = [&](const std::vector<ExactCoord>& lines, const ExactCoord& c) {
		auto it = std::lower_bound(lines.begin(), lines.end(), c, coord_less);
		require(it != lines.end() && *it == c, "corner line missing from the arrangement");
		return (int)(it - lines.begin());
	};

	std::map<CanonicalPoint, int, CanonicalPointLess> found;
	for (int deg = deg_lo; deg <= deg_hi + 1; ++deg) {
		for (IntervalKind kind :
		     {IntervalKind::CC, IntervalKind::CO, IntervalKind::OC, IntervalKind::OO}) {
			for (const auto& lo : ends) {
				for (const auto& hi : ends) {
					CanonicalPoint c{kind, lo, hi, 0};
					try {
						validate(c);
					} catch (const error&) {
						continue;
					}
					StripPoint corner = from_canonical(c);
					int xi = line_index(xlines, corner.x);
					int yi = line_index(ylines, corner.y);
					// support: x >= corner.x, y <= corner.y; "in" samples sit
					// above the x-line and below the y-line
					const ExactCoord &x_in = xsamples[xi + 1], &x_out = xsamples[xi];
					const ExactCoord &y_in = ysamples[yi], &y_out = ysamples[yi + 1];
					auto probe = [&](const ExactCoord& x, const ExactCoord& y) {
						return dim_cone(t_apply(StripPoint{x, y}, -deg));
					};
					int count = probe(x_in, y_in) - probe(x_out, y_in) - probe(x_in, y_out) +
					            probe(x_out, y_out);
					CanonicalPoint labelled = c;
					labelled.deg = deg;
					CanonicalPoint below_pt = labelled;
					below_pt.deg = deg - 1;
					auto it = found.find(below_pt);
					if (it != found.end()) count -= it->second;
					if (count < 0)
						fail(errc::internal_error, "negative multiplicity in the cone inversion");
					if (count > 0) {
						if (deg > deg_hi)
							fail(errc::internal_error, "cone block outside the degree window");
						found[labelled] = count;
					}
				}
			}
		}
	}
	for (const auto& [c, mult] : found)
		for (int i = 0; i < mult; ++i) out.summands.push_back(c);
	return out;
}

std::vector<StripPoint> sample_grid(const std::vector<const DcatObject*>& objs) {
	std::vector<ExactCoord> xs, ys;
	for (const DcatObject* o : objs)
		for (const auto& s : o->summands) {
			StripPoint q = from_canonical(s);
			for (int k : {-1, 0, 1}) {
				StripPoint qq = t_apply(q, k);
				xs.push_back(qq.x);
				ys.push_back(qq.y);
			}
		}
	auto less = [](const ExactCoord& a, const ExactCoord& b) { return cmp(a, b) < 0; };
	std::sort(xs.begin(), xs.end(), less);
	xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
	std::sort(ys.begin(), ys.end(), less);
	ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
	std::vector<StripPoint> grid;
	for (size_t xi = 0; xi + 1 < xs.size(); ++xi)
		for (size_t yi = 0; yi + 1 < ys.size(); ++yi) {
			StripPoint u{coord_between(xs[xi], xs[xi + 1]), coord_between(ys[yi], ys[yi + 1])};
			if (in_interior(u)) grid.push_back(u);
		}
	return grid;
}

namespace {

// Basis of { g : B -> C | g . pre = 0 and post . g = 0 } over the slot
// coordinates; either constraint may be absent.
std::vector<DcatMorphism> constrained_morphisms(const DcatObject& B, const DcatObject& C,
                                                const DcatMorphism* pre,
                                                const DcatMorphism* post) {
	int p = B.p;
	auto slots = hom_slots(B, C);
	if (slots.empty()) return {};
	std::vector<std::vector<int>> rows_by_unit((int)slots.size());
	int total_rows = 0;
	std::vector<std::pair<int, int>> pre_slots, post_slots;
	if (pre) pre_slots = hom_slots(pre->src, C);
	if (post) post_slots = hom_slots(B, post->dst);
	total_rows = (int)pre_slots.size() + (int)post_slots.size();
	Mat constraints(total_rows, (int)slots.size(), p);
	for (size_t k = 0; k < slots.size(); ++k) {
		DcatMorphism unit = zero_morphism(B, C);
		unit.entries.at(slots[k].first, slots[k].second) = 1;
		int r = 0;
		if (pre) {
			DcatMorphism comp = compose(unit, *pre);
			for (auto [j, i] : pre_slots) constraints.at(r++, (int)k) = comp.entries.at(j, i);
		}
		if (post) {
			DcatMorphism comp = compose(*post, unit);
			for (auto [j, i] : post_slots) constraints.at(r++, (int)k) = comp.entries.at(j, i);
		}
	}
	Mat basis = nullspace(constraints);
	std::vector<DcatMorphism> out;
	for (int c = 0; c < basis.cols; ++c) {
		DcatMorphism m = zero_morphism(B, C);
		for (size_t k = 0; k < slots.size(); ++k)
			m.entries.at(slots[k].first, slots[k].second) = basis.at((int)k, c);
		out.push_back(std::move(m));
	}
	return out;
}

// Search the span of `basis` for a morphism whose evaluation at every grid
// point has the prescribed rank.  The valid set is nonempty (the honest
// triangle map lies in it), so a bounded deterministic search suffices.
std::optional<DcatMorphism> find_pointwise_exact(const DcatObject& B, const DcatObject& C,
                                                 const std::vector<DcatMorphism>& basis,
                                                 const std::vector<StripPoint>& grid,
                                                 const std::vector<int>& want_rank) {
	int p = B.p;
	// precompute the evaluation bases once; only points with a nonzero fiber
	// on either side can constrain the candidate
	struct Cell {
		std::vector<int> rows, cols;
		int want;
	};
	std::vector<Cell> cells;
	for (size_t gi = 0; gi < grid.size(); ++gi) {
		Cell c{h_basis(C, grid[gi]), h_basis(B, grid[gi]), want_rank[gi]};
		if (c.rows.empty() && c.cols.empty()) {
			if (c.want != 0) return std::nullopt;
			continue;
		}
		cells.push_back(std::move(c));
	}
	auto candidate_ok = [&](const DcatMorphism& m) {
		for (const Cell& c : cells) {
			Mat sub((int)c.rows.size(), (int)c.cols.size(), p);
			for (size_t r = 0; r < c.rows.size(); ++r)
				for (size_t cc = 0; cc < c.cols.size(); ++cc)
					sub.at((int)r, (int)cc) = m.entries.at(c.rows[r], c.cols[cc]);
			if (rank(std::move(sub)) != c.want) return false;
		}
		return true;
	};
	if (basis.empty()) {
		DcatMorphism z = zero_morphism(B, C);
		if (candidate_ok(z)) return z;
		return std::nullopt;
	}
	int k = (int)basis.size();
	auto assemble = [&](const std::vector<int>& coef) {
		DcatMorphism m = zero_morphism(B, C);
		for (int i = 0; i < k; ++i)
			if (coef[i]) m = add(m, scale(basis[i], coef[i]));
		return m;
	};
	// random candidates first (the exact locus is large), exhaustive fallback
	uint64_t state = 0x6a09e667f3bcc908ull;
	for (int tries = 0; tries < 512; ++tries) {
		std::vector<int> coef(k);
		for (int i = 0; i < k; ++i) {
			state ^= state << 13;
			state ^= state >> 7;
			state ^= state << 17;
			coef[i] = (int)(state % (uint64_t)p);
		}
		DcatMorphism m = assemble(coef);
		if (candidate_ok(m)) return m;
	}
	double combos = 1;
	for (int i = 0; i < k && combos <= 65536; ++i) combos *= p;
	if (combos <= 65536) {
		std::vector<int> coef(k, 0);
		while (true) {
			DcatMorphism m = assemble(coef);
			if (candidate_ok(m)) return m;
			int pos = 0;
			while (pos < k && ++coef[pos] == p) coef[pos++] = 0;
			if (pos == k) return std::nullopt;
		}
	}
	for (int tries = 0; tries < 50000; ++tries) {
		std::vector<int> coef(k);
		for (int i = 0; i < k; ++i) {
			state ^= state << 13;
			state ^= state >> 7;
			state ^= state << 17;
			coef[i] = (int)(state % (uint64_t)p);
		}
		DcatMorphism m = assemble(coef);
		if (candidate_ok(m)) return m;
	}
	return std::nullopt;
}

} // namespace

ConeTriangle cone_with_maps(const DcatMorphism& f) {
	validate(f);
	ConeTriangle out;
	out.cone = cone(f);
	const DcatObject &A = f.src, &B = f.dst, &C = out.cone;
	DcatObject A1 = shift(A, 1);
	DcatMorphism f1 = shift(f, 1);
	std::vector<StripPoint> grid = sample_grid({&A, &B, &C});

	// g : B -> C with g . f = 0 and rank g_u = dim B_u - rank f_u everywhere
	std::vector<int> want_g;
	for (const StripPoint& u : grid)
		want_g.push_back(h_eval(B, u) - rank(h_eval_mor(f, u)));
	auto g = find_pointwise_exact(B, C, constrained_morphisms(B, C, &f, nullptr), grid, want_g);
	require(g.has_value(), "no exact morphism onto the cone");
	out.to_cone = *g;

	// h : C -> A[1] with h . g = 0, f[1] . h = 0, and exactness at C and A[1]
	std::vector<int> want_h;
	bool consistent = true;
	for (size_t gi = 0; gi < grid.size(); ++gi) {
		int r = h_eval(C, grid[gi]) - want_g[gi];
		want_h.push_back(r);
		consistent = consistent &&
		             r == h_eval(A1, grid[gi]) - rank(h_eval_mor(f1, grid[gi]));
	}
	require(consistent, "cone dimensions break the triangle count");
	auto h = find_pointwise_exact(C, A1, constrained_morphisms(C, A1, &out.to_cone, &f1), grid,
	                              want_h);
	require(h.has_value(), "no exact connecting morphism");
	out.to_shift = *h;
	validate(out.to_cone);
	validate(out.to_shift);
	return out;
}

} // namespace sheafline
