#pragma once

#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace sheafline {

inline int fp_normalize(long long v, int p) {
	long long r = v % p;
	if (r < 0) r += p;
	return (int)r;
}

inline int fp_inv(int a, int p) {
	// extended Euclid; a != 0 mod p
	int t = 0, newt = 1, r = p, newr = a % p;
	while (newr != 0) {
		int q = r / newr;
		int tmp = t - q * newt; t = newt; newt = tmp;
		tmp = r - q * newr; r = newr; newr = tmp;
	}
	require(r == 1, "fp_inv of a non-unit");
	return fp_normalize(t, p);
}

inline bool is_prime(int p) {
	if (p < 2) return false;
	for (int d = 2; (long long)d * d <= p; ++d)
		if (p % d == 0) return false;
	return true;
}

// Dense matrix over F_p.  Sizes in this project stay small (a few hundred at
// most outside the persistence reduction, which has its own representation).
struct Mat {
	int rows = 0, cols = 0, p = 2;
	std::vector<int> a;

	Mat() = default;
	Mat(int r, int c, int p_) : rows(r), cols(c), p(p_), a((size_t)r * c, 0) {}
	int& at(int i, int j) { return a[(size_t)i * cols + j]; }
	int at(int i, int j) const { return a[(size_t)i * cols + j]; }
	static Mat identity(int n, int p) {
		Mat m(n, n, p);
		for (int i = 0; i < n; ++i) m.at(i, i) = 1;
		return m;
	}
	bool is_zero() const {
		for (int v : a)
			if (v) return false;
		return true;
	}
};

inline bool operator==(const Mat& x, const Mat& y) {
	return x.rows == y.rows && x.cols == y.cols && x.p == y.p && x.a == y.a;
}

inline Mat mul(const Mat& x, const Mat& y) {
	require(x.cols == y.rows && x.p == y.p, "matrix shape mismatch in mul");
	Mat z(x.rows, y.cols, x.p);
	for (int i = 0; i < x.rows; ++i)
		for (int k = 0; k < x.cols; ++k) {
			int v = x.at(i, k);
			if (!v) continue;
			for (int j = 0; j < y.cols; ++j)
				z.at(i, j) = (int)((z.at(i, j) + (long long)v * y.at(k, j)) % x.p);
		}
	return z;
}

inline Mat add(const Mat& x, const Mat& y) {
	require(x.rows == y.rows && x.cols == y.cols && x.p == y.p, "matrix shape mismatch in add");
	Mat z = x;
	for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = (z.a[i] + y.a[i]) % x.p;
	return z;
}

inline Mat scale(const Mat& x, int c) {
	Mat z = x;
	c = fp_normalize(c, x.p);
	for (auto& v : z.a) v = (int)(((long long)v * c) % x.p);
	return z;
}

inline Mat sub(const Mat& x, const Mat& y) { return add(x, scale(y, x.p - 1)); }

inline Mat transpose(const Mat& x) {
	Mat z(x.cols, x.rows, x.p);
	for (int i = 0; i < x.rows; ++i)
		for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
	return z;
}

// Row-reduce in place; returns pivot column per pivot row.
inline std::vector<int> rref(Mat& m) {
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < m.cols && row < m.rows; ++col) {
		int sel = -1;
		for (int i = row; i < m.rows; ++i)
			if (m.at(i, col)) { sel = i; break; }
		if (sel < 0) continue;
		if (sel != row)
			for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
		int inv = fp_inv(m.at(row, col), m.p);
		for (int j = col; j < m.cols; ++j)
			m.at(row, j) = (int)(((long long)m.at(row, j) * inv) % m.p);
		for (int i = 0; i < m.rows; ++i) {
			if (i == row) continue;
			int f = m.at(i, col);
			if (!f) continue;
			for (int j = col; j < m.cols; ++j)
				m.at(i, j) = fp_normalize(m.at(i, j) - (long long)f * m.at(row, j), m.p);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

inline int rank(Mat m) { return (int)rref(m).size(); }

// Basis of the (right) null space, as columns of the returned matrix.
inline Mat nullspace(Mat m) {
	int n = m.cols;
	std::vector<int> pivots = rref(m);
	std::vector<bool> is_pivot(n, false);
	for (int c : pivots) is_pivot[c] = true;
	int k = n - (int)pivots.size();
	Mat basis(n, k, m.p);
	int idx = 0;
	for (int c = 0; c < n; ++c) {
		if (is_pivot[c]) continue;
		basis.at(c, idx) = 1;
		for (int r = 0; r < (int)pivots.size(); ++r)
			basis.at(pivots[r], idx) = fp_normalize(-m.at(r, c), m.p);
		++idx;
	}
	return basis;
}

// Solve A X = B for X; returns one solution or nothing when inconsistent.
inline std::optional<Mat> solve(const Mat& A, const Mat& B) {
	require(A.rows == B.rows && A.p == B.p, "solve shape mismatch");
	Mat aug(A.rows, A.cols + B.cols, A.p);
	for (int i = 0; i < A.rows; ++i) {
		for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
		for (int j = 0; j < B.cols; ++j) aug.at(i, A.cols + j) = B.at(i, j);
	}
	std::vector<int> pivots = rref(aug);
	for (size_t r = 0; r < pivots.size(); ++r)
		if (pivots[r] >= A.cols) return std::nullopt;
	Mat X(A.cols, B.cols, A.p);
	for (size_t r = 0; r < pivots.size(); ++r)
		for (int j = 0; j < B.cols; ++j) X.at(pivots[r], j) = aug.at((int)r, A.cols + j);
	return X;
}

inline Mat inverse(const Mat& A) {
	require(A.rows == A.cols, "inverse of a non-square matrix");
	auto X = solve(A, Mat::identity(A.rows, A.p));
	require(X.has_value() && mul(A, *X) == Mat::identity(A.rows, A.p), "matrix not invertible");
	return *X;
}

// A subspace of F_p^n kept in reduced row-echelon form; supports membership
// tests and canonical coset representatives.
struct RowSpace {
	int n = 0, p = 2;
	Mat basis;               // RREF rows
	std::vector<int> pivots; // pivot column per basis row

	RowSpace(int n_, int p_) : n(n_), p(p_), basis(0, n_, p_) {}

	// returns true if the vector enlarged the space
	bool insert(std::vector<int> v) {
		reduce(v);
		int lead = -1;
		for (int j = 0; j < n; ++j)
			if (v[j]) { lead = j; break; }
		if (lead < 0) return false;
		int inv = fp_inv(v[lead], p);
		for (auto& x : v) x = (int)(((long long)x * inv) % p);
		// keep rows sorted by pivot and re-reduce previous rows
		Mat nb(basis.rows + 1, n, p);
		std::vector<int> np;
		int dst = 0;
		bool placed = false;
		for (int r = 0; r <= basis.rows; ++r) {
			if (!placed && (r == basis.rows || pivots[r] > lead)) {
				for (int j = 0; j < n; ++j) nb.at(dst, j) = v[j];
				np.push_back(lead);
				++dst;
				placed = true;
			}
			if (r < basis.rows) {
				for (int j = 0; j < n; ++j) nb.at(dst, j) = basis.at(r, j);
				np.push_back(pivots[r]);
				++dst;
			}
		}
		basis = nb;
		pivots = np;
		// eliminate the new pivot from the other rows
		for (int r = 0; r < basis.rows; ++r) {
			if (pivots[r] == lead) continue;
			int f = basis.at(r, lead);
			if (!f) continue;
			for (int j = 0; j < n; ++j)
				basis.at(r, j) = fp_normalize(basis.at(r, j) - (long long)f * basis.at(find_row(lead), j), p);
		}
		return true;
	}

	int find_row(int pivot) const {
		for (size_t r = 0; r < pivots.size(); ++r)
			if (pivots[r] == pivot) return (int)r;
		return -1;
	}

	// canonical representative of v modulo the subspace
	void reduce(std::vector<int>& v) const {
		for (int r = 0; r < basis.rows; ++r) {
			int f = v[pivots[r]];
			if (!f) continue;
			for (int j = 0; j < n; ++j) v[j] = fp_normalize(v[j] - (long long)f * basis.at(r, j), p);
		}
	}

	bool contains(std::vector<int> v) const {
		reduce(v);
		for (int x : v)
			if (x) return false;
		return true;
	}

	int dim() const { return basis.rows; }
};

} // namespace sheafline
