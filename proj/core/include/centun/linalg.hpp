#ifndef CENTUN_LINALG_HPP
#define CENTUN_LINALG_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "centun/errors.hpp"
#include "centun/rational.hpp"

// Exact dense/sparse linear algebra over Q. Dimensions here are small
// (weight spaces, tensor squares of small irreps), so dense Gaussian
// elimination with first-nonzero pivoting is the workhorse.

namespace centun {

using QMat = std::vector<RatVec>;  // row-major dense

inline QMat qmat_zero(size_t r, size_t c) {
  return QMat(r, RatVec(c, Rat(0)));
}

inline QMat qmat_identity(size_t n) {
  QMat m = qmat_zero(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  QMat out = qmat_zero(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (is_zero(a[i][j])) continue;
      for (size_t l = 0; l < c; ++l)
        if (!is_zero(b[j][l])) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

inline RatVec qmat_apply(const QMat& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(a[i][j]) && !is_zero(v[j])) out[i] += a[i][j] * v[j];
  return out;
}

// In-place reduction to row echelon form; returns the rank.
inline size_t qmat_echelon(QMat& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = 1 / m[rank][col];
    for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || is_zero(m[i][col])) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline size_t qmat_rank(QMat m) { return qmat_echelon(m); }

// Solves a x = b for square nonsingular a.
inline RatVec qmat_solve(QMat a, RatVec b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (qmat_echelon(a) != n) throw InternalError("qmat_solve: singular system");
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

inline QMat qmat_inverse(const QMat& a) {
  size_t n = a.size();
  QMat aug = a;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rat(0));
    aug[i][n + i] = 1;
  }
  if (qmat_echelon(aug) != n)
    throw InternalError("qmat_inverse: singular matrix");
  QMat inv = qmat_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Incrementally maintained reduced echelon basis of a growing subspace.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t dim) : dim_(dim) {}

  // Reduces v against the basis; if a nonzero remainder survives, the
  // subspace grows and the call returns true.
  bool insert(RatVec v) {
    reduce(v);
    size_t p = 0;
    while (p < dim_ && is_zero(v[p])) ++p;
    if (p == dim_) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  // true iff v lies in the current span.
  bool contains(RatVec v) const {
    reduce(v);
    return vec_is_zero(v);
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<RatVec>& rows() const { return rows_; }

 private:
  void reduce(RatVec& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const Rat& c = v[pivots_[k]];
      if (is_zero(c)) continue;
      Rat f = c;
      for (size_t j = 0; j < dim_; ++j)
        if (!is_zero(rows_[k][j])) v[j] -= f * rows_[k][j];
    }
  }

  size_t dim_;
  std::vector<RatVec> rows_;
  std::vector<size_t> pivots_;
};

// Column-sparse exact matrix; generator matrices of modules live here.
struct SpMat {
  int rows = 0;
  int cols = 0;
  // cols entries: sorted (row, coeff) pairs, no zeros stored
  std::vector<std::vector<std::pair<int, Rat>>> col;

  SpMat() = default;
  SpMat(int r, int c) : rows(r), cols(c), col(c) {}

  void add(int r, int c, const Rat& v) {
    if (is_zero(v)) return;
    auto& cc = col[c];
    for (auto& [rr, vv] : cc)
      if (rr == r) {
        vv += v;
        if (is_zero(vv)) {
          cc.erase(std::find_if(cc.begin(), cc.end(),
                                [&](auto& p) { return p.first == r; }));
        }
        return;
      }
    auto it = cc.begin();
    while (it != cc.end() && it->first < r) ++it;
    cc.insert(it, {r, v});
  }

  Rat at(int r, int c) const {
    for (const auto& [rr, vv] : col[c])
      if (rr == r) return vv;
    return Rat(0);
  }

  RatVec apply(const RatVec& v) const {
    RatVec out(rows, Rat(0));
    for (int c = 0; c < cols; ++c) {
      if (is_zero(v[c])) continue;
      for (const auto& [r, a] : col[c]) out[r] += a * v[c];
    }
    return out;
  }

  bool is_zero_mat() const {
    for (const auto& c : col)
      if (!c.empty()) return false;
    return true;
  }
};

inline SpMat sp_mul(const SpMat& a, const SpMat& b) {
  SpMat out(a.rows, b.cols);
  for (int c = 0; c < b.cols; ++c) {
    RatVec acc(a.rows, Rat(0));
    bool any = false;
    for (const auto& [k, bv] : b.col[c]) {
      for (const auto& [r, av] : a.col[k]) {
        acc[r] += av * bv;
        any = true;
      }
    }
    if (!any) continue;
    for (int r = 0; r < a.rows; ++r)
      if (!is_zero(acc[r])) out.col[c].push_back({r, acc[r]});
  }
  return out;
}

inline SpMat sp_add(const SpMat& a, const SpMat& b, const Rat& bscale = Rat(1)) {
  SpMat out(a.rows, a.cols);
  for (int c = 0; c < a.cols; ++c) {
    RatVec acc(a.rows, Rat(0));
    for (const auto& [r, v] : a.col[c]) acc[r] += v;
    for (const auto& [r, v] : b.col[c]) acc[r] += bscale * v;
    for (int r = 0; r < a.rows; ++r)
      if (!is_zero(acc[r])) out.col[c].push_back({r, acc[r]});
  }
  return out;
}

inline SpMat sp_scale(const SpMat& a, const Rat& s) {
  SpMat out = a;
  for (auto& c : out.col)
    for (auto& [r, v] : c) v *= s;
  return out;
}

inline SpMat sp_commutator(const SpMat& a, const SpMat& b) {
  return sp_add(sp_mul(a, b), sp_mul(b, a), Rat(-1));
}

inline bool sp_equal(const SpMat& a, const SpMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (int c = 0; c < a.cols; ++c) {
    if (a.col[c].size() != b.col[c].size()) return false;
    for (size_t k = 0; k < a.col[c].size(); ++k)
      if (a.col[c][k].first != b.col[c][k].first ||
          cmp(a.col[c][k].second, b.col[c][k].second) != 0)
        return false;
  }
  return true;
}

}  // namespace centun

#endif
