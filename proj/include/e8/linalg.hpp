#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "e8/scalar.hpp"

namespace e8 {

template <class S>
using SparseVec = std::vector<std::pair<int, S>>;

template <class S>
SparseVec<S> sparse_from_dense(const std::vector<S>& v) {
  SparseVec<S> r;
  for (int i = 0; i < int(v.size()); ++i)
    if (!is_zero(v[i])) r.emplace_back(i, v[i]);
  return r;
}

template <class S>
std::vector<S> dense_from_sparse(const SparseVec<S>& v, int n) {
  std::vector<S> r(n, S(0));
  for (const auto& [i, x] : v) r[i] += x;
  return r;
}

template <class S>
bool dense_is_zero(const std::vector<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
std::vector<S> dense_sub(std::vector<S> a, const std::vector<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
std::vector<S> dense_add(std::vector<S> a, const std::vector<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
std::vector<S> dense_scale(std::vector<S> a, const S& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class S>
double dense_max_abs(const std::vector<S>& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, ST<S>::abs(x));
  return m;
}

// Row echelon form maintained incrementally; pivot = leftmost nonzero column.
// Rows are kept fully reduced (reduced row echelon form).
template <class S>
class Echelon {
 public:
  explicit Echelon(int ncols) : n_(ncols) {}

  // Reduce v against the current rows; returns the residual.
  std::vector<S> reduce(std::vector<S> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      int p = piv_[r];
      if (is_zero(v[p])) continue;
      S f = v[p];
      for (int j = p; j < n_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
      v[p] = S(0);
    }
    return v;
  }

  // Adds v; returns true if it increased the rank.
  bool add(const std::vector<S>& v0) {
    std::vector<S> v = reduce(v0);
    int p = -1;
    for (int j = 0; j < n_; ++j)
      if (!is_zero(v[j])) { p = j; break; }
    if (p < 0) return false;
    S inv = S(1) / v[p];
    for (int j = p; j < n_; ++j) v[j] *= inv;
    v[p] = S(1);
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      S f = row[p];
      for (int j = p; j < n_; ++j)
        if (!is_zero(v[j])) row[j] -= f * v[j];
      row[p] = S(0);
    }
    size_t pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(const std::vector<S>& v) const { return dense_is_zero(reduce(v)); }
  int rank() const { return int(rows_.size()); }
  int ncols() const { return n_; }
  const std::vector<int>& pivots() const { return piv_; }
  const std::vector<std::vector<S>>& rows() const { return rows_; }

  // Basis of the null space {x : row . x = 0 for all rows}; one vector per
  // free column, in increasing column order.
  std::vector<std::vector<S>> kernel() const {
    std::vector<char> is_piv(n_, 0);
    for (int p : piv_) is_piv[p] = 1;
    std::vector<std::vector<S>> out;
    for (int f = 0; f < n_; ++f) {
      if (is_piv[f]) continue;
      std::vector<S> x(n_, S(0));
      x[f] = S(1);
      for (size_t r = 0; r < rows_.size(); ++r)
        if (!is_zero(rows_[r][f])) x[piv_[r]] = -rows_[r][f];
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<S>> rows_;
  std::vector<int> piv_;
};

template <class S>
int rank_of(const std::vector<std::vector<S>>& vs, int n) {
  Echelon<S> e(n);
  for (const auto& v : vs) e.add(v);
  return e.rank();
}

// Solve A x = b for square invertible A (dense, exact or approximate).
template <class S>
std::vector<std::vector<S>> invert(std::vector<std::vector<S>> A) {
  int n = int(A.size());
  std::vector<std::vector<S>> I(n, std::vector<S>(n, S(0)));
  for (int i = 0; i < n; ++i) I[i][i] = S(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    double best = -1;
    for (int r = c; r < n; ++r) {
      if (is_zero(A[r][c])) continue;
      if constexpr (ST<S>::exact) { p = r; break; }
      double m = ST<S>::abs(A[r][c]);
      if (m > best) { best = m; p = r; }
    }
    if (p < 0) throw std::runtime_error("singular matrix");
    std::swap(A[p], A[c]);
    std::swap(I[p], I[c]);
    S inv = S(1) / A[c][c];
    for (int j = 0; j < n; ++j) { A[c][j] *= inv; I[c][j] *= inv; }
    for (int r = 0; r < n; ++r) {
      if (r == c || is_zero(A[r][c])) continue;
      S f = A[r][c];
      for (int j = 0; j < n; ++j) {
        if (!is_zero(A[c][j])) A[r][j] -= f * A[c][j];
        if (!is_zero(I[c][j])) I[r][j] -= f * I[c][j];
      }
    }
  }
  return I;
}

}  // namespace e8
