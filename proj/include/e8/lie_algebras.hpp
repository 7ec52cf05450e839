#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "e8/linalg.hpp"
#include "e8/types.hpp"

namespace e8 {

// For each G_ij (i<j, lexicographic) the triple (D1, D2, D3) with D1 = G_ij and
// (D1 x) y + x (D2 y) = conj(D3 conj(xy)) for all octonions x, y.
using Triple8 = std::array<Mat8, 3>;
const std::array<Triple8, 28>& so8_triples();

template <class S>
using SMat8 = std::array<std::array<S, 8>, 8>;

template <class S>
const std::array<std::array<SMat8<S>, 3>, 28>& so8_triples_as() {
  static const auto tab = [] {
    std::array<std::array<SMat8<S>, 3>, 28> t;
    const auto& q = so8_triples();
    for (int g = 0; g < 28; ++g)
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) t[g][k][i][j] = from_q<S>(q[g][k][i][j]);
    return t;
  }();
  return tab;
}

template <class S>
Octonion<S> mat8_apply(const SMat8<S>& M, const Octonion<S>& x) {
  Octonion<S> r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (nz(M[i][j]) && nz(x.c[j])) r.c[i] += M[i][j] * x.c[j];
  return r;
}

// The three octonion actions (D1, D2, D3) of the so(8) part of d.
template <class S>
std::array<SMat8<S>, 3> f4_d_triple(const F4El<S>& d) {
  std::array<SMat8<S>, 3> out;
  for (auto& m : out)
    for (auto& r : m)
      for (auto& v : r) v = S(0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!is_zero(S(d.D[i][j] + d.D[j][i]))) throw std::invalid_argument("so(8) part is not antisymmetric");
  const auto& tab = so8_triples_as<S>();
  int g = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j, ++g) {
      const S& c = d.D[i][j];
      if (!nz(c)) continue;
      for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 8; ++a)
          for (int b = 0; b < 8; ++b)
            if (nz(tab[g][k][a][b])) out[k][a][b] += c * tab[g][k][a][b];
    }
  return out;
}

template <class S>
bool f4_has_d(const F4El<S>& d) {
  for (const auto& r : d.D)
    for (const auto& v : r)
      if (!is_zero(v)) return true;
  return false;
}

// A_k~(a): derivative of the one-parameter group generated on the k-th
// off-diagonal slot. For k = 1:
//   xi2' = 2(a,x1), xi3' = -2(a,x1), x1' = (xi3 - xi2) a,
//   x2' = -conj(x3 a), x3' = conj(a x2).
template <class S>
void f4_add_A(int k, const Octonion<S>& a, const Jordan<S>& X, Jordan<S>& R) {
  if (a.is_zero_oct()) return;
  int i = k - 1, j = (i + 1) % 3, l = (i + 2) % 3;
  S p = S(2) * oct_inner(a, X.x[i]);
  R.xi[j] += p;
  R.xi[l] -= p;
  R.x[i] += (X.xi[l] - X.xi[j]) * a;
  R.x[j] -= oct_conj(X.x[l] * a);
  R.x[l] += oct_conj(a * X.x[j]);
}

template <class S>
Jordan<S> f4_act(const F4El<S>& d, const Jordan<S>& X) {
  Jordan<S> R;
  if (f4_has_d(d)) {
    auto t = f4_d_triple(d);
    for (int k = 0; k < 3; ++k) R.x[k] = mat8_apply(t[k], X.x[k]);
  }
  for (int k = 1; k <= 3; ++k) f4_add_A(k, d.a[k - 1], X, R);
  return R;
}

template <class S>
Jordan<S> e6_act(const E6El<S>& phi, const Jordan<S>& X) {
  return f4_act(phi.delta, X) + jordan_mul(phi.T, X);
}

// phi^T = -delta + T~, the adjoint with respect to (X, Y).
template <class S>
E6El<S> e6_transpose(const E6El<S>& phi) {
  E6El<S> r = phi;
  auto c = r.delta.coords();
  for (auto& v : c) v = -v;
  r.delta = F4El<S>::from_coords(c);
  return r;
}

template <class S>
E6El<S> e6_from_T(const Jordan<S>& T) {
  E6El<S> e;
  e.T = T;
  return e;
}

template <class S>
E6El<S> e6_from_delta(const F4El<S>& d) {
  E6El<S> e;
  e.delta = d;
  return e;
}

// Phi(phi, A, B, nu)(X, Y, xi, eta) =
//   (phi X - nu/3 X + 2 B x Y + eta A, 2 A x X - phi^T Y + nu/3 Y + xi B,
//    (A, Y) + nu xi, (B, X) - nu eta)
template <class S>
PVec<S> e7_act(const E7El<S>& F, const PVec<S>& P) {
  PVec<S> R;
  const S third = F.nu * frac<S>(1, 3);
  R.X = e6_act(F.phi, P.X) - third * P.X + S(2) * jordan_cross(F.B, P.Y) + P.eta * F.A;
  R.Y = S(2) * jordan_cross(F.A, P.X) - e6_act(e6_transpose(F.phi), P.Y) + third * P.Y + P.xi * F.B;
  R.xi = jordan_inner(F.A, P.Y) + F.nu * P.xi;
  R.eta = jordan_inner(F.B, P.X) - F.nu * P.eta;
  return R;
}

// Pivot data used to read f4 coordinates off a derivation of the Jordan
// algebra: coordinates = W * (entries of the 27x27 matrix at the pivots).
struct F4Projection {
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  std::vector<std::vector<mpq_class>> W;    // 52 x 52
  std::vector<int> columns;                 // distinct pivot columns, sorted
};
const F4Projection& f4_projection();

template <class S>
const std::vector<std::vector<S>>& f4_projection_W() {
  static const auto w = [] {
    const auto& q = f4_projection().W;
    std::vector<std::vector<S>> r(q.size(), std::vector<S>(q.size()));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) r[i][j] = from_q<S>(q[i][j]);
    return r;
  }();
  return w;
}

// f4 element whose action on basis element e_c is col(c); only pivot columns
// are queried.
template <class S, class ColFn>
F4El<S> f4_from_columns(ColFn col) {
  const auto& pr = f4_projection();
  std::vector<Jordan<S>> cols(27);
  for (int c : pr.columns) cols[c] = col(c);
  std::vector<S> ent(pr.pivots.size());
  for (size_t p = 0; p < pr.pivots.size(); ++p) ent[p] = cols[pr.pivots[p].second].coord(pr.pivots[p].first);
  const auto& W = f4_projection_W<S>();
  std::vector<S> x(52, S(0));
  for (int i = 0; i < 52; ++i)
    for (int j = 0; j < 52; ++j)
      if (nz(W[i][j]) && nz(ent[j])) x[i] += W[i][j] * ent[j];
  return F4El<S>::from_coords(x);
}

// Structural form of the e7 element whose action sends basis vector i of the
// Freudenthal space to col(i).
template <class S, class ColFn>
E7El<S> e7_from_action(ColFn col) {
  E7El<S> F;
  PVec<S> c55 = col(55), c54 = col(54);
  F.A = c55.X;
  F.nu = -c55.eta;
  F.B = c54.Y;
  const S third = F.nu * frac<S>(1, 3);
  std::vector<Jordan<S>> phi_cols(27);
  std::vector<char> have(27, 0);
  auto phi_col = [&](int c) -> const Jordan<S>& {
    if (!have[c]) {
      phi_cols[c] = col(c).X + third * Jordan<S>::basis(c);
      have[c] = 1;
    }
    return phi_cols[c];
  };
  Jordan<S> T = phi_col(0) + phi_col(1) + phi_col(2);
  F.phi.T = T;
  F.phi.delta = f4_from_columns<S>([&](int c) { return phi_col(c) - jordan_mul(T, Jordan<S>::basis(c)); });
  return F;
}

// [Phi1, Phi2] by extraction from the commutator of the actions.
template <class S>
E7El<S> e7_bracket(const E7El<S>& F1, const E7El<S>& F2) {
  return e7_from_action<S>([&](int i) {
    PVec<S> b = PVec<S>::basis(i);
    return e7_act(F1, e7_act(F2, b)) - e7_act(F2, e7_act(F1, b));
  });
}

// Maximum coordinate discrepancy between the action of F and col(i) over all
// 56 basis vectors (zero when the extraction is consistent).
template <class S, class ColFn>
bool e7_action_matches(const E7El<S>& F, ColFn col) {
  for (int i = 0; i < 56; ++i)
    if (e7_act(F, PVec<S>::basis(i)) != col(i)) return false;
  return true;
}

// Killing form of e7 as an ad-trace over the 133 coordinate basis.
mpq_class killing_e7_basis(int a, int b);
template <class S>
S killing_e7(const E7El<S>& F1, const E7El<S>& F2);

// Dense matrix of a linear (or conjugate-linear) endomorphism over a
// coordinatized space.
template <class S>
struct LinearEndo {
  int dim = 0;
  std::vector<S> a;  // row-major
  bool conj_linear = false;

  LinearEndo() = default;
  explicit LinearEndo(int n) : dim(n), a(size_t(n) * n, S(0)) {}
  static LinearEndo identity(int n) {
    LinearEndo m(n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  S& operator()(int i, int j) { return a[size_t(i) * dim + j]; }
  const S& operator()(int i, int j) const { return a[size_t(i) * dim + j]; }

  std::vector<S> apply(std::vector<S> v) const {
    if (conj_linear)
      for (auto& x : v) x = ST<S>::conj(x);
    std::vector<S> r(dim, S(0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (nz((*this)(i, j)) && nz(v[j])) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  bool operator==(const LinearEndo& o) const {
    if (dim != o.dim || conj_linear != o.conj_linear) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!is_zero(S(a[i] - o.a[i]))) return false;
    return true;
  }
};

// M1 * M2 (apply M2 first). Conjugate-linear factors compose with conjugation
// of the left factor's entries when the right factor is conjugate-linear.
template <class S>
LinearEndo<S> compose(const LinearEndo<S>& M1, const LinearEndo<S>& M2) {
  int n = M1.dim;
  LinearEndo<S> R(n);
  R.conj_linear = M1.conj_linear != M2.conj_linear;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      S m = M1(i, k);
      if (!nz(m)) continue;
      for (int j = 0; j < n; ++j) {
        S b = M2(k, j);
        if (M1.conj_linear) b = ST<S>::conj(b);
        if (nz(b)) R(i, j) += m * b;
      }
    }
  return R;
}

template <class S, class Fn>
LinearEndo<S> endo_from_fn(int n, Fn f) {
  LinearEndo<S> M(n);
  for (int j = 0; j < n; ++j) {
    std::vector<S> e(n, S(0));
    e[j] = S(1);
    std::vector<S> img = f(e);
    for (int i = 0; i < n; ++i) M(i, j) = img[i];
  }
  return M;
}

template <class S> LinearEndo<S> to_endo(const F4El<S>& d) {
  return endo_from_fn<S>(27, [&](const std::vector<S>& v) { return f4_act(d, Jordan<S>::from_coords(v)).coords(); });
}
template <class S> LinearEndo<S> to_endo(const E6El<S>& p) {
  return endo_from_fn<S>(27, [&](const std::vector<S>& v) { return e6_act(p, Jordan<S>::from_coords(v)).coords(); });
}
template <class S> LinearEndo<S> to_endo(const E7El<S>& F) {
  return endo_from_fn<S>(56, [&](const std::vector<S>& v) { return e7_act(F, PVec<S>::from_coords(v)).coords(); });
}

// exp of an approximate endomorphism (scaling and squaring).
LinearEndo<cd> exp_endo(const LinearEndo<cd>& M);

}  // namespace e8
