#pragma once

#include <array>
#include <vector>

#include "e8/freudenthal.hpp"

namespace e8 {

// Structure data of e7 and e8 in the coordinate bases, computed once over Q.
struct AlgebraTables {
  // e7 action on the Freudenthal space: M7[k][j] = column j of basis element k.
  std::vector<std::vector<SparseVec<mpq_class>>> M7;
  // [e7_a, e7_b] in e7 coordinates.
  std::vector<std::vector<SparseVec<mpq_class>>> C7;
  // P_p x P_q for Freudenthal basis vectors, in e7 coordinates.
  std::vector<std::vector<SparseVec<mpq_class>>> FX;
  // {P_p, P_q} on basis vectors.
  std::vector<std::vector<mpq_class>> SK;
  // [e8_a, e8_b] in e8 coordinates.
  std::vector<std::vector<SparseVec<mpq_class>>> C8;
  // Killing forms (ad-traces) on basis pairs.
  std::vector<std::vector<mpq_class>> K7, K8;
  // Matrices over the e7 coordinates of Phi -> g Phi g^{-1} for g = sigma'_4,
  // sigma, lambda.
  std::vector<SparseVec<mpq_class>> sigma4_e7, sigma_e7, lambda_e7;
};

const AlgebraTables& tables();

// Tables converted to the real type of S (rationals or doubles).
template <class S>
struct TablesAs {
  using R = typename ST<S>::real;
  std::vector<std::vector<SparseVec<R>>> M7, C7, FX, C8;
  std::vector<std::vector<R>> SK, K7, K8;
  std::vector<SparseVec<R>> sigma4_e7, sigma_e7, lambda_e7;
};

template <class S>
const TablesAs<S>& tables_as();

// ---- coordinate-level operations (fast paths) ----

template <class S>
using CVec = std::vector<S>;

// Bracket of two e8 coordinate vectors through the structure constants.
template <class S>
CVec<S> e8_bracket_coords(const CVec<S>& x, const CVec<S>& y) {
  const auto& T = tables_as<S>();
  CVec<S> out(248, S(0));
  std::vector<int> nx, ny;
  for (int i = 0; i < 248; ++i) {
    if (nz(x[i])) nx.push_back(i);
    if (nz(y[i])) ny.push_back(i);
  }
  for (int a : nx)
    for (int b : ny) {
      if (a == b) continue;
      const auto& c = T.C8[a][b];
      if (c.empty()) continue;
      S p = x[a] * y[b];
      for (const auto& [k, v] : c) out[k] += scale(v, p);
    }
  return out;
}

template <class S>
CVec<S> e7_bracket_coords(const CVec<S>& x, const CVec<S>& y) {
  const auto& T = tables_as<S>();
  CVec<S> out(133, S(0));
  for (int a = 0; a < 133; ++a) {
    if (!nz(x[a])) continue;
    for (int b = 0; b < 133; ++b) {
      if (a == b || !nz(y[b])) continue;
      S p = x[a] * y[b];
      for (const auto& [k, v] : T.C7[a][b]) out[k] += scale(v, p);
    }
  }
  return out;
}

template <class S>
CVec<S> e7_act_coords(const CVec<S>& phi, const CVec<S>& p) {
  const auto& T = tables_as<S>();
  CVec<S> out(56, S(0));
  for (int a = 0; a < 133; ++a) {
    if (!nz(phi[a])) continue;
    for (int j = 0; j < 56; ++j) {
      if (!nz(p[j])) continue;
      S c = phi[a] * p[j];
      for (const auto& [k, v] : T.M7[a][j]) out[k] += scale(v, c);
    }
  }
  return out;
}

template <class S>
S killing_bilinear(const std::vector<std::vector<typename ST<S>::real>>& K, const CVec<S>& x, const CVec<S>& y) {
  S s(0);
  int n = int(x.size());
  for (int a = 0; a < n; ++a) {
    if (!nz(x[a])) continue;
    S t(0);
    for (int b = 0; b < n; ++b)
      if (nz(y[b]) && K[a][b] != 0) t += scale(K[a][b], y[b]);
    s += x[a] * t;
  }
  return s;
}

template <class S> S killing_e8_coords(const CVec<S>& x, const CVec<S>& y) { return killing_bilinear<S>(tables_as<S>().K8, x, y); }
template <class S> S killing_e7_coords(const CVec<S>& x, const CVec<S>& y) { return killing_bilinear<S>(tables_as<S>().K7, x, y); }

template <class S>
S killing_e7(const E7El<S>& F1, const E7El<S>& F2) {
  return killing_e7_coords<S>(F1.coords(), F2.coords());
}

// ---- structural operations ----

// The bracket exactly as displayed, component by component.
template <class S>
E8El<S> e8_bracket(const E8El<S>& R1, const E8El<S>& R2) {
  E8El<S> R;
  auto phi = e7_lin(e7_bracket(R1.Phi, R2.Phi), S(1), fcross(R1.P, R2.Q), S(1));
  R.Phi = e7_lin(phi, S(1), fcross(R2.P, R1.Q), S(-1));
  R.P = e7_act(R1.Phi, R2.P) - e7_act(R2.Phi, R1.P) + R1.r * R2.P - R2.r * R1.P + R1.s * R2.Q - R2.s * R1.Q;
  R.Q = e7_act(R1.Phi, R2.Q) - e7_act(R2.Phi, R1.Q) - R1.r * R2.Q + R2.r * R1.Q + R1.t * R2.P - R2.t * R1.P;
  R.r = frac<S>(-1, 8) * skew(R1.P, R2.Q) + frac<S>(1, 8) * skew(R2.P, R1.Q) + R1.s * R2.t - R2.s * R1.t;
  R.s = frac<S>(1, 4) * skew(R1.P, R2.P) + S(2) * R1.r * R2.s - S(2) * R2.r * R1.s;
  R.t = frac<S>(-1, 4) * skew(R1.Q, R2.Q) - S(2) * R1.r * R2.t + S(2) * R2.r * R1.t;
  return R;
}

template <class S>
E8El<S> e8_bracket_fast(const E8El<S>& R1, const E8El<S>& R2) {
  return E8El<S>::from_coords(e8_bracket_coords<S>(R1.coords(), R2.coords()));
}

template <class S>
S killing_e8(const E8El<S>& R1, const E8El<S>& R2) {
  return killing_e8_coords<S>(R1.coords(), R2.coords());
}

// ad R as a dense 248 x 248 matrix.
template <class S>
LinearEndo<S> ad_matrix(const E8El<S>& R) {
  auto x = R.coords();
  LinearEndo<S> M(248);
  for (int b = 0; b < 248; ++b) {
    CVec<S> e(248, S(0));
    e[b] = S(1);
    auto col = e8_bracket_coords<S>(x, e);
    for (int i = 0; i < 248; ++i) M(i, b) = col[i];
  }
  return M;
}

// (R x R) R1 = [R, [R, R1]] + 1/30 B8(R, R1) R
template <class S>
CVec<S> r_cross_coords(const CVec<S>& R, const CVec<S>& R1) {
  auto v = e8_bracket_coords<S>(R, e8_bracket_coords<S>(R, R1));
  S b = killing_e8_coords<S>(R, R1) * frac<S>(1, 30);
  if (nz(b))
    for (int i = 0; i < 248; ++i) v[i] += b * R[i];
  return v;
}

template <class S>
E8El<S> r_cross(const E8El<S>& R, const E8El<S>& R1) {
  return E8El<S>::from_coords(r_cross_coords<S>(R.coords(), R1.coords()));
}

// Residual norms (max coordinate) of the thirteen conditions characterising
// R x R = 0 on the sigma'_4-fixed, so(6)-commuting set. Conditions quantified
// over P1, Q1 or Phi1 are evaluated on every basis vector of that slot.
template <class S>
std::array<double, 13> lemma53_conditions(const E8El<S>& R) {
  using PV = PVec<S>;
  using F7 = E7El<S>;
  auto nrm = [](const std::vector<S>& v) { return dense_max_abs(v); };
  auto lin = [](const F7& a, const S& ca, const F7& b, const S& cb) { return e7_lin(a, ca, b, cb); };
  auto sc = [](const F7& a, const S& c) { return e7_lin(a, c, a, S(0)); };
  auto act = [](const F7& F, const PV& p) { return PV::from_coords(e7_act_coords<S>(F.coords(), p.coords())); };
  auto br = [](const F7& a, const F7& b) { return F7::from_coords(e7_bracket_coords<S>(a.coords(), b.coords())); };
  const auto& Phi = R.Phi;
  const auto& P = R.P;
  const auto& Q = R.Q;
  const S r = R.r, s = R.s, t = R.t;
  std::array<double, 13> res{};
  res[0] = nrm(lin(sc(Phi, S(2) * s), S(1), fcross(P, P), S(-1)).coords());
  res[1] = nrm(lin(sc(Phi, S(2) * t), S(1), fcross(Q, Q), S(1)).coords());
  res[2] = nrm(lin(sc(Phi, S(2) * r), S(1), fcross(P, Q), S(1)).coords());
  const PV PhiP = act(Phi, P), PhiQ = act(Phi, Q);
  res[3] = nrm((PhiP - S(3) * r * P - S(3) * s * Q).coords());
  res[4] = nrm((PhiQ + S(3) * r * Q - S(3) * t * P).coords());
  res[5] = ST<S>::abs(skew(P, Q) - S(16) * (s * t + r * r));
  for (int j = 0; j < 56; ++j) {
    const PV X1 = PV::basis(j);
    const PV PhiX1 = act(Phi, X1);
    // (7), (8)
    F7 a = lin(lin(fcross(PhiP, X1), S(1), sc(fcross(P, PhiX1), S(2)), S(1)), S(1),
               lin(fcross(P, X1), -r, fcross(Q, X1), -s), S(1));
    res[6] = std::max(res[6], nrm(lin(a, S(2), Phi, -skew(P, X1)).coords()));
    a = lin(lin(fcross(PhiQ, X1), S(1), sc(fcross(Q, PhiX1), S(2)), S(1)), S(1),
            lin(fcross(Q, X1), r, fcross(P, X1), -t), S(1));
    res[7] = std::max(res[7], nrm(lin(a, S(2), Phi, -skew(Q, X1)).coords()));
    // (9), (10)
    const PV PhiPhiX1 = act(Phi, PhiX1);
    PV v = S(8) * (act(fcross(P, X1), Q) - s * t * X1 - r * r * X1 - PhiPhiX1 + S(2) * r * PhiX1) +
           S(5) * skew(P, X1) * Q - S(2) * skew(Q, X1) * P;
    res[8] = std::max(res[8], nrm(v.coords()));
    v = S(8) * (act(fcross(Q, X1), P) + s * t * X1 + r * r * X1 + PhiPhiX1 + S(2) * r * PhiX1) +
        S(5) * skew(Q, X1) * P - S(2) * skew(P, X1) * Q;
    res[9] = std::max(res[9], nrm(v.coords()));
  }
  for (int k = 0; k < 133; ++k) {
    const F7 F1 = F7::basis(k);
    const S b = killing_e7_coords<S>(Phi.coords(), F1.coords());
    const PV F1P = act(F1, P), F1Q = act(F1, Q);
    // (11)
    F7 a = lin(lin(br(Phi, br(Phi, F1)), S(1), fcross(Q, F1P), S(1)), S(1), fcross(P, F1Q), S(-1));
    res[10] = std::max(res[10], nrm(lin(a, S(18), Phi, b).coords()));
    // (12), (13)
    PV v = S(18) * (act(F1, PhiP) - S(2) * act(Phi, F1P) - r * F1P - s * F1Q) + b * P;
    res[11] = std::max(res[11], nrm(v.coords()));
    v = S(18) * (act(F1, PhiQ) - S(2) * act(Phi, F1Q) + r * F1Q - t * F1P) + b * Q;
    res[12] = std::max(res[12], nrm(v.coords()));
  }
  return res;
}

// Max coordinate of (R x R) R1 over all basis vectors R1.
template <class S>
double r_cross_residual(const E8El<S>& R) {
  auto x = R.coords();
  double m = 0;
  for (int b = 0; b < 248; ++b) {
    CVec<S> e(248, S(0));
    e[b] = S(1);
    m = std::max(m, dense_max_abs(r_cross_coords<S>(x, e)));
  }
  return m;
}

// ---- maps ----

template <class S>
CVec<S> apply_sparse_matrix(const std::vector<SparseVec<typename ST<S>::real>>& cols, const CVec<S>& x) {
  CVec<S> out(cols.size(), S(0));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (!nz(x[j])) continue;
    for (const auto& [i, v] : cols[j]) out[i] += scale(v, x[j]);
  }
  return out;
}

template <class S>
E7El<S> sigma4_on_e7(const E7El<S>& F) {
  return E7El<S>::from_coords(apply_sparse_matrix<S>(tables_as<S>().sigma4_e7, F.coords()));
}

// sigma'_4 (Phi, P, Q, r, s, t) = (sigma'_4 Phi sigma'_4^{-1}, sigma'_4 P, sigma'_4 Q, r, s, t)
template <class S>
E8El<S> sigma4_on_e8(const E8El<S>& R) {
  return E8El<S>(sigma4_on_e7(R.Phi), sigma4_on_P(R.P), sigma4_on_P(R.Q), R.r, R.s, R.t);
}

template <class S>
E8El<S> sigma_on_e8(const E8El<S>& R) {
  auto phi = E7El<S>::from_coords(apply_sparse_matrix<S>(tables_as<S>().sigma_e7, R.Phi.coords()));
  return E8El<S>(phi, sigma_on_P(R.P), sigma_on_P(R.Q), R.r, R.s, R.t);
}

// lambda_omega (Phi, P, Q, r, s, t) = (lambda Phi lambda^{-1}, lambda Q, -lambda P, -r, -t, -s)
template <class S>
E8El<S> lambda_omega(const E8El<S>& R) {
  auto phi = E7El<S>::from_coords(apply_sparse_matrix<S>(tables_as<S>().lambda_e7, R.Phi.coords()));
  return E8El<S>(phi, lambda_map(R.Q), -lambda_map(R.P), -R.r, -R.t, -R.s);
}

// Complex conjugation; the coordinate bases are real so tau conjugates
// coordinates.
template <class S>
E8El<S> tau(const E8El<S>& R) {
  auto c = R.coords();
  for (auto& v : c) v = ST<S>::conj(v);
  return E8El<S>::from_coords(c);
}

template <class S>
bool is_real_scalar(const S& x) {
  return is_zero(S(x - ST<S>::conj(x)));
}
template <class S>
bool is_imag_scalar(const S& x) {
  return is_zero(S(x + ST<S>::conj(x)));
}

// Compact e7: Phi(delta + i T~, A, -tau A, nu) with delta real, T real, nu in iR.
template <class S>
bool compact_e7_member(const E7El<S>& F) {
  auto c = F.phi.coords();
  for (int i = 0; i < 52; ++i)
    if (!is_real_scalar(c[i])) return false;
  for (int i = 52; i < 78; ++i)
    if (!is_imag_scalar(c[i])) return false;
  for (int i = 0; i < 27; ++i)
    if (!is_zero(S(F.B.coord(i) + ST<S>::conj(F.A.coord(i))))) return false;
  return is_imag_scalar(F.nu);
}

// (Phi, P, -tau lambda P, r, s, -tau s) with Phi compact and r in iR.
template <class S>
bool compact_form_member(const E8El<S>& R) {
  if (!compact_e7_member(R.Phi)) return false;
  PVec<S> q = -pvec_map(lambda_map(R.P), [](const S& v) { return ST<S>::conj(v); });
  if (q != R.Q) return false;
  if (!is_zero(S(R.t + ST<S>::conj(R.s)))) return false;
  return is_imag_scalar(R.r);
}

// Distinguished elements: 1~ (r-slot), 1^- (s-slot), 1_- (t-slot).
template <class S> E8El<S> one_r() { return E8El<S>::basis(kE8R); }
template <class S> E8El<S> one_s() { return E8El<S>::basis(kE8S); }
template <class S> E8El<S> one_t() { return E8El<S>::basis(kE8T); }

template <class S>
E8El<S> e8_from_e7(const E7El<S>& F) {
  E8El<S> R;
  R.Phi = F;
  return R;
}

template <class S>
E8El<S> e8_lin(const E8El<S>& a, const S& ca, const E8El<S>& b, const S& cb) {
  auto x = a.coords();
  auto y = b.coords();
  for (int i = 0; i < 248; ++i) x[i] = ca * x[i] + cb * y[i];
  return E8El<S>::from_coords(x);
}

template <class S>
bool operator==(const E8El<S>& a, const E8El<S>& b) {
  auto x = a.coords();
  auto y = b.coords();
  for (int i = 0; i < 248; ++i)
    if (!is_zero(S(x[i] - y[i]))) return false;
  return true;
}

template <class S>
bool operator==(const E7El<S>& a, const E7El<S>& b) {
  auto x = a.coords();
  auto y = b.coords();
  for (int i = 0; i < 133; ++i)
    if (!is_zero(S(x[i] - y[i]))) return false;
  return true;
}

}  // namespace e8
