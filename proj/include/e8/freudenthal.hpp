#pragma once

#include "e8/lie_algebras.hpp"

namespace e8 {

// X v W = [X~, W~] + (X o W - 1/3 (X,W) E)~
template <class S>
E6El<S> vee(const Jordan<S>& X, const Jordan<S>& W) {
  E6El<S> r;
  if (X.is_zero_el() || W.is_zero_el()) return r;
  r.delta = f4_from_columns<S>([&](int c) {
    Jordan<S> e = Jordan<S>::basis(c);
    return jordan_mul(X, jordan_mul(W, e)) - jordan_mul(W, jordan_mul(X, e));
  });
  r.T = jordan_mul(X, W) - (jordan_inner(X, W) * frac<S>(1, 3)) * Jordan<S>::Id();
  return r;
}

template <class S>
E6El<S> e6_add(const E6El<S>& a, const E6El<S>& b, const S& cb = S(1)) {
  auto x = a.coords();
  auto y = b.coords();
  for (size_t i = 0; i < x.size(); ++i) x[i] += cb * y[i];
  return E6El<S>::from_coords(x);
}

template <class S>
E7El<S> e7_lin(const E7El<S>& a, const S& ca, const E7El<S>& b, const S& cb) {
  auto x = a.coords();
  auto y = b.coords();
  for (size_t i = 0; i < x.size(); ++i) x[i] = ca * x[i] + cb * y[i];
  return E7El<S>::from_coords(x);
}

// P x Q for P = (X, Y, xi, eta), Q = (Z, W, zeta, omega).
template <class S>
E7El<S> fcross(const PVec<S>& P, const PVec<S>& Q) {
  const auto& X = P.X;
  const auto& Y = P.Y;
  const auto& Z = Q.X;
  const auto& W = Q.Y;
  E7El<S> F;
  F.phi = e6_add(vee(X, W), vee(Z, Y));
  {
    auto c = F.phi.coords();
    for (auto& v : c) v *= frac<S>(-1, 2);
    F.phi = E6El<S>::from_coords(c);
  }
  F.A = frac<S>(-1, 4) * (S(2) * jordan_cross(Y, W) - P.xi * Z - Q.xi * X);
  F.B = frac<S>(1, 4) * (S(2) * jordan_cross(X, Z) - P.eta * W - Q.eta * Y);
  F.nu = frac<S>(1, 8) * (jordan_inner(X, W) + jordan_inner(Z, Y) - S(3) * (P.xi * Q.eta + Q.xi * P.eta));
  return F;
}

// {P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta
template <class S>
S skew(const PVec<S>& P, const PVec<S>& Q) {
  return jordan_inner(P.X, Q.Y) - jordan_inner(Q.X, P.Y) + P.xi * Q.eta - Q.xi * P.eta;
}

template <class S> PVec<S> lambda_map(const PVec<S>& P) { return PVec<S>(P.Y, -P.X, P.eta, -P.xi); }
template <class S> PVec<S> lambda_inv_map(const PVec<S>& P) { return PVec<S>(-P.Y, P.X, -P.eta, P.xi); }

// kappa1 X = (E1, X) E1 - 4 E1 x (E1 x X)
template <class S>
Jordan<S> kappa1(const Jordan<S>& X) {
  const auto E1 = Jordan<S>::E(1);
  return jordan_inner(E1, X) * E1 - S(4) * jordan_cross(E1, jordan_cross(E1, X));
}

template <class S> PVec<S> kappa_map(const PVec<S>& P) { return PVec<S>(-kappa1(P.X), kappa1(P.Y), -P.xi, P.eta); }

// mu(X, Y, xi, eta) = (2 E1 x Y + eta E1, 2 E1 x X + xi E1, (E1, Y), (E1, X))
template <class S>
PVec<S> mu_map(const PVec<S>& P) {
  const auto E1 = Jordan<S>::E(1);
  return PVec<S>(S(2) * jordan_cross(E1, P.Y) + P.eta * E1, S(2) * jordan_cross(E1, P.X) + P.xi * E1,
                 jordan_inner(E1, P.Y), jordan_inner(E1, P.X));
}

// (P, P)_mu = 1/2 {mu P, P}
template <class S> S mu_norm(const PVec<S>& P) { return frac<S>(1, 2) * skew(mu_map(P), P); }

template <class S> PVec<S> sigma_on_P(const PVec<S>& P) { return PVec<S>(sigma_map(P.X), sigma_map(P.Y), P.xi, P.eta); }
template <class S> PVec<S> sigma4_on_P(const PVec<S>& P) {
  return PVec<S>(sigma4_map(P.X), sigma4_map(P.Y), P.xi, P.eta);
}
template <class S> PVec<S> sigma4_inv_on_P(const PVec<S>& P) {
  return PVec<S>(sigma4_inv_map(P.X), sigma4_inv_map(P.Y), P.xi, P.eta);
}

template <class S, class F>
PVec<S> pvec_map(const PVec<S>& P, F f) {
  PVec<S> R;
  for (int i = 0; i < 56; ++i) R.coord(i) = f(P.coord(i));
  return R;
}

// Conjugation of an e7 element by a linear map g of the Freudenthal space:
// g Phi g^{-1}.
template <class S, class G, class GInv>
E7El<S> e7_conjugate(const E7El<S>& F, G g, GInv ginv) {
  return e7_from_action<S>([&](int i) { return g(e7_act(F, ginv(PVec<S>::basis(i)))); });
}

}  // namespace e8
