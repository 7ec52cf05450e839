#pragma once

#include <concepts>
#include <array>
#include <vector>

#include "e8/jordan.hpp"

namespace e8 {

using Mat8 = std::array<std::array<mpq_class, 8>, 8>;

// (X, Y, xi, eta) in the 56-dimensional Freudenthal space.
template <class S>
struct PVec {
  Jordan<S> X, Y;
  S xi{0}, eta{0};

  static constexpr int dim = 56;

  PVec() : xi(0), eta(0) {}
  PVec(const Jordan<S>& x, const Jordan<S>& y, const S& a, const S& b) : X(x), Y(y), xi(a), eta(b) {}

  static PVec basis(int i) {
    PVec p;
    p.coord(i) = S(1);
    return p;
  }
  S& coord(int i) { return i < 27 ? X.coord(i) : i < 54 ? Y.coord(i - 27) : i == 54 ? xi : eta; }
  const S& coord(int i) const { return i < 27 ? X.coord(i) : i < 54 ? Y.coord(i - 27) : i == 54 ? xi : eta; }
  std::vector<S> coords() const {
    std::vector<S> v(56);
    for (int i = 0; i < 56; ++i) v[i] = coord(i);
    return v;
  }
  static PVec from_coords(const std::vector<S>& v, int off = 0) {
    PVec p;
    for (int i = 0; i < 56; ++i) p.coord(i) = v[off + i];
    return p;
  }
  PVec& operator+=(const PVec& o) { X += o.X; Y += o.Y; xi += o.xi; eta += o.eta; return *this; }
  PVec& operator-=(const PVec& o) { X -= o.X; Y -= o.Y; xi -= o.xi; eta -= o.eta; return *this; }
  PVec& operator*=(const S& s) { X *= s; Y *= s; xi *= s; eta *= s; return *this; }
  PVec operator-() const { PVec r; r -= *this; return r; }
  bool operator==(const PVec& o) const {
    for (int i = 0; i < 56; ++i)
      if (!is_zero(S(coord(i) - o.coord(i)))) return false;
    return true;
  }
  bool operator!=(const PVec& o) const { return !(*this == o); }
};

template <class S> PVec<S> operator+(PVec<S> a, const PVec<S>& b) { return a += b; }
template <class S> PVec<S> operator-(PVec<S> a, const PVec<S>& b) { return a -= b; }
template <class S, class U>
  requires std::convertible_to<U, S>
PVec<S> operator*(const U& s, PVec<S> a) {
  return a *= S(s);
}
template <class S, class U>
  requires std::convertible_to<U, S>
PVec<S> operator*(PVec<S> a, const U& s) {
  return a *= S(s);
}

// D + A1~(a1) + A2~(a2) + A3~(a3), D antisymmetric in so(8).
// Coordinates: D[i][j] for i<j in lexicographic order (28), then a1, a2, a3 (24).
template <class S>
struct F4El {
  std::array<std::array<S, 8>, 8> D{};
  std::array<Octonion<S>, 3> a{};

  static constexpr int dim = 52;

  F4El() {
    for (auto& r : D)
      for (auto& v : r) v = S(0);
  }
  static F4El G(int i, int j) {  // G_ij e_j = e_i, G_ij e_i = -e_j
    F4El d;
    d.D[i][j] = S(1);
    d.D[j][i] = S(-1);
    return d;
  }
  static F4El A(int k, const Octonion<S>& o) {  // k in 1..3
    F4El d;
    d.a[k - 1] = o;
    return d;
  }
  std::vector<S> coords() const {
    std::vector<S> v;
    v.reserve(52);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) v.push_back(D[i][j]);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) v.push_back(a[k].c[i]);
    return v;
  }
  static F4El from_coords(const std::vector<S>& v, int off = 0) {
    F4El d;
    int n = off;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        d.D[i][j] = v[n];
        d.D[j][i] = -v[n];
        ++n;
      }
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) d.a[k].c[i] = v[n++];
    return d;
  }
  static F4El basis(int idx) {
    std::vector<S> v(52, S(0));
    v[idx] = S(1);
    return from_coords(v);
  }
};

// Index of G_ij (i<j) among the 28 so(8) coordinates.
inline int g_index(int i, int j) {
  int n = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      if (a == i && b == j) return n;
      ++n;
    }
  return -1;
}

// phi = delta + T~ with tr T = 0. Coordinates: delta (52), then T over
// E1-E2, E2-E3, F1(e0..e7), F2(..), F3(..) (26).
template <class S>
struct E6El {
  F4El<S> delta;
  Jordan<S> T;

  static constexpr int dim = 78;

  std::vector<S> coords() const {
    std::vector<S> v = delta.coords();
    v.push_back(T.xi[0]);
    v.push_back(T.xi[0] + T.xi[1]);
    for (int i = 3; i < 27; ++i) v.push_back(T.coord(i));
    return v;
  }
  static E6El from_coords(const std::vector<S>& v, int off = 0) {
    E6El e;
    e.delta = F4El<S>::from_coords(v, off);
    const S& a = v[off + 52];
    const S& b = v[off + 53];
    e.T.xi[0] = a;
    e.T.xi[1] = b - a;
    e.T.xi[2] = -b;
    for (int i = 3; i < 27; ++i) e.T.coord(i) = v[off + 51 + i];
    return e;
  }
};

// Phi(phi, A, B, nu). Coordinates: phi (78), A (27), B (27), nu (1).
template <class S>
struct E7El {
  E6El<S> phi;
  Jordan<S> A, B;
  S nu{0};

  static constexpr int dim = 133;

  E7El() : nu(0) {}
  E7El(const E6El<S>& p, const Jordan<S>& a, const Jordan<S>& b, const S& n) : phi(p), A(a), B(b), nu(n) {}

  std::vector<S> coords() const {
    std::vector<S> v = phi.coords();
    for (int i = 0; i < 27; ++i) v.push_back(A.coord(i));
    for (int i = 0; i < 27; ++i) v.push_back(B.coord(i));
    v.push_back(nu);
    return v;
  }
  static E7El from_coords(const std::vector<S>& v, int off = 0) {
    E7El e;
    e.phi = E6El<S>::from_coords(v, off);
    e.A = Jordan<S>::from_coords(v, off + 78);
    e.B = Jordan<S>::from_coords(v, off + 105);
    e.nu = v[off + 132];
    return e;
  }
  static E7El basis(int idx) {
    std::vector<S> v(133, S(0));
    v[idx] = S(1);
    return from_coords(v);
  }
};

// (Phi, P, Q, r, s, t). Coordinates: Phi (133), P (56), Q (56), r, s, t.
template <class S>
struct E8El {
  E7El<S> Phi;
  PVec<S> P, Q;
  S r{0}, s{0}, t{0};

  static constexpr int dim = 248;

  E8El() : r(0), s(0), t(0) {}
  E8El(const E7El<S>& f, const PVec<S>& p, const PVec<S>& q, const S& a, const S& b, const S& c)
      : Phi(f), P(p), Q(q), r(a), s(b), t(c) {}

  std::vector<S> coords() const {
    std::vector<S> v = Phi.coords();
    for (int i = 0; i < 56; ++i) v.push_back(P.coord(i));
    for (int i = 0; i < 56; ++i) v.push_back(Q.coord(i));
    v.push_back(r);
    v.push_back(s);
    v.push_back(t);
    return v;
  }
  static E8El from_coords(const std::vector<S>& v) {
    E8El e;
    e.Phi = E7El<S>::from_coords(v, 0);
    e.P = PVec<S>::from_coords(v, 133);
    e.Q = PVec<S>::from_coords(v, 189);
    e.r = v[245];
    e.s = v[246];
    e.t = v[247];
    return e;
  }
  static E8El basis(int idx) {
    std::vector<S> v(248, S(0));
    v[idx] = S(1);
    return from_coords(v);
  }
};

constexpr int kE8R = 245, kE8S = 246, kE8T = 247;
constexpr int kE8P = 133, kE8Q = 189;

}  // namespace e8
