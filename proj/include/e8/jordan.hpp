#pragma once

#include <concepts>
#include <array>
#include <vector>

#include "e8/octonion.hpp"

namespace e8 {

// Hermitian matrix [[xi1, x3, conj x2], [conj x3, xi2, x1], [x2, conj x1, xi3]].
// Coordinates: (xi1, xi2, xi3, x1[0..7], x2[0..7], x3[0..7]).
template <class S>
struct Jordan {
  std::array<S, 3> xi{};
  std::array<Octonion<S>, 3> x{};

  Jordan() {
    for (auto& v : xi) v = S(0);
  }

  static constexpr int dim = 27;

  static Jordan E(int i) {  // i in 1..3
    Jordan j;
    j.xi[i - 1] = S(1);
    return j;
  }
  static Jordan Id() {
    Jordan j;
    for (auto& v : j.xi) v = S(1);
    return j;
  }
  static Jordan F(int k, const Octonion<S>& o) {  // k in 1..3
    Jordan j;
    j.x[k - 1] = o;
    return j;
  }
  static Jordan basis(int idx) {
    Jordan j;
    j.coord(idx) = S(1);
    return j;
  }

  S& coord(int idx) { return idx < 3 ? xi[idx] : x[(idx - 3) / 8].c[(idx - 3) % 8]; }
  const S& coord(int idx) const { return idx < 3 ? xi[idx] : x[(idx - 3) / 8].c[(idx - 3) % 8]; }

  std::vector<S> coords() const {
    std::vector<S> v(27);
    for (int i = 0; i < 27; ++i) v[i] = coord(i);
    return v;
  }
  static Jordan from_coords(const std::vector<S>& v, int off = 0) {
    Jordan j;
    for (int i = 0; i < 27; ++i) j.coord(i) = v[off + i];
    return j;
  }

  Jordan& operator+=(const Jordan& o) {
    for (int i = 0; i < 3; ++i) { xi[i] += o.xi[i]; x[i] += o.x[i]; }
    return *this;
  }
  Jordan& operator-=(const Jordan& o) {
    for (int i = 0; i < 3; ++i) { xi[i] -= o.xi[i]; x[i] -= o.x[i]; }
    return *this;
  }
  Jordan& operator*=(const S& s) {
    for (int i = 0; i < 3; ++i) { xi[i] *= s; x[i] *= s; }
    return *this;
  }
  Jordan operator-() const {
    Jordan r;
    r -= *this;
    return r;
  }
  bool operator==(const Jordan& o) const {
    for (int i = 0; i < 27; ++i)
      if (!is_zero(S(coord(i) - o.coord(i)))) return false;
    return true;
  }
  bool operator!=(const Jordan& o) const { return !(*this == o); }
  bool is_zero_el() const {
    for (int i = 0; i < 27; ++i)
      if (!is_zero(coord(i))) return false;
    return true;
  }
};

template <class S> Jordan<S> operator+(Jordan<S> a, const Jordan<S>& b) { return a += b; }
template <class S> Jordan<S> operator-(Jordan<S> a, const Jordan<S>& b) { return a -= b; }
template <class S, class U>
  requires std::convertible_to<U, S>
Jordan<S> operator*(Jordan<S> a, const U& s) {
  return a *= S(s);
}
template <class S, class U>
  requires std::convertible_to<U, S>
Jordan<S> operator*(const U& s, Jordan<S> a) {
  return a *= S(s);
}

template <class S> S jordan_tr(const Jordan<S>& X) { return X.xi[0] + X.xi[1] + X.xi[2]; }

// X o Y
template <class S>
Jordan<S> jordan_mul(const Jordan<S>& X, const Jordan<S>& Y) {
  Jordan<S> R;
  const S half = frac<S>(1, 2);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    R.xi[i] = X.xi[i] * Y.xi[i] + oct_inner(X.x[j], Y.x[j]) + oct_inner(X.x[k], Y.x[k]);
    Octonion<S> o = (X.xi[j] + X.xi[k]) * Y.x[i] + (Y.xi[j] + Y.xi[k]) * X.x[i];
    o += oct_conj(X.x[j] * Y.x[k]) + oct_conj(Y.x[j] * X.x[k]);
    R.x[i] = half * o;
  }
  return R;
}

template <class S> S jordan_inner(const Jordan<S>& X, const Jordan<S>& Y) { return jordan_tr(jordan_mul(X, Y)); }

// X x Y = 1/2 (2 X o Y - tr(X) Y - tr(Y) X + (tr X tr Y - (X,Y)) E)
template <class S>
Jordan<S> jordan_cross(const Jordan<S>& X, const Jordan<S>& Y) {
  S tx = jordan_tr(X), ty = jordan_tr(Y);
  Jordan<S> R = jordan_mul(X, Y) * S(2);
  R -= tx * Y;
  R -= ty * X;
  R += (tx * ty - jordan_inner(X, Y)) * Jordan<S>::Id();
  return frac<S>(1, 2) * R;
}

template <class S> S jordan_tri(const Jordan<S>& X, const Jordan<S>& Y, const Jordan<S>& Z) {
  return jordan_inner(X, jordan_cross(Y, Z));
}

template <class S>
S jordan_det(const Jordan<S>& X) {
  S d = X.xi[0] * X.xi[1] * X.xi[2];
  d += S(2) * oct_re((X.x[0] * X.x[1]) * X.x[2]);
  for (int i = 0; i < 3; ++i) d -= X.xi[i] * oct_norm(X.x[i]);
  return d;
}

template <class S> Jordan<S> sigma_map(const Jordan<S>& X) {
  Jordan<S> R = X;
  R.x[1] = -R.x[1];
  R.x[2] = -R.x[2];
  return R;
}

template <class S> Octonion<S> sigma4_oct(int slot, const Octonion<S>& o) {
  const auto e1 = Octonion<S>::basis(1);
  switch (slot) {
    case 0: return -(e1 * (o * e1));
    case 1: return e1 * o;
    default: return -(o * e1);
  }
}

template <class S> Jordan<S> sigma4_map(const Jordan<S>& X) {
  Jordan<S> R = X;
  for (int k = 0; k < 3; ++k) R.x[k] = sigma4_oct(k, X.x[k]);
  return R;
}

template <class S> Jordan<S> sigma4_inv_map(const Jordan<S>& X) {
  return sigma4_map(sigma4_map(sigma4_map(X)));
}

template <class S, class F>
Jordan<S> jordan_map(const Jordan<S>& X, F f) {
  Jordan<S> R;
  for (int i = 0; i < 27; ++i) R.coord(i) = f(X.coord(i));
  return R;
}

// Coordinate indices spanning the fixed space of sigma'_4 (diagonal and
// F1 over span{e0,e1}) and its invariant complement.
struct Sigma4Split {
  std::vector<int> fixed;
  std::vector<int> moved;
};
Sigma4Split eigenspace_split_sigma4();

}  // namespace e8
