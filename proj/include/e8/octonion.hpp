#pragma once

#include <concepts>
#include <array>

#include "e8/scalar.hpp"

namespace e8 {

// e_i e_j = sign * e_k
struct OctEntry {
  int sign;
  int k;
};

// Cayley table: e1 e2 = e3, e1 e4 = e5, e1 e6 = e7, e2 e4 = e6, e2 e7 = e5,
// e3 e7 = e4, e3 e6 = e5, plus cyclic shifts, anticommutation and e_i^2 = -1.
const std::array<std::array<OctEntry, 8>, 8>& oct_table();

template <class S>
struct Octonion {
  std::array<S, 8> c{};

  Octonion() {
    for (auto& v : c) v = S(0);
  }
  static Octonion basis(int i) {
    Octonion o;
    o.c[i] = S(1);
    return o;
  }
  static Octonion real(const S& v) {
    Octonion o;
    o.c[0] = v;
    return o;
  }
  S& operator[](int i) { return c[i]; }
  const S& operator[](int i) const { return c[i]; }

  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  Octonion& operator*=(const S& s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  Octonion operator-() const {
    Octonion o;
    for (int i = 0; i < 8; ++i) o.c[i] = -c[i];
    return o;
  }
  bool operator==(const Octonion& o) const {
    for (int i = 0; i < 8; ++i)
      if (!is_zero(S(c[i] - o.c[i]))) return false;
    return true;
  }
  bool operator!=(const Octonion& o) const { return !(*this == o); }
  bool is_zero_oct() const {
    for (const auto& v : c)
      if (!is_zero(v)) return false;
    return true;
  }
};

template <class S> Octonion<S> operator+(Octonion<S> a, const Octonion<S>& b) { return a += b; }
template <class S> Octonion<S> operator-(Octonion<S> a, const Octonion<S>& b) { return a -= b; }
template <class S, class U>
  requires std::convertible_to<U, S>
Octonion<S> operator*(Octonion<S> a, const U& s) {
  return a *= S(s);
}
template <class S, class U>
  requires std::convertible_to<U, S>
Octonion<S> operator*(const U& s, Octonion<S> a) {
  return a *= S(s);
}

template <class S>
Octonion<S> oct_mul(const Octonion<S>& x, const Octonion<S>& y) {
  const auto& T = oct_table();
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) {
    if (!nz(x.c[i])) continue;
    for (int j = 0; j < 8; ++j) {
      if (!nz(y.c[j])) continue;
      S p = x.c[i] * y.c[j];
      if (T[i][j].sign > 0)
        r.c[T[i][j].k] += p;
      else
        r.c[T[i][j].k] -= p;
    }
  }
  return r;
}

template <class S> Octonion<S> operator*(const Octonion<S>& x, const Octonion<S>& y) { return oct_mul(x, y); }

template <class S>
Octonion<S> oct_conj(const Octonion<S>& x) {
  Octonion<S> r = x;
  for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

template <class S> S oct_re(const Octonion<S>& x) { return x.c[0]; }

// Bilinear inner product (x,y) = sum x_i y_i = Re(x conj(y)).
template <class S>
S oct_inner(const Octonion<S>& x, const Octonion<S>& y) {
  S s(0);
  for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[i];
  return s;
}

// x conj(x), a scalar.
template <class S> S oct_norm(const Octonion<S>& x) { return oct_inner(x, x); }

template <class S, class F>
Octonion<S> oct_map(const Octonion<S>& x, F f) {
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) r.c[i] = f(x.c[i]);
  return r;
}

template <class T, class S>
Octonion<T> oct_cast(const Octonion<S>& x) {
  Octonion<T> r;
  for (int i = 0; i < 8; ++i) r.c[i] = T(x.c[i]);
  return r;
}

}  // namespace e8
