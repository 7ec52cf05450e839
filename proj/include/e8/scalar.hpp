#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace e8 {

// Complex number with arbitrary-precision rational parts.
struct Cq {
  mpq_class re, im;

  Cq() : re(0), im(0) {}
  Cq(long v) : re(v), im(0) {}
  Cq(int v) : re(v), im(0) {}
  Cq(const mpq_class& r) : re(r), im(0) {}
  Cq(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  Cq& operator+=(const Cq& o) { re += o.re; im += o.im; return *this; }
  Cq& operator-=(const Cq& o) { re -= o.re; im -= o.im; return *this; }
  Cq& operator*=(const Cq& o) {
    if (im == 0 && o.im == 0) { re *= o.re; return *this; }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cq& operator/=(const Cq& o) {
    if (o.im == 0) { re /= o.re; im /= o.re; return *this; }
    mpq_class n = o.re * o.re + o.im * o.im;
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Cq& operator*=(const mpq_class& q) { re *= q; im *= q; return *this; }
  Cq operator-() const { return Cq(-re, -im); }
  bool operator==(const Cq& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Cq& o) const { return !(*this == o); }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline Cq operator+(Cq a, const Cq& b) { return a += b; }
inline Cq operator-(Cq a, const Cq& b) { return a -= b; }
inline Cq operator*(Cq a, const Cq& b) { return a *= b; }
inline Cq operator/(Cq a, const Cq& b) { return a /= b; }
inline Cq operator*(Cq a, const mpq_class& q) { return a *= q; }
inline Cq operator*(const mpq_class& q, Cq a) { return a *= q; }

std::string to_string(const Cq& z);

using cd = std::complex<double>;

// Absolute tolerance used by approximate comparisons.
double approx_tol();
void set_approx_tol(double t);

// Scalar traits: the engine is written once against these and instantiated
// for rationals (structure constants), complex rationals (exact backend),
// and complex doubles (approximate backend).
template <class S> struct ST;

template <> struct ST<mpq_class> {
  using real = mpq_class;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static mpq_class frac(long n, long d = 1) { return mpq_class(n, d); }
  static mpq_class from_real(const mpq_class& q) { return q; }
  static mpq_class imag_unit() { throw std::logic_error("no imaginary unit over Q"); }
  static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
  static mpq_class conj(const mpq_class& x) { return x; }
  static double abs(const mpq_class& x) { return std::fabs(x.get_d()); }
  static std::string str(const mpq_class& x) { return x.get_str(); }
};

template <> struct ST<Cq> {
  using real = mpq_class;
  static constexpr bool exact = true;
  static constexpr bool complex = true;
  static Cq frac(long n, long d = 1) { return Cq(mpq_class(n, d)); }
  static Cq from_real(const mpq_class& q) { return Cq(q); }
  static Cq imag_unit() { return Cq(0, 1); }
  static bool is_zero(const Cq& x) { return x.is_zero(); }
  static Cq conj(const Cq& x) { return Cq(x.re, -x.im); }
  static double abs(const Cq& x) { return std::hypot(x.re.get_d(), x.im.get_d()); }
  static std::string str(const Cq& x) { return to_string(x); }
};

template <> struct ST<cd> {
  using real = double;
  static constexpr bool exact = false;
  static constexpr bool complex = true;
  static cd frac(long n, long d = 1) { return cd(double(n) / double(d)); }
  static cd from_real(double q) { return cd(q); }
  static cd imag_unit() { return cd(0, 1); }
  static bool is_zero(const cd& x) { return std::abs(x) <= approx_tol(); }
  static cd conj(const cd& x) { return std::conj(x); }
  static double abs(const cd& x) { return std::abs(x); }
  static std::string str(const cd& x);
};

template <> struct ST<double> {
  using real = double;
  static constexpr bool exact = false;
  static constexpr bool complex = false;
  static double frac(long n, long d = 1) { return double(n) / double(d); }
  static double from_real(double q) { return q; }
  static double imag_unit() { throw std::logic_error("no imaginary unit over R"); }
  static bool is_zero(double x) { return std::fabs(x) <= approx_tol(); }
  static double conj(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static std::string str(double x);
};

template <class S> inline bool is_zero(const S& x) { return ST<S>::is_zero(x); }
// Exact structural test used to skip terms in sparse products.
template <class S> inline bool nz(const S& x) { return !(x == S(0)); }
template <class S> inline S frac(long n, long d = 1) { return ST<S>::frac(n, d); }

// Multiply a scalar by a structure constant of the scalar's real type.
inline Cq scale(const mpq_class& q, const Cq& x) { return x * q; }
inline mpq_class scale(const mpq_class& q, const mpq_class& x) { return q * x; }
inline cd scale(double q, const cd& x) { return q * x; }
inline double scale(double q, double x) { return q * x; }

// Embed a rational into any scalar type.
template <class S> S from_q(const mpq_class& q);
template <> inline mpq_class from_q<mpq_class>(const mpq_class& q) { return q; }
template <> inline Cq from_q<Cq>(const mpq_class& q) { return Cq(q); }
template <> inline cd from_q<cd>(const mpq_class& q) { return cd(q.get_d(), 0.0); }
template <> inline double from_q<double>(const mpq_class& q) { return q.get_d(); }

// Conversions used when moving exact data into the approximate backend.
inline cd to_cd(const Cq& z) { return cd(z.re.get_d(), z.im.get_d()); }
inline cd to_cd(const mpq_class& q) { return cd(q.get_d(), 0.0); }
inline cd to_cd(const cd& z) { return z; }

}  // namespace e8
