#include "e8/scalar.hpp"

#include <atomic>
#include <cstdio>

namespace e8 {

namespace {
std::atomic<double> g_tol{1e-9};
}

double approx_tol() { return g_tol.load(std::memory_order_relaxed); }
void set_approx_tol(double t) { g_tol.store(t, std::memory_order_relaxed); }

std::string to_string(const Cq& z) {
  if (z.im == 0) return z.re.get_str();
  if (z.re == 0) return z.im.get_str() + "i";
  std::string im = z.im.get_str();
  if (im[0] != '-') im = "+" + im;
  return z.re.get_str() + im + "i";
}

std::string ST<cd>::str(const cd& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", x.real(), x.imag());
  return buf;
}

std::string ST<double>::str(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace e8
