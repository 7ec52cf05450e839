#pragma once

#include <doctest.h>

#include <random>

#include "e8/e8_core.hpp"
#include "e8/freudenthal.hpp"

namespace e8::test {

using OQ = Octonion<Cq>;
using JQ = Jordan<Cq>;
using PQ = PVec<Cq>;

inline Cq rq(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> U(lo, hi);
  return Cq(mpq_class(U(rng)), mpq_class(U(rng)));
}

inline OQ rand_oct(std::mt19937_64& rng) {
  OQ o;
  for (auto& c : o.c) c = rq(rng);
  return o;
}

inline JQ rand_jordan(std::mt19937_64& rng) {
  JQ X;
  for (int i = 0; i < 27; ++i) X.coord(i) = rq(rng);
  return X;
}

inline PQ rand_pvec(std::mt19937_64& rng) {
  PQ P;
  for (int i = 0; i < 56; ++i) P.coord(i) = rq(rng);
  return P;
}

inline std::vector<Cq> rand_sparse(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Cq> v(n, Cq(0));
  for (auto& x : v)
    if (keep(rng)) x = rq(rng);
  return v;
}

}  // namespace e8::test
