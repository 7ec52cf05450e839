#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace e8;
using namespace e8::test;

TEST_CASE("gaussian rationals") {
  Cq a(mpq_class(1, 2), mpq_class(3)), b(mpq_class(-2), mpq_class(1, 3));
  CHECK(a * b == Cq(mpq_class(-2), mpq_class(-35, 6)));
  CHECK((a / b) * b == a);
  CHECK(Cq(0, 1) * Cq(0, 1) == Cq(-1));
  CHECK(ST<Cq>::conj(a) == Cq(mpq_class(1, 2), mpq_class(-3)));
}

TEST_CASE("octonion products on basis elements") {
  auto e = [](int i) { return OQ::basis(i); };
  OQ x = 2 * e(0) + 3 * e(4) - e(7);
  CHECK(e(0) * x == x);
  CHECK(x * e(0) == x);
  CHECK(e(1) * e(1) == -1 * e(0));
  CHECK(e(1) * e(2) == e(3));
  CHECK(e(2) * e(1) == -1 * e(3));
}

TEST_CASE("octonion conjugation, real part and inner product") {
  auto e = [](int i) { return OQ::basis(i); };
  CHECK(oct_conj(e(0)) == e(0));
  CHECK(oct_conj(e(5)) == -1 * e(5));
  CHECK(oct_conj(2 * e(0) + 3 * e(4)) == 2 * e(0) - 3 * e(4));
  CHECK(oct_re(e(0)) == Cq(1));
  CHECK(oct_inner(e(2), e(2)) == Cq(1));
  CHECK(oct_re(e(1) * (e(2) * e(3))) == Cq(-1));
}

TEST_CASE("every basis product is a signed basis element and imaginary units anticommute") {
  for (int i = 1; i < 8; ++i) {
    CHECK(OQ::basis(i) * OQ::basis(i) == -1 * OQ::basis(0));
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      OQ p = OQ::basis(i) * OQ::basis(j);
      int nz = 0;
      for (const auto& c : p.c) nz += !c.is_zero();
      CHECK(nz == 1);
      CHECK(p == -1 * (OQ::basis(j) * OQ::basis(i)));
    }
  }
}

TEST_CASE("composition law, alternativity and cyclic trace on random exact octonions") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    OQ x = rand_oct(rng), y = rand_oct(rng), z = rand_oct(rng);
    CHECK(oct_norm(x * y) == oct_norm(x) * oct_norm(y));
    CHECK(oct_re(x * (y * z)) == oct_re(y * (z * x)));
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
    CHECK(oct_conj(x * y) == oct_conj(y) * oct_conj(x));
    CHECK(x * oct_conj(x) == oct_norm(x) * OQ::basis(0));
  }
}
