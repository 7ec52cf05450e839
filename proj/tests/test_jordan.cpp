#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace e8;
using namespace e8::test;

namespace {
const OQ e0 = OQ::basis(0);
JQ E(int i) { return JQ::E(i); }
}  // namespace

TEST_CASE("jordan product") {
  CHECK(jordan_mul(E(1), E(1)) == E(1));
  CHECK(jordan_mul(E(1), E(2)) == JQ());
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    OQ x = rand_oct(rng), y = rand_oct(rng);
    CHECK(jordan_mul(JQ::F(1, x), JQ::F(2, y)) == frac<Cq>(1, 2) * JQ::F(3, oct_conj(x * y)));
    CHECK(jordan_mul(JQ::F(1, x), JQ::F(1, y)) == oct_inner(x, y) * (E(2) + E(3)));
  }
}

TEST_CASE("inner product and trilinear form") {
  CHECK(jordan_inner(E(1), E(1)) == Cq(1));
  CHECK(jordan_inner(JQ::F(1, e0), JQ::F(1, e0)) == Cq(2));
  CHECK(jordan_tri(JQ::Id(), JQ::Id(), JQ::Id()) == Cq(3));
}

TEST_CASE("freudenthal cross product") {
  CHECK(jordan_cross(E(1), E(1)) == JQ());
  CHECK(jordan_cross(E(2), E(3)) == frac<Cq>(1, 2) * E(1));
  CHECK(jordan_cross(JQ::Id(), JQ::Id()) == JQ::Id());
}

TEST_CASE("determinant") {
  CHECK(jordan_det(JQ::Id()) == Cq(1));
  CHECK(jordan_det(E(1)) == Cq(0));
  JQ X = JQ::Id();
  for (int k = 1; k <= 3; ++k) X.x[k - 1] = e0;
  CHECK(jordan_det(X) == Cq(0));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    JQ Y = rand_jordan(rng);
    CHECK(jordan_tri(Y, Y, Y) == Cq(3) * jordan_det(Y));
    CHECK(jordan_mul(Y, jordan_cross(Y, Y)) == jordan_det(Y) * JQ::Id());
  }
}

TEST_CASE("sigma'_4 on the Jordan algebra") {
  CHECK(sigma4_map(E(2)) == E(2));
  CHECK(sigma4_map(JQ::F(1, OQ::basis(1))) == JQ::F(1, OQ::basis(1)));
  for (int i = 0; i < 27; ++i) {
    JQ B = JQ::basis(i);
    CHECK(sigma4_map(sigma4_map(B)) == sigma_map(B));
    CHECK(sigma4_map(sigma4_map(sigma4_map(sigma4_map(B)))) == B);
    CHECK(sigma4_inv_map(sigma4_map(B)) == B);
  }
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    JQ X = rand_jordan(rng), Y = rand_jordan(rng);
    CHECK(jordan_det(sigma4_map(X)) == jordan_det(X));
    CHECK(jordan_inner(sigma4_map(X), sigma4_map(Y)) == jordan_inner(X, Y));
    CHECK(sigma4_map(jordan_mul(X, Y)) == jordan_mul(sigma4_map(X), sigma4_map(Y)));
  }
}

TEST_CASE("eigenspace split of sigma'_4") {
  auto split = eigenspace_split_sigma4();
  CHECK(split.fixed.size() == 5);
  CHECK(split.moved.size() == 22);
  auto has = [](const std::vector<int>& v, int i) { return std::find(v.begin(), v.end(), i) != v.end(); };
  CHECK(has(split.fixed, 0));       // E1
  CHECK(has(split.fixed, 3 + 1));   // F1(e1)
  CHECK(has(split.moved, 11));      // F2(e0)
  CHECK(has(split.moved, 3 + 2));   // F1(e2)
  for (int i : split.fixed) CHECK(sigma4_map(JQ::basis(i)) == JQ::basis(i));
  // sigma'_4 - 1 is injective on the complement
  std::vector<std::vector<Cq>> imgs;
  for (int i : split.moved) imgs.push_back((sigma4_map(JQ::basis(i)) - JQ::basis(i)).coords());
  CHECK(rank_of(imgs, 27) == 22);
}
