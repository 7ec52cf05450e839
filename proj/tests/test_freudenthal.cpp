#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace e8;
using namespace e8::test;

namespace {
JQ E(int i) { return JQ::E(i); }
const JQ Z;
E7El<Cq> zero7;
bool is_zero7(const E7El<Cq>& F) { return dense_is_zero(F.coords()); }
}  // namespace

TEST_CASE("vee pairing") {
  auto v = vee(E(1), E(1));
  CHECK(e6_act(v, E(2)) == frac<Cq>(-1, 3) * E(2));
  CHECK(e6_act(v, E(1)) == frac<Cq>(2, 3) * E(1));
  CHECK(dense_is_zero(vee(Z, Z).coords()));
}

TEST_CASE("cross product of Freudenthal vectors") {
  CHECK(is_zero7(fcross(PQ(Z, Z, 1, 0), PQ(Z, Z, 1, 0))));
  std::mt19937_64 rng(1);
  PQ Q = rand_pvec(rng);
  CHECK(is_zero7(fcross(PQ(), Q)));
  CHECK(is_zero7(fcross(PQ(E(1), Z, 0, 0), PQ(E(1), Z, 0, 0))));
  for (int k = 0; k < 20; ++k) {
    PQ P = rand_pvec(rng), R = rand_pvec(rng);
    CHECK(fcross(P, R) == fcross(R, P));
  }
}

TEST_CASE("skew form") {
  CHECK(skew(PQ(Z, Z, 1, 0), PQ(Z, Z, 0, 1)) == Cq(1));
  CHECK(skew(PQ(E(1), Z, 0, 0), PQ(Z, E(1), 0, 0)) == Cq(1));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    PQ P = rand_pvec(rng), Q = rand_pvec(rng);
    CHECK(skew(P, P) == Cq(0));
    CHECK(skew(P, Q) == -skew(Q, P));
  }
}

TEST_CASE("kappa, mu and lambda") {
  CHECK(mu_map(PQ(Z, E(1), 0, 0)) == PQ(Z, Z, 1, 0));
  CHECK(mu_map(PQ(Z, Z, 0, 1)) == PQ(E(1), Z, 0, 0));
  CHECK(kappa_map(PQ(E(1), Z, 0, 0)) == PQ(-E(1), Z, 0, 0));
  CHECK(kappa1(E(1)) == E(1));
  for (int i = 0; i < 56; ++i) {
    PQ B = PQ::basis(i);
    CHECK(kappa_map(kappa_map(kappa_map(B))) == kappa_map(B));
    CHECK(mu_map(mu_map(mu_map(B))) == mu_map(B));
    CHECK(lambda_inv_map(lambda_map(B)) == B);
    CHECK(kappa_map(sigma4_on_P(B)) == sigma4_on_P(kappa_map(B)));
    CHECK(mu_map(sigma4_on_P(B)) == sigma4_on_P(mu_map(B)));
  }
}

TEST_CASE("mu norm") {
  const PQ Em1(Z, -E(1), 0, 1);
  CHECK(mu_norm(Em1) == Cq(-1));
  CHECK(mu_norm(Cq(0, 1) * Em1) == Cq(1));
  CHECK(mu_norm(PQ()) == Cq(0));
  CHECK(mu_norm(PQ(E(2) - E(3), Z, 0, 0)) == Cq(1));
}

TEST_CASE("sigma'_4 on the Freudenthal space") {
  CHECK(sigma4_on_P(PQ(Z, Z, 1, 0)) == PQ(Z, Z, 1, 0));
  auto F2 = JQ::F(2, OQ::basis(0));
  CHECK(sigma4_on_P(sigma4_on_P(PQ(F2, Z, 0, 0))) == PQ(-1 * F2, Z, 0, 0));
  for (int i = 0; i < 56; ++i) CHECK(sigma4_on_P(sigma4_on_P(PQ::basis(i))) == sigma_on_P(PQ::basis(i)));
}

TEST_CASE("e7 action preserves the skew form and is compatible with the cross product") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    auto F = E7El<Cq>::from_coords(rand_sparse(rng, 133, 0.1));
    PQ P = rand_pvec(rng), Q = rand_pvec(rng);
    CHECK(skew(e7_act(F, P), Q) + skew(P, e7_act(F, Q)) == Cq(0));
    auto lhs = e7_bracket(F, fcross(P, Q));
    auto rhs = e7_lin(fcross(e7_act(F, P), Q), Cq(1), fcross(P, e7_act(F, Q)), Cq(1));
    CHECK(lhs == rhs);
  }
}
