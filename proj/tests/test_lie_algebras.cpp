#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unsupported/Eigen/MatrixFunctions>

#include "common.hpp"
#include "e8/orbits.hpp"

using namespace e8;
using namespace e8::test;

namespace {
JQ E(int i) { return JQ::E(i); }
const JQ Z;
}  // namespace

TEST_CASE("f4 derivations") {
  auto G56 = F4El<Cq>::G(5, 6);
  CHECK(f4_act(G56, JQ::F(1, OQ::basis(5))) == -1 * JQ::F(1, OQ::basis(6)));
  JQ AE2 = f4_act(F4El<Cq>::A(1, OQ::basis(3)), E(2));
  for (int i = 0; i < 3; ++i) CHECK(AE2.xi[i] == Cq(0));
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    auto d = F4El<Cq>::from_coords(rand_sparse(rng, 52, 0.3));
    JQ X = rand_jordan(rng), Y = rand_jordan(rng);
    CHECK(f4_act(d, JQ::Id()) == JQ());
    CHECK(jordan_inner(f4_act(d, X), Y) + jordan_inner(X, f4_act(d, Y)) == Cq(0));
    CHECK(f4_act(d, jordan_mul(X, Y)) == jordan_mul(f4_act(d, X), Y) + jordan_mul(X, f4_act(d, Y)));
  }
}

TEST_CASE("e6 action and transpose") {
  JQ T = E(1) - E(2);
  CHECK(e6_act(e6_from_T(T), JQ::Id()) == T);
  CHECK(dense_is_zero(dense_sub(e6_transpose(e6_from_T(T)).coords(), e6_from_T(T).coords())));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    auto p = E6El<Cq>::from_coords(rand_sparse(rng, 78, 0.2));
    JQ X = rand_jordan(rng), Y = rand_jordan(rng);
    CHECK(jordan_inner(e6_act(p, X), Y) == jordan_inner(X, e6_act(e6_transpose(p), Y)));
    CHECK(jordan_tri(e6_act(p, X), X, X) == Cq(0));
  }
}

TEST_CASE("e7 action on Freudenthal vectors") {
  JQ A = E(1) + JQ::F(2, OQ::basis(3));
  CHECK(e7_act(E7El<Cq>(E6El<Cq>(), A, Z, 0), PQ(Z, Z, 0, 1)) == PQ(A, Z, 0, 0));
  Cq nu(mpq_class(2), mpq_class(-1));
  CHECK(e7_act(E7El<Cq>(E6El<Cq>(), Z, Z, nu), PQ(Z, Z, 1, 0)) == PQ(Z, Z, nu, 0));
  auto phi = e6_from_delta(F4El<Cq>::G(5, 6));
  for (int k = 0; k < 8; ++k) {
    JQ F = JQ::F(1, OQ::basis(k));
    CHECK(e7_act(E7El<Cq>(phi, Z, Z, 0), PQ(F, Z, 0, 0)) == PQ(e6_act(phi, F), Z, 0, 0));
  }
}

TEST_CASE("e7 bracket is the commutator of actions; Jacobi; Killing form") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 100; ++k) {
    auto a = rand_sparse(rng, 133, 0.05), b = rand_sparse(rng, 133, 0.05), c = rand_sparse(rng, 133, 0.05);
    auto ab = e7_bracket_coords<Cq>(a, b), bc = e7_bracket_coords<Cq>(b, c), ca = e7_bracket_coords<Cq>(c, a);
    auto j = dense_add(dense_add(e7_bracket_coords<Cq>(ab, c), e7_bracket_coords<Cq>(bc, a)), e7_bracket_coords<Cq>(ca, b));
    CHECK(dense_is_zero(j));
    CHECK(killing_e7_coords<Cq>(a, b) == killing_e7_coords<Cq>(b, a));
    CHECK(killing_e7_coords<Cq>(ab, c) == killing_e7_coords<Cq>(a, bc));
  }
  for (int k = 0; k < 5; ++k) {
    auto F1 = E7El<Cq>::from_coords(rand_sparse(rng, 133, 0.1)), F2 = E7El<Cq>::from_coords(rand_sparse(rng, 133, 0.1));
    PQ P = rand_pvec(rng);
    CHECK(e7_act(e7_bracket(F1, F2), P) == e7_act(F1, e7_act(F2, P)) - e7_act(F2, e7_act(F1, P)));
    CHECK(dense_is_zero(e7_bracket(F1, F1).coords()));
    CHECK(killing_e7(F1, E7El<Cq>()) == Cq(0));
  }
}

TEST_CASE("matrix exponential") {
  LinearEndo<cd> Z0(27);
  CHECK(exp_endo(Z0) == LinearEndo<cd>::identity(27));
  // exp(s G56) rotates F1(e5) towards -F1(e6)
  auto G = to_endo(F4El<cd>::G(5, 6));
  const double s = 0.3;
  LinearEndo<cd> sG = G;
  for (auto& v : sG.a) v *= s;
  auto M = exp_endo(sG);
  auto v = M.apply(Jordan<cd>::F(1, Octonion<cd>::basis(5)).coords());
  auto want = (std::cos(s) * Jordan<cd>::F(1, Octonion<cd>::basis(5)) - std::sin(s) * Jordan<cd>::F(1, Octonion<cd>::basis(6))).coords();
  CHECK(dense_max_abs(dense_sub(v, want)) < 1e-12);
  CHECK((to_cmat(M) - expm(to_cmat(sG))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sigma'_4 as a matrix has order four") {
  auto M = endo_from_fn<Cq>(27, [](const std::vector<Cq>& v) { return sigma4_map(JQ::from_coords(v)).coords(); });
  auto M2 = compose(M, M);
  CHECK(compose(M2, M2) == LinearEndo<Cq>::identity(27));
  CHECK(!(M2 == LinearEndo<Cq>::identity(27)));
}
