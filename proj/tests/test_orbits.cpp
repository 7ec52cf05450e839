#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "e8/orbits.hpp"

using namespace e8;

namespace {
using J = Jordan<cd>;
using PV = PVec<cd>;
const cd I(0, 1);
OctD e(int i) { return OctD::basis(i); }
double dist(const CVecX& a, const CVecX& b) { return (a - b).cwiseAbs().maxCoeff(); }
double dist(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("rotations g_ij") {
  CHECK(dist(g_rot(2, 6, 0.0).matrix, CMat::Identity(27, 27)) < 1e-15);
  CHECK(dist(g_rot(5, 7, M_PI).matrix * to_vec(J::F(1, -1.0 * e(5))), to_vec(J::F(1, e(5)))) < 1e-12);
  CHECK(dist(g_rot(4, 5, M_PI / 2).matrix * to_vec(J::F(1, e(5))), to_vec(J::F(1, e(4)))) < 1e-12);
  CHECK(dist(g_rot(5, 6, 0.3).matrix, expm(0.3 * gen_g_rot(5, 6))) < 1e-12);
  CHECK_THROWS_AS(g_rot(3, 3, 0.1), std::invalid_argument);
}

TEST_CASE("alpha(a) on the Jordan algebra") {
  OctD a = 0.3 * e(0) + cd(0.2, 0.1) * e(3);
  CHECK(dist(alpha_A1(a).matrix * to_vec(J::E(1)), to_vec(J::E(1))) < 1e-14);
  CHECK(dist(alpha_A1(a).matrix, expm(gen_alpha_A1(a))) < 1e-12);
}

TEST_CASE("beta1, alpha23, phi(theta)") {
  CHECK(dist(alpha23(0.0).matrix, CMat::Identity(27, 27)) < 1e-15);
  CHECK(dist(alpha23(I * (M_PI / 2)).matrix * to_vec(J::E(2) - J::E(3)), to_vec(I * (J::E(2) + J::E(3)))) < 1e-12);
  OctD t = cd(0.4, 0.2) * e(0) + cd(-0.3, 0.1) * e(1);
  J X;
  std::mt19937_64 rng(21);
  for (int i = 0; i < 27; ++i) X.coord(i) = random_cd(rng);
  J Y = jordan_of(beta1(t).matrix * to_vec(X));
  CHECK(std::abs(Y.xi[0] - X.xi[0]) < 1e-12);
  OctD th = std::cos(0.7) * e(0) + std::sin(0.7) * e(1);
  J Z = jordan_of(phi_theta(th).matrix * to_vec(X));
  CHECK(std::abs(jordan_det(Z) - jordan_det(X)) < 1e-10);
  CHECK_THROWS(phi_theta(2.0 * e(0)));
  CHECK_THROWS(beta1(e(3)));
}

TEST_CASE("flows on the Freudenthal space") {
  CHECK(dist(psi_sl2(Eigen::Matrix2cd::Identity()).matrix, CMat::Identity(56, 56)) < 1e-15);
  cd nu(0.3, -0.2);
  PV P;
  P.xi = 1.0;
  PV Q = pvec_of(beta_nu(nu).matrix * to_vec(P));
  CHECK(std::abs(Q.xi - std::exp(-2.0 * nu)) < 1e-12);
  CHECK(dist(beta_nu(nu).matrix, expm(gen_beta_nu(nu))) < 1e-12);
  for (int i = 1; i <= 3; ++i) CHECK(dist(alpha_i(i, nu).matrix, expm(gen_alpha_i(i, nu))) < 1e-12);
  Eigen::Matrix2cd A;
  A << 2.0, 1.0, 1.0, 1.0;
  CHECK_THROWS(psi_sl2(2.0 * A));
  CHECK(dist(CMat(psi_sl2(A).matrix * psi_sl2(A.inverse()).matrix), CMat(CMat::Identity(56, 56))) < 1e-12);
}

TEST_CASE("exp Theta applied to 1_-") {
  CHECK(dist(to_vec(exp_theta_closed_form(PV{}, 0.0, 0.0)), to_vec(one_t<cd>())) < 1e-15);
  PV P1;
  P1.X.xi[1] = cd(0.3, 0.1);
  P1.eta = 0.5;
  auto R = exp_theta_closed_form(P1, 0.0, 0.0);
  CHECK(dist(to_vec(R.Q), to_vec(-1.0 * P1)) < 1e-12);
  for (cd r1 : {cd(0.0), cd(1e-9), cd(0.3, 0.2), cd(-1.1, 0.4)}) {
    cd s1(0.2, -0.4);
    E8El<cd> X(E7El<cd>{}, P1, PV{}, r1, s1, cd(0));
    CVecX want = expm(to_cmat(ad_matrix(X))) * to_vec(one_t<cd>());
    CHECK(dist(to_vec(exp_theta_closed_form(P1, r1, s1)), want) < 1e-10);
  }
}

TEST_CASE("sphere reductions in the Jordan algebra") {
  auto w0 = reduce_sphere_F1(J::F(1, e(5)), 2);
  CHECK(w0.steps.empty());
  auto w1 = reduce_sphere_F1(J::F(1, -1.0 * e(5)), 2);
  REQUIRE(w1.steps.size() == 1);
  CHECK(w1.steps[0].kind == "g_rot");
  std::mt19937_64 rng(22);
  for (int k = 2; k <= 5; ++k)
    for (int n = 0; n < 25; ++n) {
      auto X = random_sphere_F1(k, rng);
      auto w = reduce_sphere_F1(X, k);
      CHECK(w.residual < 1e-9);
      CHECK(dist(apply_steps(w.steps, to_vec(X)), to_vec(sphere_F1_basepoint(k))) < 1e-9);
    }
  CHECK_THROWS_AS(reduce_sphere_F1(J::F(1, e(0)), 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_sphere_F1(J::F(1, 2.0 * e(5)), 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_sphere_F1(J::F(1, e(5)), 6), std::invalid_argument);
}

TEST_CASE("minus-sphere reductions") {
  auto b5 = sphere_minus_basepoint(MinusVariant::S5);
  CHECK(reduce_sphere_minus(b5, MinusVariant::S5).steps.empty());
  auto w = reduce_sphere_minus(to_vec(PV(I * (J::E(2) + J::E(3)), J{}, 0, 0)), MinusVariant::S4);
  REQUIRE(w.steps.size() == 1);
  CHECK(w.steps[0].kind == "alpha23");
  CHECK(std::abs(w.steps[0].params[0] + M_PI / 4) < 1e-12);
  std::mt19937_64 rng(23);
  for (auto v : {MinusVariant::S2, MinusVariant::S3, MinusVariant::S4, MinusVariant::S5})
    for (int n = 0; n < 25; ++n) {
      auto x = random_sphere_minus(v, rng);
      auto wv = reduce_sphere_minus(x, v);
      CHECK_MESSAGE(wv.residual < 1e-9, variant_name(v));
      CHECK(dist(apply_steps(wv.steps, x), sphere_minus_basepoint(v)) < 1e-9);
    }
  CHECK_THROWS_AS(reduce_sphere_minus(2.0 * b5, MinusVariant::S5), std::invalid_argument);
}

TEST_CASE("W-space reductions") {
  CHECK(reduce_W(one_t<cd>()).steps.empty());
  auto w = reduce_W(one_s<cd>());
  REQUIRE(!w.steps.empty());
  CHECK(w.steps[0].kind == "lambda'");
  CHECK(w.residual < 1e-9);
  std::mt19937_64 rng(24);
  for (int n = 0; n < 3; ++n) {
    auto R = random_W(rng);
    CHECK(w_membership_residual(R) < 1e-7);
    auto wr = reduce_W(R);
    CHECK(wr.residual < 1e-8);
  }
  CHECK(w_membership_residual(one_r<cd>()) > 1e-3);
}

TEST_CASE("witness serialisation is deterministic") {
  std::mt19937_64 r1(25), r2(25);
  auto X1 = random_sphere_F1(4, r1), X2 = random_sphere_F1(4, r2);
  auto j1 = witness_json(reduce_sphere_F1(X1, 4)), j2 = witness_json(reduce_sphere_F1(X2, 4));
  CHECK(j1 == j2);
  auto j = nlohmann::json::parse(j1);
  CHECK(j.contains("steps"));
  CHECK(j.contains("residual"));
}
