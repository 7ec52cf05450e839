#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

using namespace e8;
using namespace e8::test;

namespace {
using R8 = E8El<Cq>;
bool same(const R8& a, const R8& b) { return dense_is_zero(dense_sub(a.coords(), b.coords())); }
R8 br(const R8& a, const R8& b) { return e8_bracket_fast(a, b); }
R8 sc(const Cq& c, const R8& a) { return R8::from_coords(dense_scale(a.coords(), c)); }
}  // namespace

TEST_CASE("distinguished brackets") {
  CHECK(same(br(one_s<Cq>(), one_t<Cq>()), one_r<Cq>()));
  CHECK(same(br(one_r<Cq>(), one_t<Cq>()), sc(Cq(-2), one_t<Cq>())));
  std::mt19937_64 rng(12);
  auto R = R8::from_coords(rand_sparse(rng, 248, 0.2));
  CHECK(dense_is_zero(br(R, R).coords()));
}

TEST_CASE("structural bracket agrees with the tabulated one") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    auto a = R8::from_coords(rand_sparse(rng, 248, 0.1)), b = R8::from_coords(rand_sparse(rng, 248, 0.1));
    CHECK(same(e8_bracket(a, b), e8_bracket_fast(a, b)));
  }
}

TEST_CASE("Killing form") {
  CHECK(killing_e8(one_t<Cq>(), R8()) == Cq(0));
  CHECK(killing_e8(one_t<Cq>(), one_s<Cq>()) == Cq(60));
  CHECK(killing_e8(one_t<Cq>(), one_t<Cq>()) == Cq(0));
  // agrees with tr(ad x ad y) on sampled basis pairs
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> U(0, 247);
  for (int k = 0; k < 6; ++k) {
    int a = U(rng), b = k % 2 ? a : U(rng);
    auto x = R8::basis(a).coords(), y = R8::basis(b).coords();
    Cq tr(0);
    for (int i = 0; i < 248; ++i) tr += e8_bracket_coords<Cq>(x, e8_bracket_coords<Cq>(y, R8::basis(i).coords()))[i];
    CHECK(killing_e8_coords<Cq>(x, y) == tr);
  }
}

TEST_CASE("R x R and the Lemma 5.3 conditions") {
  for (int b = 0; b < 248; ++b) {
    CHECK(dense_is_zero(r_cross(one_t<Cq>(), R8::basis(b)).coords()));
    CHECK(dense_is_zero(r_cross(R8(), R8::basis(b)).coords()));
  }
  auto l = lemma53_conditions(one_t<Cq>());
  for (double v : l) CHECK(v == 0);
  auto ls = lemma53_conditions(one_s<Cq>());
  for (double v : ls) CHECK(v == 0);
  CHECK(r_cross_residual(one_s<Cq>()) == 0);
  auto lr = lemma53_conditions(one_r<Cq>());
  CHECK(lr[5] == 16);
  CHECK(r_cross_residual(one_r<Cq>()) > 0);
}

TEST_CASE("involutions and the compact form") {
  CHECK(same(lambda_omega(one_r<Cq>()), sc(Cq(-1), one_r<Cq>())));
  CHECK(same(tau(sc(Cq(0, 1), one_r<Cq>())), sc(Cq(0, -1), one_r<Cq>())));
  std::mt19937_64 rng(15);
  for (int k = 0; k < 20; ++k) {
    auto x = rand_sparse(rng, 248, 0.1), y = rand_sparse(rng, 248, 0.1);
    auto lhs = sigma4_on_e8(R8::from_coords(e8_bracket_coords<Cq>(x, y))).coords();
    auto rhs = e8_bracket_coords<Cq>(sigma4_on_e8(R8::from_coords(x)).coords(), sigma4_on_e8(R8::from_coords(y)).coords());
    CHECK(dense_is_zero(dense_sub(lhs, rhs)));
  }
  PQ P = rand_pvec(rng);
  Cq s = rq(rng);
  PQ Q = -pvec_map(lambda_map(P), [](const Cq& v) { return ST<Cq>::conj(v); });
  CHECK(compact_form_member(R8(E7El<Cq>(), P, Q, Cq(0, 1), s, -ST<Cq>::conj(s))));
  CHECK(!compact_form_member(one_t<Cq>()));
  CHECK(compact_form_member(R8()));
}

TEST_CASE("Jacobi identity on random and basis triples") {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 50; ++k) {
    auto x = rand_sparse(rng, 248, 0.1), y = rand_sparse(rng, 248, 0.1), z = rand_sparse(rng, 248, 0.1);
    auto j = dense_add(dense_add(e8_bracket_coords<Cq>(e8_bracket_coords<Cq>(x, y), z),
                                 e8_bracket_coords<Cq>(e8_bracket_coords<Cq>(y, z), x)),
                       e8_bracket_coords<Cq>(e8_bracket_coords<Cq>(z, x), y));
    CHECK(dense_is_zero(j));
  }
}
