#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"
#include "e8/spin_verify.hpp"

using namespace e8;
using namespace e8::test;

namespace {
bool structure_is(int i, int j, int k, int l, int m, int n, int coef) {
  auto s = so10_structure(i, j, k, l);
  return s.size() == 1 && s[0].first == std::make_pair(m, n) && s[0].second == coef;
}
}  // namespace

TEST_CASE("so(10) structure constants") {
  CHECK(structure_is(0, 1, 0, 2, 1, 2, -1));
  CHECK(structure_is(0, 4, 4, 5, 0, 5, 1));
  CHECK(structure_is(5, 7, 6, 7, 5, 6, -1));
  CHECK(so10_structure(0, 1, 2, 3).empty());
}

TEST_CASE("printed basis elements") {
  const auto& B = build_so10();
  const Cq i(0, 1);
  auto R45 = B.at(4, 5);
  CHECK(R45.r == i * frac<Cq>(-1, 2));
  CHECK(R45.Phi.nu == i * frac<Cq>(1, 2));
  CHECK(R45.Phi.phi.T == i * jordan_mul(JQ::E(1), JQ::E(1)) - i * frac<Cq>(1, 3) * JQ::Id());
  CHECK(dense_is_zero(R45.P.coords()));
  auto R89 = B.at(8, 9);
  CHECK(dense_is_zero(R89.P.coords()));
  CHECK(R89.r == Cq(0));
}

TEST_CASE("worked commutators of the printed basis") {
  const auto& B = build_so10();
  auto br = [](const E8El<Cq>& a, const E8El<Cq>& b) { return e8_bracket_fast(a, b).coords(); };
  CHECK(dense_is_zero(dense_add(br(B.at(0, 1), B.at(0, 2)), B.at(1, 2).coords())));
  CHECK(dense_is_zero(dense_sub(br(B.at(0, 4), B.at(4, 5)), B.at(0, 5).coords())));
  CHECK(dense_is_zero(dense_add(br(B.at(5, 7), B.at(6, 7)), B.at(5, 6).coords())));
  CHECK(dense_is_zero(br(B.at(0, 1), B.at(2, 3))));
}

TEST_CASE("amended basis satisfies every relation") {
  auto rep = so10_check(build_so10_corrected());
  CHECK(rep.checked == 990);
  CHECK(rep.failures.empty());
  CHECK(so10_membership_failures(build_so10_corrected()).empty());
}

TEST_CASE("triality") {
  auto t = remark_triple();
  CHECK(!triality_failure(t));
  CHECK(!triple_sigma4_failure(t));
  for (const auto* m : {&t.s1, &t.s2, &t.s3}) {
    CHECK(mat8_det(*m) == 1);
    CHECK(mat8_orthogonal(*m));
  }
  // (e0, e0): s1 e0 . s2 e0 = conj(s3 e0)
  auto col = [](const Mat8& m, int j) {
    OQ o;
    for (int i = 0; i < 8; ++i) o.c[i] = Cq(m[i][j]);
    return o;
  };
  CHECK(col(t.s1, 0) * col(t.s2, 0) == oct_conj(col(t.s3, 0)));
  CHECK(col(t.s1, 2) == -1 * OQ::basis(2));
  // a wrong triple is rejected
  auto bad = t;
  std::swap(bad.s2, bad.s3);
  CHECK(triality_failure(bad).has_value());
}

TEST_CASE("delta1") {
  auto d = delta1();
  CHECK(d[6][0] == 1);
  CHECK(d[2][2] == 1);
  auto d2 = mat8_mul(d, d);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(d2[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("kernel and centre elements") {
  auto k = spin6_kernel_probe();
  CHECK(k.candidates.size() == 5);
  CHECK(k.kernel == std::vector<std::string>{"1", "sigma"});
  auto z = z4_pair_compositions();
  CHECK(z.size() == 4);
  for (const auto& [name, ok] : z) CHECK_MESSAGE(ok, name);
}
