#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"
#include "e8/subalgebras.hpp"

using namespace e8;
using namespace e8::test;

namespace {
const DimCheck& check_named(const std::string& id) {
  static const auto all = dimension_checks();
  for (const auto& d : all)
    if (d.id == id) return d;
  throw std::out_of_range(id);
}
}  // namespace

TEST_CASE("sixteen dimension statements are registered") { CHECK(dimension_checks().size() == 16); }

TEST_CASE("stabiliser of E1..E3 and F1(e0..e4) in f4 has dimension 3, and is closed") {
  auto cert = solve(check_named("lemma3.5").cs, true);
  CHECK(cert.dim == 3);
  CHECK(cert.closure_checked);
  CHECK(cert.closed);
}

TEST_CASE("sigma'_4-fixed part of e8 has dimension 60") { CHECK(solve(check_named("lemma7.1").cs).dim == 60); }

TEST_CASE("unconstrained ambients") {
  CHECK(solve(ConstraintSet{Ambient::e8, {}, false}).dim == 248);
  CHECK(solve(ConstraintSet{Ambient::f4, {}, false}).dim == 52);
}

TEST_CASE("so(6) generators") {
  auto g = so6_generators();
  CHECK(g.size() == 15);
  for (const auto& d : g) CHECK(f4_act(d, JQ::E(1)) == JQ());
  auto G23 = F4El<Cq>::G(2, 3), G45 = F4El<Cq>::G(4, 5);
  JQ X;
  std::mt19937_64 rng(17);
  X = rand_jordan(rng);
  CHECK(f4_act(G23, f4_act(G45, X)) == f4_act(G45, f4_act(G23, X)));
}

TEST_CASE("restriction to the span of F1(e2..e7)") {
  std::vector<std::vector<Cq>> V;
  for (int k = 2; k < 8; ++k) V.push_back(JQ::F(1, OQ::basis(k)).coords());
  auto sig = endo_from_fn<Cq>(27, [](const std::vector<Cq>& v) { return sigma_map(JQ::from_coords(v)).coords(); });
  CHECK(restrict_endo(sig, V) == LinearEndo<Cq>::identity(6));
  CHECK(restrict_endo(LinearEndo<Cq>::identity(27), V) == LinearEndo<Cq>::identity(6));
  auto g = restrict_endo(to_endo(F4El<Cq>::G(2, 3)), V);
  LinearEndo<Cq> want(6);
  want(0, 1) = Cq(1);
  want(1, 0) = Cq(-1);
  CHECK(g == want);
  auto s4 = endo_from_fn<Cq>(27, [](const std::vector<Cq>& v) { return sigma4_map(JQ::from_coords(v)).coords(); });
  CHECK_THROWS(restrict_endo(to_endo(F4El<Cq>::A(1, OQ::basis(2))), V));
  (void)s4;
}

TEST_CASE("kernel probe") {
  std::vector<std::vector<Cq>> V;
  for (int k = 2; k < 8; ++k) V.push_back(JQ::F(1, OQ::basis(k)).coords());
  auto endo = [](auto f) { return endo_from_fn<Cq>(27, [&](const std::vector<Cq>& v) { return f(JQ::from_coords(v)).coords(); }); };
  std::vector<LinearEndo<Cq>> maps = {LinearEndo<Cq>::identity(27), endo([](const JQ& X) { return sigma_map(X); }),
                                      endo([](const JQ& X) { return sigma4_map(X); })};
  CHECK(kernel_probe(maps, V) == std::vector<int>{0, 1});
  CHECK(kernel_probe(std::vector<LinearEndo<Cq>>{LinearEndo<Cq>::identity(27)}, V) == std::vector<int>{0});
  // sigma'_4 composed with -sigma'_4 is -sigma on e8
  for (int b = 0; b < 248; b += 7) {
    auto R = E8El<Cq>::basis(b);
    auto lhs = sigma4_on_e8(E8El<Cq>::from_coords(dense_scale(sigma4_on_e8(R).coords(), Cq(-1)))).coords();
    CHECK(dense_is_zero(dense_add(lhs, sigma_on_e8(R).coords())));
  }
}

TEST_CASE("certificates serialise deterministically") {
  auto c1 = certificate_json(solve(check_named("lemma3.8").cs));
  auto c2 = certificate_json(solve(check_named("lemma3.8").cs));
  CHECK(c1 == c2);
  CHECK(c1.find("\"dim\"") != std::string::npos);
}
