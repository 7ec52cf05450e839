#include "e8/spin_verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "e8/subalgebras.hpp"

namespace e8 {

namespace {

using C = Cq;
using J = Jordan<Cq>;
using P = PVec<Cq>;
using O = Octonion<Cq>;

const C I(0, 1);
C q(long n, long d = 1) { return C(mpq_class(n, d)); }
C qi(long n, long d = 1) { return C(0, mpq_class(n, d)); }

J E(int i) { return J::E(i); }
J F1(int k) { return J::F(1, O::basis(k)); }

E7El<C> phi_T(const J& T) { return E7El<C>(e6_from_T(T), J(), J(), C(0)); }
E7El<C> phi_e6(const E6El<C>& p, const C& nu = C(0)) { return E7El<C>(p, J(), J(), nu); }
E7El<C> phi_AB(const J& A, const J& B) { return E7El<C>(E6El<C>(), A, B, C(0)); }
E7El<C> phi_f4(const F4El<C>& d) { return E7El<C>(e6_from_delta(d), J(), J(), C(0)); }

E6El<C> scaled(const E6El<C>& p, const C& c) {
  auto v = p.coords();
  for (auto& x : v) x *= c;
  return E6El<C>::from_coords(v);
}

E8El<C> el(const E7El<C>& f, const P& p = P(), const P& qv = P(), const C& r = C(0), const C& s = C(0),
           const C& t = C(0)) {
  return E8El<C>(f, p, qv, r, s, t);
}
P pv(const J& X, const J& Y, const C& xi, const C& eta) { return P(X, Y, xi, eta); }

// f4 bracket through the commutator of the actions on the Jordan algebra.
F4El<C> f4_bracket(const F4El<C>& a, const F4El<C>& b) {
  return f4_from_columns<C>([&](int c) {
    J e = J::basis(c);
    return f4_act(a, f4_act(b, e)) - f4_act(b, f4_act(a, e));
  });
}

std::string describe(const std::vector<std::pair<std::pair<int, int>, int>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mn, c] : terms) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (std::abs(c) != 1) os << std::abs(c) << "*";
    os << "R" << mn.first << mn.second;
    first = false;
  }
  return os.str();
}

std::string coords_str(const std::vector<C>& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << ", ";
    os << i << ": " << to_string(v[i]);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

const So10Basis& build_so10() {
  static const So10Basis B = [] {
    So10Basis b;
    const J d23m = E(2) - E(3), d23p = E(2) + E(3);
    const J E1 = E(1);
    const E6El<C> v11 = vee(E1, E1);
    const J Z;
    auto& R = b.R;
    R[0][1] = el(phi_T(-I * d23m));
    R[0][2] = el(phi_AB(qi(-1, 2) * d23m, qi(-1, 2) * d23m));
    R[1][2] = el(phi_AB(q(1, 2) * d23p, q(-1, 2) * d23p));
    R[0][3] = el(phi_AB(q(-1, 2) * d23m, q(1, 2) * d23m));
    R[1][3] = el(phi_AB(qi(-1, 2) * d23p, qi(-1, 2) * d23p));
    R[2][3] = el(phi_e6(scaled(v11, -I), I));
    R[0][4] = el(E7El<C>(), pv(-d23m, Z, 0, 0), pv(Z, -d23m, 0, 0));
    R[1][4] = el(E7El<C>(), pv(-I * d23p, Z, 0, 0), pv(Z, I * d23p, 0, 0));
    R[2][4] = el(E7El<C>(), pv(Z, I * E1, 0, -I), pv(I * E1, Z, -I, 0));
    R[3][4] = el(E7El<C>(), pv(Z, E1, 0, 1), pv(-E1, Z, -1, 0));
    R[0][5] = el(E7El<C>(), pv(-I * d23m, Z, 0, 0), pv(Z, I * d23m, 0, 0));
    R[1][5] = el(E7El<C>(), pv(d23p, Z, 0, 0), pv(Z, d23p, 0, 0));
    R[2][5] = el(E7El<C>(), pv(Z, -E1, 0, 1), pv(E1, Z, -1, 0));
    R[3][5] = el(E7El<C>(), pv(Z, I * E1, 0, I), pv(I * E1, Z, I, 0));
    R[4][5] = el(phi_e6(scaled(v11, I), qi(1, 2)), P(), P(), qi(-1, 2));
    R[0][6] = el(E7El<C>(), pv(Z, -d23m, 0, 0), pv(d23m, Z, 0, 0));
    R[1][6] = el(E7El<C>(), pv(Z, I * d23p, 0, 0), pv(I * d23p, Z, 0, 0));
    R[2][6] = el(E7El<C>(), pv(I * E1, Z, -I, 0), pv(Z, -I * E1, 0, I));
    R[3][6] = el(E7El<C>(), pv(-E1, Z, -1, 0), pv(Z, -E1, 0, -1));
    R[4][6] = el(phi_AB(q(1, 2) * E1, q(-1, 2) * E1), P(), P(), 0, q(-1, 2), q(1, 2));
    R[5][6] = el(phi_AB(qi(-1, 2) * E1, qi(-1, 2) * E1), P(), P(), 0, qi(-1, 2), qi(-1, 2));
    R[0][7] = el(E7El<C>(), pv(Z, -I * d23m, 0, 0), pv(-I * d23m, Z, 0, 0));
    R[1][7] = el(E7El<C>(), pv(Z, -d23p, 0, 0), pv(d23p, Z, 0, 0));
    R[2][7] = el(E7El<C>(), pv(-E1, Z, 1, 0), pv(Z, -E1, 0, 1));
    R[3][7] = el(E7El<C>(), pv(-I * E1, Z, -I, 0), pv(Z, I * E1, 0, I));
    R[4][7] = el(phi_AB(qi(1, 2) * E1, qi(1, 2) * E1), P(), P(), 0, qi(-1, 2), qi(-1, 2));
    R[5][7] = el(phi_AB(q(1, 2) * E1, q(-1, 2) * E1), P(), P(), 0, q(1, 2), q(-1, 2));
    R[6][7] = el(phi_e6(scaled(v11, -I), qi(-1, 2)), P(), P(), qi(-1, 2));
    for (int k = 0; k <= 1; ++k) {
      const int n = 8 + k;
      const J F = F1(k);
      const O a = O::basis(k);
      // R08 = Phi(A1~(i)), R09 = Phi(i A1~(e1))
      R[0][n] = el(phi_f4(F4El<C>::A(1, I * a)));
      R[1][n] = el(phi_T(-F));
      R[2][n] = el(phi_AB(q(-1, 2) * F, q(-1, 2) * F));
      R[3][n] = el(phi_AB(qi(1, 2) * F, qi(-1, 2) * F));
      R[4][n] = el(E7El<C>(), pv(I * F, Z, 0, 0), pv(Z, I * F, 0, 0));
      R[5][n] = el(E7El<C>(), pv(-F, Z, 0, 0), pv(Z, F, 0, 0));
      if (k == 0) {
        R[6][n] = el(E7El<C>(), pv(Z, I * F, 0, 0), pv(-I * F, Z, 0, 0));
      } else {
        R[6][n] = el(E7El<C>(), pv(Z, -I * F, 0, 0), pv(I * F, Z, 0, 0));
      }
      R[7][n] = el(E7El<C>(), pv(Z, -F, 0, 0), pv(-F, Z, 0, 0));
    }
    {
      auto br = f4_bracket(F4El<C>::A(1, O::basis(0)), F4El<C>::A(1, O::basis(1)));
      auto c = br.coords();
      for (auto& x : c) x = -x;
      R[8][9] = el(phi_f4(F4El<C>::from_coords(c)));
    }
    return b;
  }();
  return B;
}

const std::vector<So10Correction>& so10_corrections() {
  static const std::vector<So10Correction> list = [] {
    std::vector<So10Correction> v;
    for (int n = 8; n <= 9; ++n)
      for (int k = 1; k <= 7; ++k)
        v.push_back({k, n, I, "printed element lies outside the compact form; i times it lies inside"});
    v.push_back({0, 8, qi(1, 2), "fixes [R01,R08] = -R18 and compactness"});
    v.push_back({0, 9, qi(1, 2), "fixes [R01,R09] = -R19 and compactness"});
    v.push_back({8, 9, q(1, 4), "fixes [R08,R09] = -R89 after the R08, R09 rescaling"});
    v.push_back({6, 9, q(-1), "sign: pattern of R68 and [R06,R09] = -R69"});
    return v;
  }();
  return list;
}

const So10Basis& build_so10_corrected() {
  static const So10Basis B = [] {
    So10Basis b = build_so10();
    for (const auto& c : so10_corrections()) {
      auto v = b.R[c.i][c.j].coords();
      for (auto& x : v) x *= c.factor;
      b.R[c.i][c.j] = E8El<C>::from_coords(v);
    }
    return b;
  }();
  return B;
}

std::vector<std::pair<std::pair<int, int>, int>> so10_structure(int i, int j, int k, int l) {
  // [G_ij, G_kl] = d_jk G_il - d_ik G_jl - d_jl G_ik + d_il G_jk, with G_ba = -G_ab.
  std::vector<std::pair<std::pair<int, int>, int>> out;
  auto add = [&](int a, int b, int c) {
    if (a == b) return;
    if (a > b) { std::swap(a, b); c = -c; }
    for (auto& t : out)
      if (t.first == std::make_pair(a, b)) { t.second += c; return; }
    out.push_back({{a, b}, c});
  };
  if (j == k) add(i, l, 1);
  if (i == k) add(j, l, -1);
  if (j == l) add(i, k, -1);
  if (i == l) add(j, k, 1);
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

So10Report so10_check(const So10Basis& B) {
  So10Report rep;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) idx.emplace_back(i, j);
  std::vector<std::vector<C>> co(45);
  for (int a = 0; a < 45; ++a) co[a] = B.at(idx[a].first, idx[a].second).coords();
  for (int a = 0; a < 45; ++a)
    for (int b = a + 1; b < 45; ++b) {
      auto [i, j] = idx[a];
      auto [k, l] = idx[b];
      ++rep.checked;
      auto actual = e8_bracket_coords<C>(co[a], co[b]);
      auto terms = so10_structure(i, j, k, l);
      std::vector<C> expect(248, C(0));
      for (const auto& [mn, c] : terms) {
        const auto& r = co[std::find(idx.begin(), idx.end(), mn) - idx.begin()];
        for (int n = 0; n < 248; ++n) expect[n] += C(c) * r[n];
      }
      if (dense_is_zero(dense_sub(actual, expect))) {
        ++rep.passed;
        continue;
      }
      So10Failure f{i, j, k, l, describe(terms), coords_str(actual), ""};
      // Nearest single-term correction: actual = c R_mn for some basis element.
      for (int m = 0; m < 45 && f.suggestion.empty(); ++m) {
        const auto& r = co[m];
        int piv = -1;
        for (int n = 0; n < 248; ++n)
          if (!r[n].is_zero()) { piv = n; break; }
        if (piv < 0 || actual[piv].is_zero()) continue;
        C c = actual[piv] / r[piv];
        if (dense_is_zero(dense_sub(actual, dense_scale(r, c))))
          f.suggestion = "actual = (" + to_string(c) + ")*R" + std::to_string(idx[m].first) + std::to_string(idx[m].second);
      }
      if (f.suggestion.empty() && dense_is_zero(actual)) f.suggestion = "actual = 0";
      rep.failures.push_back(std::move(f));
    }
  return rep;
}

std::vector<E8El<Cq>> so6_e8_generators() {
  std::vector<E8El<Cq>> out;
  for (int i = 2; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) out.push_back(el(phi_f4(F4El<C>::G(i, j))));
  return out;
}

std::vector<std::string> so10_membership_failures(const So10Basis& B) {
  std::vector<std::string> out;
  auto gens = so6_e8_generators();
  std::vector<std::vector<C>> gc;
  for (const auto& g : gens) gc.push_back(g.coords());
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto& R = B.at(i, j);
      std::string name = "R" + std::to_string(i) + std::to_string(j);
      if (!(sigma4_on_e8(R) == R)) out.push_back(name + ": not fixed by sigma'_4");
      auto rc = R.coords();
      for (size_t g = 0; g < gc.size(); ++g)
        if (!dense_is_zero(e8_bracket_coords<C>(rc, gc[g]))) {
          out.push_back(name + ": does not commute with so(6) generator " + std::to_string(g));
          break;
        }
      if (!compact_form_member(R)) out.push_back(name + ": not in the compact form");
    }
  return out;
}

namespace {
Mat8 zero8() {
  Mat8 m;
  for (auto& r : m)
    for (auto& v : r) v = 0;
  return m;
}
}  // namespace

TrialityTriple remark_triple() {
  TrialityTriple t{zero8(), zero8(), zero8()};
  for (int i = 0; i < 8; ++i) t.s1[i][i] = i < 2 ? 1 : -1;
  // J = [[0, 1], [-1, 0]]
  for (int b = 0; b < 4; ++b) {
    int s2 = -1, s3 = b == 0 ? 1 : -1;
    t.s2[2 * b][2 * b + 1] = s2;
    t.s2[2 * b + 1][2 * b] = -s2;
    t.s3[2 * b][2 * b + 1] = s3;
    t.s3[2 * b + 1][2 * b] = -s3;
  }
  return t;
}

std::optional<std::pair<int, int>> triality_failure(const TrialityTriple& t) {
  SMat8<mpq_class> s1, s2, s3;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      s1[i][j] = t.s1[i][j];
      s2[i][j] = t.s2[i][j];
      s3[i][j] = t.s3[i][j];
    }
  using Oq = Octonion<mpq_class>;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Oq x = Oq::basis(a), y = Oq::basis(b);
      Oq lhs = mat8_apply(s1, x) * mat8_apply(s2, y);
      Oq rhs = oct_conj(mat8_apply(s3, oct_conj(x * y)));
      if (lhs != rhs) return std::make_pair(a, b);
    }
  return std::nullopt;
}

std::optional<int> triple_sigma4_failure(const TrialityTriple& t) {
  SMat8<mpq_class> s[3];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      s[0][i][j] = t.s1[i][j];
      s[1][i][j] = t.s2[i][j];
      s[2][i][j] = t.s3[i][j];
    }
  for (int c = 0; c < 27; ++c) {
    auto X = Jordan<mpq_class>::basis(c);
    Jordan<mpq_class> Y = X;
    for (int k = 0; k < 3; ++k) Y.x[k] = mat8_apply(s[k], X.x[k]);
    if (Y != sigma4_map(X)) return c;
  }
  return std::nullopt;
}

namespace {

using JC = Jordan<C>;
using E8C = E8El<C>;

JC exp_pi_g23(const JC& X) {
  const auto& tri = so8_triples_as<C>()[g_index(2, 3)];
  JC Y = X;
  Y.x[0].c[2] = -X.x[0].c[2];
  Y.x[0].c[3] = -X.x[0].c[3];
  for (int k = 1; k < 3; ++k) Y.x[k] = C(2) * mat8_apply(tri[k], X.x[k]);
  return Y;
}

struct E8Map {
  std::string name;
  std::function<E8C(const E8C&)> f;
};

std::vector<E8Map> z4_maps() {
  return {{"1", [](const E8C& R) { return R; }},
          {"sigma", [](const E8C& R) { return sigma_on_e8(R); }},
          {"sigma'_4", [](const E8C& R) { return sigma4_on_e8(R); }},
          {"sigma sigma'_4", [](const E8C& R) { return sigma_on_e8(sigma4_on_e8(R)); }}};
}

}  // namespace

KernelProbe spin6_kernel_probe() {
  std::vector<std::pair<std::string, std::function<JC(const JC&)>>> cands = {
      {"1", [](const JC& X) { return X; }},
      {"sigma", [](const JC& X) { return sigma_map(X); }},
      {"sigma'_4", [](const JC& X) { return sigma4_map(X); }},
      {"sigma sigma'_4", [](const JC& X) { return sigma_map(sigma4_map(X)); }},
      {"exp(pi G_23)", exp_pi_g23}};
  std::vector<std::vector<C>> V, fixed;
  for (int k = 2; k < 8; ++k) V.push_back(JC::F(1, Octonion<C>::basis(k)).coords());
  for (int i = 1; i <= 3; ++i) fixed.push_back(JC::E(i).coords());
  for (int k = 0; k < 2; ++k) fixed.push_back(JC::F(1, Octonion<C>::basis(k)).coords());
  std::vector<LinearEndo<C>> maps;
  KernelProbe out;
  for (const auto& [name, f] : cands) {
    out.candidates.push_back(name);
    maps.push_back(endo_from_fn<C>(27, [&](const std::vector<C>& v) { return f(JC::from_coords(v)).coords(); }));
  }
  auto on_V = kernel_probe(maps, V);
  auto in_group = kernel_probe(maps, fixed);
  for (int m : on_V)
    if (std::find(in_group.begin(), in_group.end(), m) != in_group.end()) out.kernel.push_back(out.candidates[m]);
  return out;
}

std::vector<std::pair<std::string, bool>> z4_pair_compositions() {
  auto m = z4_maps();
  const std::pair<int, int> pairs[4] = {{0, 0}, {2, 3}, {1, 1}, {3, 2}};
  std::vector<std::pair<std::string, bool>> out;
  for (auto [a, b] : pairs) {
    bool ok = true;
    for (int i = 0; i < 248 && ok; ++i) {
      E8C e = E8C::basis(i);
      ok = m[a].f(m[b].f(e)) == e;
    }
    out.emplace_back("(" + m[a].name + ", " + m[b].name + ")", ok);
  }
  return out;
}

std::vector<std::string> center_commutation_failures(const So10Basis& B) {
  std::vector<std::string> out;
  auto maps = z4_maps();
  std::vector<std::vector<C>> basis_img[4];
  for (int g = 0; g < 4; ++g)
    for (int b = 0; b < 248; ++b) basis_img[g].push_back(maps[g].f(E8C::basis(b)).coords());
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto rc = B.at(i, j).coords();
      for (int g = 0; g < 4; ++g) {
        bool ok = true;
        for (int b = 0; b < 248 && ok; ++b) {
          std::vector<C> e(248, C(0));
          e[b] = C(1);
          auto lhs = maps[g].f(E8C::from_coords(e8_bracket_coords<C>(rc, e))).coords();
          auto rhs = e8_bracket_coords<C>(rc, basis_img[g][b]);
          ok = dense_is_zero(dense_sub(lhs, rhs));
        }
        if (!ok) out.push_back(maps[g].name + " does not commute with ad R" + std::to_string(i) + std::to_string(j));
      }
    }
  return out;
}

Mat8 delta1() {
  Mat8 m = zero8();
  const int img[8] = {6, 7, 2, 3, 4, 5, 0, 1};
  for (int j = 0; j < 8; ++j) m[img[j]][j] = 1;
  return m;
}

Mat8 mat8_mul(const Mat8& a, const Mat8& b) {
  Mat8 r = zero8();
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < 8; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

mpq_class mat8_det(const Mat8& m) {
  std::vector<std::vector<mpq_class>> a(8, std::vector<mpq_class>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a[i][j] = m[i][j];
  mpq_class det = 1;
  for (int c = 0; c < 8; ++c) {
    int p = c;
    while (p < 8 && a[p][c] == 0) ++p;
    if (p == 8) return 0;
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    for (int r = c + 1; r < 8; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j < 8; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

bool mat8_orthogonal(const Mat8& m) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      mpq_class s = 0;
      for (int k = 0; k < 8; ++k) s += m[k][i] * m[k][j];
      if (s != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace e8
