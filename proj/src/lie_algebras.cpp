#include "e8/lie_algebras.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace e8 {

namespace {

// Solve for (D2, D3) given D1 from (D1 x) y + x (D2 y) = conj(D3 conj(xy))
// on all pairs of basis octonions. Unknowns: D2[p][q] at p*8+q, D3 at 64 + p*8+q,
// constant term at column 128.
Triple8 solve_triple(const Mat8& D1) {
  const auto& T = oct_table();
  auto csign = [](int k) { return k == 0 ? 1 : -1; };
  Echelon<mpq_class> ech(129);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int m = 0; m < 8; ++m) {
        std::vector<mpq_class> row(129, mpq_class(0));
        // (D1 e_a) e_b, component m
        for (int p = 0; p < 8; ++p)
          if (D1[p][a] != 0 && T[p][b].k == m) row[128] += D1[p][a] * T[p][b].sign;
        // e_a (D2 e_b) = sum_p D2[p][b] e_a e_p
        for (int p = 0; p < 8; ++p)
          if (T[a][p].k == m) row[p * 8 + b] += T[a][p].sign;
        // -conj(D3 conj(e_a e_b))
        int s = T[a][b].sign, k = T[a][b].k;
        row[64 + m * 8 + k] -= s * csign(k) * csign(m);
        bool nz = false;
        for (const auto& v : row)
          if (v != 0) { nz = true; break; }
        if (nz) ech.add(row);
      }
  // Without antisymmetry (D2, D3) is determined up to adding (c, c) Id.
  for (int p = 0; p < 8; ++p)
    for (int q = p; q < 8; ++q) {
      std::vector<mpq_class> row(129, mpq_class(0));
      row[p * 8 + q] += 1;
      row[q * 8 + p] += 1;
      ech.add(row);
    }
  if (ech.rank() != 128 || ech.pivots().back() == 128) throw std::logic_error("triality system is not uniquely solvable");
  Triple8 t;
  t[0] = D1;
  for (size_t r = 0; r < ech.rows().size(); ++r) {
    int p = ech.pivots()[r];
    mpq_class v = -ech.rows()[r][128];
    if (p < 64)
      t[1][p / 8][p % 8] = v;
    else
      t[2][(p - 64) / 8][(p - 64) % 8] = v;
  }
  return t;
}

}  // namespace

const std::array<Triple8, 28>& so8_triples() {
  static const auto tab = [] {
    std::array<Triple8, 28> out;
    int g = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j, ++g) {
        Mat8 D{};
        for (auto& r : D)
          for (auto& v : r) v = 0;
        D[i][j] = 1;
        D[j][i] = -1;
        out[g] = solve_triple(D);
      }
    return out;
  }();
  return tab;
}

const F4Projection& f4_projection() {
  static const F4Projection proj = [] {
    // Column-major flattening so that the pivots concentrate in few columns.
    std::vector<std::vector<mpq_class>> mats;
    Echelon<mpq_class> ech(27 * 27);
    for (int b = 0; b < 52; ++b) {
      auto d = F4El<mpq_class>::basis(b);
      std::vector<mpq_class> v(27 * 27, mpq_class(0));
      for (int c = 0; c < 27; ++c) {
        auto img = f4_act(d, Jordan<mpq_class>::basis(c));
        for (int r = 0; r < 27; ++r) v[c * 27 + r] = img.coord(r);
      }
      if (!ech.add(v)) throw std::logic_error("f4 basis actions are linearly dependent");
      mats.push_back(std::move(v));
    }
    F4Projection p;
    std::vector<std::vector<mpq_class>> M(52, std::vector<mpq_class>(52));
    for (int k = 0; k < 52; ++k) {
      int pos = ech.pivots()[k];
      p.pivots.emplace_back(pos % 27, pos / 27);
      for (int b = 0; b < 52; ++b) M[k][b] = mats[b][pos];
    }
    p.W = invert(M);
    for (const auto& pv : p.pivots) p.columns.push_back(pv.second);
    std::sort(p.columns.begin(), p.columns.end());
    p.columns.erase(std::unique(p.columns.begin(), p.columns.end()), p.columns.end());
    return p;
  }();
  return proj;
}

LinearEndo<cd> exp_endo(const LinearEndo<cd>& M) {
  if (M.conj_linear) throw std::invalid_argument("exp of a conjugate-linear map");
  int n = M.dim;
  Eigen::MatrixXcd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = M(i, j);
  Eigen::MatrixXcd E = A.exp();
  LinearEndo<cd> R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = E(i, j);
  return R;
}

}  // namespace e8
