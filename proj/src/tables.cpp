#include <type_traits>
#include <cmath>

#include "e8/e8_core.hpp"

namespace e8 {

namespace {

using Q = mpq_class;
using QVec = std::vector<Q>;
using Cols = std::vector<SparseVec<Q>>;

// Pivot entries of the 133 basis action matrices and the inverse of the
// pivot submatrix: e7 coordinates of an action = W * (entries at pivots).
struct E7Proj {
  std::vector<std::pair<int, int>> pos;  // (row, col)
  std::vector<int> columns;
  std::vector<QVec> W;
};

E7Proj build_e7_proj(const std::vector<Cols>& M7) {
  Echelon<Q> ech(56 * 56);
  std::vector<QVec> flat;
  for (int k = 0; k < 133; ++k) {
    QVec v(56 * 56, Q(0));
    for (int j = 0; j < 56; ++j)
      for (const auto& [i, x] : M7[k][j]) v[j * 56 + i] = x;
    if (!ech.add(v)) throw std::logic_error("e7 basis actions are linearly dependent");
    flat.push_back(std::move(v));
  }
  E7Proj p;
  std::vector<QVec> M(133, QVec(133));
  for (int r = 0; r < 133; ++r) {
    int pos = ech.pivots()[r];
    p.pos.emplace_back(pos % 56, pos / 56);
    for (int b = 0; b < 133; ++b) M[r][b] = flat[b][pos];
  }
  p.W = invert(M);
  for (const auto& pv : p.pos) p.columns.push_back(pv.second);
  std::sort(p.columns.begin(), p.columns.end());
  p.columns.erase(std::unique(p.columns.begin(), p.columns.end()), p.columns.end());
  return p;
}

SparseVec<Q> project(const E7Proj& p, const QVec& ent) {
  QVec x(133, Q(0));
  for (int i = 0; i < 133; ++i)
    for (int j = 0; j < 133; ++j)
      if (p.W[i][j] != 0 && ent[j] != 0) x[i] += p.W[i][j] * ent[j];
  return sparse_from_dense(x);
}

QVec apply_cols(const Cols& cols, const QVec& v) {
  QVec r(cols.size(), Q(0));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, x] : cols[j]) r[i] += x * v[j];
  }
  return r;
}

// Matrix of Phi -> g Phi g^{-1} on e7 coordinates.
template <class G, class GInv>
Cols conjugation_matrix(const E7Proj& pr, const std::vector<Cols>& M7, G g, GInv ginv) {
  Cols out(133);
  for (int k = 0; k < 133; ++k) {
    std::vector<QVec> colv(56);
    for (int c : pr.columns) {
      QVec e = ginv(PVec<Q>::basis(c)).coords();
      colv[c] = g(PVec<Q>::from_coords(apply_cols(M7[k], e))).coords();
    }
    QVec ent(133);
    for (int r = 0; r < 133; ++r) ent[r] = colv[pr.pos[r].second][pr.pos[r].first];
    out[k] = project(pr, ent);
  }
  return out;
}

Q rationalize(double x) {
  if (std::fabs(x) < 1e-7) return Q(0);
  for (long d = 1; d <= 100000; ++d) {
    double n = std::round(x * d);
    if (std::fabs(x * d - n) < 1e-6 * d) return Q(long(n), d);
  }
  throw std::logic_error("Killing form value is not a small rational");
}

// tr(ad_a ad_b) over a structure-constant table, computed in doubles and
// recovered as rationals.
std::vector<QVec> killing_table(const std::vector<Cols>& C, int n) {
  std::vector<std::vector<std::pair<int, double>>> cd(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d)
      for (const auto& [c, v] : C[a][d]) cd[size_t(a) * n + d].emplace_back(c, v.get_d());
  std::vector<QVec> K(n, QVec(n, Q(0)));
  std::vector<double> ada(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    // ada[c * n + d] = coefficient of e_c in [e_a, e_d]
    std::fill(ada.begin(), ada.end(), 0.0);
    for (int d = 0; d < n; ++d)
      for (const auto& [c, v] : cd[size_t(a) * n + d]) ada[size_t(c) * n + d] = v;
    for (int b = a; b < n; ++b) {
      double s = 0;
      for (int c = 0; c < n; ++c)
        for (const auto& [d, v] : cd[size_t(b) * n + c]) s += ada[size_t(c) * n + d] * v;
      K[a][b] = K[b][a] = rationalize(s);
    }
  }
  return K;
}

}  // namespace

const AlgebraTables& tables() {
  static const AlgebraTables T = [] {
    AlgebraTables t;
    // e7 action matrices
    t.M7.assign(133, Cols(56));
    for (int k = 0; k < 133; ++k) {
      auto F = E7El<Q>::basis(k);
      for (int j = 0; j < 56; ++j) t.M7[k][j] = sparse_from_dense(e7_act(F, PVec<Q>::basis(j)).coords());
    }
    const E7Proj pr = build_e7_proj(t.M7);

    // dense copies for entry lookup: dm[k][i * 56 + j]
    std::vector<QVec> dm(133, QVec(56 * 56, Q(0)));
    for (int k = 0; k < 133; ++k)
      for (int j = 0; j < 56; ++j)
        for (const auto& [i, x] : t.M7[k][j]) dm[k][i * 56 + j] = x;

    t.C7.assign(133, Cols(133));
    for (int a = 0; a < 133; ++a)
      for (int b = a + 1; b < 133; ++b) {
        QVec ent(133, Q(0));
        for (int p = 0; p < 133; ++p) {
          auto [i, j] = pr.pos[p];
          Q s = 0;
          for (const auto& [k, v] : t.M7[b][j]) s += dm[a][i * 56 + k] * v;
          for (const auto& [k, v] : t.M7[a][j]) s -= dm[b][i * 56 + k] * v;
          ent[p] = s;
        }
        t.C7[a][b] = project(pr, ent);
        auto neg = t.C7[a][b];
        for (auto& e : neg) e.second = -e.second;
        t.C7[b][a] = std::move(neg);
      }

    t.FX.assign(56, Cols(56));
    t.SK.assign(56, QVec(56, Q(0)));
    for (int p = 0; p < 56; ++p)
      for (int q = p; q < 56; ++q) {
        auto P = PVec<Q>::basis(p), R = PVec<Q>::basis(q);
        t.FX[p][q] = sparse_from_dense(fcross(P, R).coords());
        t.FX[q][p] = t.FX[p][q];
        t.SK[p][q] = skew(P, R);
        t.SK[q][p] = -t.SK[p][q];
      }

    // e8 structure constants from the component formula on basis pairs.
    t.C8.assign(248, Cols(248));
    auto put = [](QVec& v, int off, const SparseVec<Q>& s, const Q& c) {
      for (const auto& [i, x] : s) v[off + i] += c * x;
    };
    for (int a = 0; a < 248; ++a)
      for (int b = a + 1; b < 248; ++b) {
        QVec out(248, Q(0));
        auto kind = [](int i) { return i < 133 ? 0 : i < 189 ? 1 : i < 245 ? 2 : 3 + (i - 245); };
        int ka = kind(a), kb = kind(b);
        // Both arguments are basis vectors; a < b so ka <= kb.
        if (ka == 0 && kb == 0) {
          put(out, 0, t.C7[a][b], Q(1));
        } else if (ka == 0 && kb == 1) {
          put(out, kE8P, t.M7[a][b - kE8P], Q(1));
        } else if (ka == 0 && kb == 2) {
          put(out, kE8Q, t.M7[a][b - kE8Q], Q(1));
        } else if (ka == 1 && kb == 1) {
          out[kE8S] = Q(1, 4) * t.SK[a - kE8P][b - kE8P];
        } else if (ka == 1 && kb == 2) {
          int p = a - kE8P, q = b - kE8Q;
          put(out, 0, t.FX[p][q], Q(1));
          out[kE8R] = Q(-1, 8) * t.SK[p][q];
        } else if (ka == 2 && kb == 2) {
          out[kE8T] = Q(-1, 4) * t.SK[a - kE8Q][b - kE8Q];
        } else if (ka == 1 && kb >= 3) {
          int p = a - kE8P;
          if (kb == 3) out[kE8P + p] = -1;  // [P, r] = -P
          if (kb == 5) out[kE8Q + p] = -1;  // [P, t] = -t P in Q
        } else if (ka == 2 && kb >= 3) {
          int q = a - kE8Q;
          if (kb == 3) out[kE8Q + q] = 1;   // [Q, r] = Q
          if (kb == 4) out[kE8P + q] = -1;  // [Q, s] = -s Q in P
        } else if (ka == 3 && kb == 4) {
          out[kE8S] = 2;
        } else if (ka == 3 && kb == 5) {
          out[kE8T] = -2;
        } else if (ka == 4 && kb == 5) {
          out[kE8R] = 1;
        }
        t.C8[a][b] = sparse_from_dense(out);
        auto neg = t.C8[a][b];
        for (auto& e : neg) e.second = -e.second;
        t.C8[b][a] = std::move(neg);
      }

    t.K7 = killing_table(t.C7, 133);
    t.K8 = killing_table(t.C8, 248);

    t.sigma4_e7 = conjugation_matrix(pr, t.M7, [](const PVec<Q>& p) { return sigma4_on_P(p); },
                                     [](const PVec<Q>& p) { return sigma4_inv_on_P(p); });
    t.sigma_e7 = conjugation_matrix(pr, t.M7, [](const PVec<Q>& p) { return sigma_on_P(p); },
                                    [](const PVec<Q>& p) { return sigma_on_P(p); });
    t.lambda_e7 = conjugation_matrix(pr, t.M7, [](const PVec<Q>& p) { return lambda_map(p); },
                                     [](const PVec<Q>& p) { return lambda_inv_map(p); });
    return t;
  }();
  return T;
}

mpq_class killing_e7_basis(int a, int b) { return tables().K7[a][b]; }

namespace {

template <class R>
R conv(const Q& q) {
  if constexpr (std::is_same_v<R, double>)
    return q.get_d();
  else
    return q;
}

template <class R>
std::vector<SparseVec<R>> conv_cols(const Cols& c) {
  std::vector<SparseVec<R>> out(c.size());
  for (size_t j = 0; j < c.size(); ++j)
    for (const auto& [i, x] : c[j]) out[j].emplace_back(i, conv<R>(x));
  return out;
}

template <class R>
std::vector<std::vector<R>> conv_dense(const std::vector<QVec>& m) {
  std::vector<std::vector<R>> out(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(conv<R>(x));
  return out;
}

}  // namespace

template <class S>
const TablesAs<S>& tables_as() {
  using R = typename ST<S>::real;
  static const TablesAs<S> T = [] {
    const auto& q = tables();
    TablesAs<S> t;
    for (const auto& c : q.M7) t.M7.push_back(conv_cols<R>(c));
    for (const auto& c : q.C7) t.C7.push_back(conv_cols<R>(c));
    for (const auto& c : q.FX) t.FX.push_back(conv_cols<R>(c));
    for (const auto& c : q.C8) t.C8.push_back(conv_cols<R>(c));
    t.SK = conv_dense<R>(q.SK);
    t.K7 = conv_dense<R>(q.K7);
    t.K8 = conv_dense<R>(q.K8);
    t.sigma4_e7 = conv_cols<R>(q.sigma4_e7);
    t.sigma_e7 = conv_cols<R>(q.sigma_e7);
    t.lambda_e7 = conv_cols<R>(q.lambda_e7);
    return t;
  }();
  return T;
}

template const TablesAs<mpq_class>& tables_as<mpq_class>();
template const TablesAs<Cq>& tables_as<Cq>();
template const TablesAs<cd>& tables_as<cd>();
template const TablesAs<double>& tables_as<double>();

}  // namespace e8
