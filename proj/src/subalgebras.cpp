#include "e8/subalgebras.hpp"

#include <json.hpp>
#include <stdexcept>

#include "e8/spin_verify.hpp"

namespace e8 {

namespace {

using J = Jordan<Cq>;
using P = PVec<Cq>;

QVec unit(int n, int k, const Cq& v = Cq(1)) {
  QVec e(n, Cq(0));
  e[k] = v;
  return e;
}

void append(QVec& out, const QVec& v) { out.insert(out.end(), v.begin(), v.end()); }

// Rows of the matrix whose columns are the residuals of the basis vectors.
template <class Fn>
void add_rows(Echelon<Cq>& E, int n, Fn residual_of_basis) {
  std::vector<QVec> cols(n);
  for (int k = 0; k < n; ++k) cols[k] = residual_of_basis(k);
  const size_t m = cols.empty() ? 0 : cols[0].size();
  for (size_t i = 0; i < m && E.rank() < n; ++i) {
    QVec row(n);
    bool nz = false;
    for (int k = 0; k < n; ++k) {
      row[k] = cols[k][i];
      nz = nz || !row[k].is_zero();
    }
    if (nz) E.add(row);
  }
}

std::vector<mpq_class> doubled(const QVec& v) {
  std::vector<mpq_class> d(2 * v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    d[i] = v[i].re;
    d[v.size() + i] = v[i].im;
  }
  return d;
}

F4El<Cq> f4_of(const QVec& x) { return F4El<Cq>::from_coords(x); }
E6El<Cq> e6_of(const QVec& x) { return E6El<Cq>::from_coords(x); }

QVec f4_bracket_coords(const QVec& x, const QVec& y) {
  auto a = f4_of(x), b = f4_of(y);
  return f4_from_columns<Cq>([&](int c) {
           J e = J::basis(c);
           return f4_act(a, f4_act(b, e)) - f4_act(b, f4_act(a, e));
         })
      .coords();
}

QVec e6_bracket_coords(const QVec& x, const QVec& y) {
  auto a = e6_of(x), b = e6_of(y);
  auto col = [&](int c) {
    J e = J::basis(c);
    return e6_act(a, e6_act(b, e)) - e6_act(b, e6_act(a, e));
  };
  E6El<Cq> r;
  r.T = col(0) + col(1) + col(2);
  r.delta = f4_from_columns<Cq>([&](int c) { return col(c) - jordan_mul(r.T, J::basis(c)); });
  return r.coords();
}

}  // namespace

int ambient_dim(Ambient a) {
  switch (a) {
    case Ambient::f4: return 52;
    case Ambient::e6: return 78;
    case Ambient::e7: return 133;
    case Ambient::e8: return 248;
    case Ambient::j: return 27;
    case Ambient::p: return 56;
  }
  return 0;
}

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::f4: return "f4";
    case Ambient::e6: return "e6";
    case Ambient::e7: return "e7";
    case Ambient::e8: return "e8";
    case Ambient::j: return "j";
    case Ambient::p: return "p";
  }
  return "?";
}

Constraint fixed_by(std::string desc, LinMap g) {
  return {Constraint::Kind::fixed_by, std::move(desc), [g](const QVec& x) { return dense_sub(g(x), x); }, false};
}

Constraint annihilates(std::string desc, LinMap act) {
  return {Constraint::Kind::annihilates, std::move(desc), std::move(act), false};
}

Constraint commutes_with(std::string desc, LinMap comm) {
  return {Constraint::Kind::commutes_with, std::move(desc), std::move(comm), false};
}

Constraint equals_after(std::string desc, LinMap g, int sign, bool conj_linear) {
  return {Constraint::Kind::equals_after, std::move(desc),
          [g, sign](const QVec& x) { return dense_sub(g(x), dense_scale(x, Cq(sign))); }, conj_linear};
}

QVec ambient_bracket(Ambient a, const QVec& x, const QVec& y) {
  switch (a) {
    case Ambient::f4: return f4_bracket_coords(x, y);
    case Ambient::e6: return e6_bracket_coords(x, y);
    case Ambient::e7: return e7_bracket_coords<Cq>(x, y);
    case Ambient::e8: return e8_bracket_coords<Cq>(x, y);
    default: throw std::invalid_argument("ambient " + ambient_name(a) + " has no bracket");
  }
}

SubalgebraCertificate solve(const ConstraintSet& cs, bool check_closure) {
  const int n = ambient_dim(cs.ambient);
  SubalgebraCertificate cert;
  cert.ambient = cs.ambient;
  cert.real_form = cs.real_form;
  for (const auto& c : cs.constraints) cert.constraints.push_back(c.description);

  // Constraints are imposed one at a time on the current solution space, so
  // later (expensive) residuals are evaluated on few vectors only.
  std::vector<QVec> cur;
  for (int k = 0; k < n; ++k) cur.push_back(unit(n, k));
  for (const auto& c : cs.constraints) {
    if (c.conj_linear) {
      if (!cs.real_form) throw std::invalid_argument("conjugate-linear constraint '" + c.description + "' needs a real form");
      continue;
    }
    if (cur.empty()) break;
    const int d = int(cur.size());
    Echelon<Cq> E(d);
    add_rows(E, d, [&](int k) { return c.residual(cur[k]); });
    std::vector<QVec> next;
    for (const auto& w : E.kernel()) {
      QVec v(n, Cq(0));
      for (int k = 0; k < d; ++k)
        if (!w[k].is_zero())
          for (int i = 0; i < n; ++i)
            if (!cur[k][i].is_zero()) v[i] += w[k] * cur[k][i];
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }
  // Canonical basis: reduced row echelon form of the solution space.
  std::vector<QVec> cbasis;
  {
    Echelon<Cq> E(n);
    for (const auto& v : cur) E.add(v);
    cbasis = E.rows();
  }

  if (!cs.real_form) {
    cert.basis = std::move(cbasis);
  } else {
    const int d = int(cbasis.size());
    Echelon<mpq_class> R(2 * d);
    for (const auto& c : cs.constraints) {
      if (!c.conj_linear) continue;
      std::vector<std::vector<mpq_class>> cols(2 * d);
      for (int k = 0; k < d; ++k) {
        QVec ib = dense_scale(cbasis[k], Cq(0, 1));
        QVec r0 = c.residual(cbasis[k]), r1 = c.residual(ib);
        cols[k] = doubled(r0);
        cols[d + k] = doubled(r1);
      }
      const size_t m = cols.empty() ? 0 : cols[0].size();
      for (size_t i = 0; i < m && R.rank() < 2 * d; ++i) {
        std::vector<mpq_class> row(2 * d);
        bool nz = false;
        for (int k = 0; k < 2 * d; ++k) {
          row[k] = cols[k][i];
          nz = nz || sgn(row[k]) != 0;
        }
        if (nz) R.add(row);
      }
    }
    for (const auto& w : R.kernel()) {
      QVec v(n, Cq(0));
      for (int k = 0; k < d; ++k) {
        Cq coef(w[k], w[d + k]);
        if (coef.is_zero()) continue;
        for (int i = 0; i < n; ++i)
          if (!cbasis[k][i].is_zero()) v[i] += coef * cbasis[k][i];
      }
      cert.basis.push_back(std::move(v));
    }
    Echelon<mpq_class> canon(2 * n);
    for (const auto& v : cert.basis) canon.add(doubled(v));
    cert.basis.clear();
    for (const auto& row : canon.rows()) {
      QVec v(n);
      for (int i = 0; i < n; ++i) v[i] = Cq(row[i], row[n + i]);
      cert.basis.push_back(std::move(v));
    }
  }
  cert.dim = int(cert.basis.size());

  if (check_closure) {
    cert.closure_checked = true;
    cert.closed = true;
    if (!cs.real_form) {
      Echelon<Cq> span(n);
      for (const auto& b : cert.basis) span.add(b);
      for (size_t a = 0; a < cert.basis.size() && cert.closed; ++a)
        for (size_t b = a + 1; b < cert.basis.size(); ++b)
          if (!span.contains(ambient_bracket(cs.ambient, cert.basis[a], cert.basis[b]))) {
            cert.closed = false;
            break;
          }
    } else {
      Echelon<mpq_class> span(2 * n);
      for (const auto& b : cert.basis) span.add(doubled(b));
      for (size_t a = 0; a < cert.basis.size() && cert.closed; ++a)
        for (size_t b = a + 1; b < cert.basis.size(); ++b)
          if (!span.contains(doubled(ambient_bracket(cs.ambient, cert.basis[a], cert.basis[b])))) {
            cert.closed = false;
            break;
          }
    }
  }
  return cert;
}

std::string certificate_json(const SubalgebraCertificate& c, int indent) {
  nlohmann::ordered_json j;
  j["ambient"] = ambient_name(c.ambient);
  j["field"] = c.real_form ? "R" : "C";
  j["constraints"] = c.constraints;
  j["dim"] = c.dim;
  j["closure_checked"] = c.closure_checked;
  if (c.closure_checked) j["closed"] = c.closed;
  auto basis = nlohmann::ordered_json::array();
  for (const auto& v : c.basis) {
    auto coords = nlohmann::ordered_json::object();
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) coords[std::to_string(i)] = to_string(v[i]);
    basis.push_back(coords);
  }
  j["basis"] = basis;
  return j.dump(indent);
}

std::vector<F4El<Cq>> so6_generators() {
  std::vector<F4El<Cq>> out;
  for (int i = 2; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) out.push_back(F4El<Cq>::G(i, j));
  return out;
}

LinMap f4_annihilator(const J& v) {
  return [v](const QVec& x) { return f4_act(f4_of(x), v).coords(); };
}

LinMap e6_annihilator(const J& v) {
  return [v](const QVec& x) { return e6_act(e6_of(x), v).coords(); };
}

LinMap e7_annihilator(const P& v) {
  auto vc = v.coords();
  return [vc](const QVec& x) { return e7_act_coords<Cq>(x, vc); };
}

LinMap e6_commutator_with(std::function<J(const J&)> g) {
  return [g](const QVec& x) {
    auto phi = e6_of(x);
    QVec out;
    out.reserve(27 * 27);
    for (int c = 0; c < 27; ++c) {
      J e = J::basis(c);
      append(out, (e6_act(phi, g(e)) - g(e6_act(phi, e))).coords());
    }
    return out;
  };
}

LinMap e7_commutator_with(std::function<P(const P&)> g) {
  std::vector<QVec> gcols(56);
  for (int j = 0; j < 56; ++j) gcols[j] = g(P::basis(j)).coords();
  return [g, gcols](const QVec& x) {
    QVec out;
    out.reserve(56 * 56);
    for (int j = 0; j < 56; ++j) {
      auto a = e7_act_coords<Cq>(x, gcols[j]);
      auto b = g(P::from_coords(e7_act_coords<Cq>(x, unit(56, j)))).coords();
      append(out, dense_sub(a, b));
    }
    return out;
  };
}

LinMap bracket_with(Ambient a, const QVec& y) {
  return [a, y](const QVec& x) { return ambient_bracket(a, x, y); };
}

namespace {

std::vector<Constraint> f4_stabilizer(const std::vector<int>& diag, int k0, int k1) {
  std::vector<Constraint> cs;
  for (int i : diag) cs.push_back(annihilates("delta E" + std::to_string(i) + " = 0", f4_annihilator(J::E(i))));
  for (int k = k0; k <= k1; ++k)
    cs.push_back(annihilates("delta F1(e" + std::to_string(k) + ") = 0",
                             f4_annihilator(J::F(1, Octonion<Cq>::basis(k)))));
  return cs;
}

Constraint e7_sigma4() {
  return fixed_by("sigma'_4 Phi = Phi sigma'_4",
                  [](const QVec& x) { return apply_sparse_matrix<Cq>(tables_as<Cq>().sigma4_e7, x); });
}

std::vector<Constraint> e7_so6() {
  std::vector<Constraint> cs;
  for (const auto& d : so6_generators()) {
    E7El<Cq> F(e6_from_delta(d), J(), J(), Cq(0));
    cs.push_back(commutes_with("[Phi, Phi_D] = 0", bracket_with(Ambient::e7, F.coords())));
  }
  return cs;
}

std::vector<Constraint> e7_kappa_mu() {
  return {commutes_with("kappa Phi = Phi kappa", e7_commutator_with([](const P& p) { return kappa_map(p); })),
          commutes_with("mu Phi = Phi mu", e7_commutator_with([](const P& p) { return mu_map(p); }))};
}

std::vector<Constraint> e7_fix_F1dot(int k0, int k1) {
  std::vector<Constraint> cs;
  for (int k = k0; k <= k1; ++k)
    cs.push_back(annihilates("Phi F1(e" + std::to_string(k) + ")^. = 0",
                             e7_annihilator(P(J::F(1, Octonion<Cq>::basis(k)), J(), Cq(0), Cq(0)))));
  return cs;
}

Constraint e8_sigma4() {
  return fixed_by("sigma'_4 R = R",
                  [](const QVec& x) { return sigma4_on_e8(E8El<Cq>::from_coords(x)).coords(); });
}

std::vector<Constraint> e8_so6() {
  std::vector<Constraint> cs;
  for (const auto& g : so6_e8_generators())
    cs.push_back(commutes_with("[R, R_D] = 0", bracket_with(Ambient::e8, g.coords())));
  return cs;
}

template <class... Vs>
std::vector<Constraint> cat(Vs&&... vs) {
  std::vector<Constraint> out;
  (out.insert(out.end(), vs.begin(), vs.end()), ...);
  return out;
}

}  // namespace

std::vector<DimCheck> dimension_checks() {
  std::vector<DimCheck> out;
  auto add = [&](std::string id, std::string anchor, std::string quote, Ambient a, std::vector<Constraint> cs,
                 int expected, bool real = false) {
    out.push_back({std::move(id), std::move(anchor), std::move(quote), ConstraintSet{a, std::move(cs), real}, expected});
  };
  const std::vector<int> all3{1, 2, 3};
  add("lemma3.5", "Lemma 3.5", "delta E_i=0, i=1,2,3, delta F1(e_k)=0, k=0,1,2,3,4", Ambient::f4,
      f4_stabilizer(all3, 0, 4), 3);
  add("lemma3.8", "Lemma 3.8", "delta E_i=0, i=1,2,3, delta F1(e_k)=0, k=0,1,2,3", Ambient::f4,
      f4_stabilizer(all3, 0, 3), 6);
  add("lemma3.11", "Lemma 3.11", "delta E_i=0, i=1,2,3, delta F1(e_k)=0, k=0,1,2", Ambient::f4,
      f4_stabilizer(all3, 0, 2), 10);
  add("lemma3.14", "Lemma 3.14", "delta E_i=0, i=1,2,3, delta F1(e_k)=0, k=0,1", Ambient::f4,
      f4_stabilizer(all3, 0, 1), 15);
  add("lemma4.1.1", "Lemma 4.1 (1)", "dim_C((e7^C)^{sigma'_4}) = 33", Ambient::e7, {e7_sigma4()}, 33);
  add("lemma4.1.2", "Lemma 4.1 (2)", "[Phi, Phi_D]=0 for all D in so(6,C)", Ambient::e7,
      cat(std::vector<Constraint>{e7_sigma4()}, e7_so6()), 18);
  add("lemma4.3", "Lemma 4.3", "delta E_1=0, delta F1(e_k)=0, k=2,...,7", Ambient::f4, f4_stabilizer({1}, 2, 7), 3);
  {
    std::vector<Constraint> cs{
        commutes_with("sigma phi = phi sigma", e6_commutator_with([](const J& x) { return sigma_map(x); })),
        annihilates("phi E1 = 0", e6_annihilator(J::E(1)))};
    for (int k = 2; k <= 7; ++k)
      cs.push_back(annihilates("phi F1(e" + std::to_string(k) + ") = 0",
                               e6_annihilator(J::F(1, Octonion<Cq>::basis(k)))));
    add("lemma4.6", "Lemma 4.6", "sigma phi = phi sigma, phi E_1 = 0, phi F1(e_k) = 0, k=2,...,7", Ambient::e6, cs, 6);
  }
  add("lemma4.10", "Lemma 4.10", "kappa Phi = Phi kappa, mu Phi = Phi mu, Phi E~_1 = 0, Phi F1(e_k)^. = 0, k=2,...,7",
      Ambient::e7,
      cat(std::vector<Constraint>{annihilates("Phi E~1 = 0", e7_annihilator(P(J(), J::E(1), Cq(0), Cq(1))))},
          e7_fix_F1dot(2, 7), e7_kappa_mu()),
      10);
  add("lemma4.14", "Lemma 4.14", "kappa Phi = Phi kappa, mu Phi = Phi mu, Phi F1(e_k)^. = 0, k=2,...,7", Ambient::e7,
      cat(e7_fix_F1dot(2, 7), e7_kappa_mu()), 15);
  add("lemma4.18", "Lemma 4.18", "kappa Phi = Phi kappa, mu Phi = Phi mu, sigma'_4 Phi = Phi sigma'_4", Ambient::e7,
      cat(std::vector<Constraint>{e7_sigma4()}, e7_kappa_mu()), 30);
  const QVec one_minus = one_t<Cq>().coords();
  add("lemma5.1.1", "Lemma 5.1 (1)", "sigma'_4 R = R, [R, R_D] = 0 for all D in so(6,C), [R, 1_-] = 0", Ambient::e8,
      cat(std::vector<Constraint>{e8_sigma4()}, e8_so6(),
          std::vector<Constraint>{commutes_with("[R, 1_-] = 0", bracket_with(Ambient::e8, one_minus))}),
      31);
  add("lemma5.1.2", "Lemma 5.1 (2)", "sigma'_4 R = R, [R, R_D] = 0 for all D in so(6,C)", Ambient::e8,
      cat(std::vector<Constraint>{e8_sigma4()}, e8_so6()), 45);
  add("lemma6.1", "Lemma 6.1", "(e8)^{sigma'_4, so(6)}: sigma'_4 R = R, [R, R_D] = 0, R in e8", Ambient::e8,
      cat(std::vector<Constraint>{e8_sigma4()}, e8_so6(),
          std::vector<Constraint>{equals_after(
              "tau lambda_omega R = R",
              [](const QVec& x) { return tau(lambda_omega(E8El<Cq>::from_coords(x))).coords(); }, 1, true)}),
      45, true);
  add("lemma7.1", "Lemma 7.1", "33 + ((3+2) x 2 + 1 x 2) x 2 + 3 = 60", Ambient::e8, {e8_sigma4()}, 60);
  add("section8", "Theorem 8.1", "dim((f4)_{E1,E2,E3,F1(e_k),k=0,1}) = 15", Ambient::f4,
      cat(f4_stabilizer(all3, 0, 1), std::vector<Constraint>{equals_after(
                                          "tau delta = delta",
                                          [](const QVec& x) {
                                            QVec y = x;
                                            for (auto& v : y) v = ST<Cq>::conj(v);
                                            return y;
                                          },
                                          1, true)}),
      15, true);
  return out;
}

}  // namespace e8
