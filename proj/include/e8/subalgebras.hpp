#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "e8/e8_core.hpp"

namespace e8 {

enum class Ambient { f4, e6, e7, e8, j, p };

int ambient_dim(Ambient a);
std::string ambient_name(Ambient a);

using QVec = std::vector<Cq>;
using LinMap = std::function<QVec(const QVec&)>;

// A linear condition residual(x) = 0 on ambient coordinates. Conjugate-linear
// residuals are only admissible when solving for a real form.
struct Constraint {
  enum class Kind { fixed_by, annihilates, commutes_with, equals_after };
  Kind kind;
  std::string description;
  LinMap residual;
  bool conj_linear = false;
};

// x -> g(x) - x
Constraint fixed_by(std::string desc, LinMap g);
// x -> x . v, where act(x) already evaluates the action on v
Constraint annihilates(std::string desc, LinMap act);
// x -> [x, y] or the commutator of endomorphisms, as supplied
Constraint commutes_with(std::string desc, LinMap comm);
// x -> g(x) - sign x, with g possibly conjugate-linear
Constraint equals_after(std::string desc, LinMap g, int sign, bool conj_linear);

struct ConstraintSet {
  Ambient ambient;
  std::vector<Constraint> constraints;
  bool real_form = false;  // solve over R, coordinates doubled
};

struct SubalgebraCertificate {
  Ambient ambient;
  std::vector<std::string> constraints;
  bool real_form = false;
  int dim = 0;
  std::vector<QVec> basis;
  bool closure_checked = false;
  bool closed = false;
};

SubalgebraCertificate solve(const ConstraintSet& cs, bool check_closure = false);

// Bracket on the ambient coordinates (f4, e6, e7, e8 only).
QVec ambient_bracket(Ambient a, const QVec& x, const QVec& y);

// Canonical JSON of a certificate (exact rational strings).
std::string certificate_json(const SubalgebraCertificate& c, int indent = 2);

std::vector<F4El<Cq>> so6_generators();

// Commutators with a fixed ambient element or endomorphism.
LinMap f4_annihilator(const Jordan<Cq>& v);
LinMap e6_annihilator(const Jordan<Cq>& v);
LinMap e7_annihilator(const PVec<Cq>& v);
LinMap e6_commutator_with(std::function<Jordan<Cq>(const Jordan<Cq>&)> g);
LinMap e7_commutator_with(std::function<PVec<Cq>(const PVec<Cq>&)> g);
LinMap bracket_with(Ambient a, const QVec& y);

struct DimCheck {
  std::string id;
  std::string anchor;
  std::string quote;
  ConstraintSet cs;
  int expected;
};

// The sixteen dimension statements.
std::vector<DimCheck> dimension_checks();

// M restricted to span(V). Throws if span(V) is not M-invariant.
template <class S>
LinearEndo<S> restrict_endo(const LinearEndo<S>& M, const std::vector<std::vector<S>>& V) {
  const int k = int(V.size());
  const int n = M.dim;
  std::vector<int> rows;
  {
    Echelon<S> e(k);
    for (int i = 0; i < n && int(rows.size()) < k; ++i) {
      std::vector<S> r(k);
      for (int c = 0; c < k; ++c) r[c] = V[c][i];
      if (e.add(r)) rows.push_back(i);
    }
  }
  if (int(rows.size()) < k) throw std::invalid_argument("restrict_endo: basis is linearly dependent");
  std::vector<std::vector<S>> B(k, std::vector<S>(k));
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) B[a][c] = V[c][rows[a]];
  auto Binv = invert(B);
  LinearEndo<S> R(k);
  for (int c = 0; c < k; ++c) {
    auto img = M.apply(V[c]);
    std::vector<S> coef(k, S(0));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) coef[a] += Binv[a][b] * img[rows[b]];
    std::vector<S> back(n, S(0));
    for (int a = 0; a < k; ++a)
      for (int i = 0; i < n; ++i) back[i] += coef[a] * V[a][i];
    if (!dense_is_zero(dense_sub(back, img)))
      throw std::invalid_argument("restrict_endo: image of basis vector " + std::to_string(c) + " leaves the span");
    for (int a = 0; a < k; ++a) R(a, c) = coef[a];
  }
  return R;
}

// Indices of the candidates acting as the identity on every vector of V.
template <class S>
std::vector<int> kernel_probe(const std::vector<LinearEndo<S>>& maps, const std::vector<std::vector<S>>& V) {
  std::vector<int> out;
  for (int m = 0; m < int(maps.size()); ++m) {
    bool ok = true;
    for (const auto& v : V)
      if (!dense_is_zero(dense_sub(maps[m].apply(v), v))) { ok = false; break; }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace e8
