#include "e8/orbits.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "e8/spin_verify.hpp"
#include "e8/subalgebras.hpp"

namespace e8 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kZero = 1e-12;  // threshold for Re(.) = 0 branches
const cd I(0, 1);

using J = Jordan<cd>;
using PV = PVec<cd>;

template <class F>
CMat endo_J(F f) {
  CMat M(27, 27);
  for (int c = 0; c < 27; ++c) {
    J y = f(J::basis(c));
    for (int r = 0; r < 27; ++r) M(r, c) = y.coord(r);
  }
  return M;
}

template <class F>
CMat endo_P(F f) {
  CMat M(56, 56);
  for (int c = 0; c < 56; ++c) {
    PV y = f(PV::basis(c));
    for (int r = 0; r < 56; ++r) M(r, c) = y.coord(r);
  }
  return M;
}

OctD oct_conj_d(const OctD& x) { return oct_conj(x); }

bool in_C(const OctD& x, double tol) {
  for (int i = 2; i < 8; ++i)
    if (std::abs(x.c[i]) > tol) return false;
  return true;
}

// s in [0, pi] with tan s = num / den; pi/2 when den is (numerically) zero.
double angle(double num, double den) {
  if (std::abs(den) < kZero) return kPi / 2;
  double s = std::atan(num / den);
  if (s < 0) s += kPi;
  return s;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(12) << v;
  return o.str();
}

std::string fmt(cd z) {
  std::ostringstream o;
  o << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return o.str();
}

FlowStep make(std::string kind, std::vector<cd> params, Space sp, CMat m) {
  FlowStep s;
  s.kind = std::move(kind);
  s.params = std::move(params);
  s.space = sp;
  s.matrix = std::move(m);
  return s;
}

std::vector<cd> oct_params(const OctD& a) { return std::vector<cd>(a.c.begin(), a.c.end()); }

const CMat& jordan_gram() {
  static const CMat G = [] {
    CMat g(27, 27);
    for (int a = 0; a < 27; ++a)
      for (int b = 0; b < 27; ++b) g(a, b) = jordan_inner(J::basis(a), J::basis(b));
    return g;
  }();
  return G;
}

double max_abs(const CVecX& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// Reduction state: current vector plus the recorded steps.
struct Run {
  Space space;
  CVecX v;
  std::vector<FlowStep> steps;
  std::vector<std::string> log;
  void apply(FlowStep s) {
    v = s.matrix * v;
    steps.push_back(std::move(s));
  }
  void apply_if(FlowStep s, double param_abs) {
    if (param_abs > 1e-15) apply(std::move(s));
  }
};

struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Witness finish(const CVecX& start, Run& run, const CVecX& target) {
  Witness w;
  w.space = run.space;
  w.steps = std::move(run.steps);
  w.start = start;
  w.end = apply_steps(w.steps, start);
  w.target = target;
  w.residual = max_abs(w.end - target);
  w.log = std::move(run.log);
  return w;
}

template <class Attempt, class Preamble>
Witness with_retries(Space sp, const CVecX& start, const CVecX& target, const ReduceOptions& opt, Attempt attempt,
                     Preamble preamble) {
  Run run{sp, start, {}, {}};
  if (max_abs(start - target) <= opt.tol) return finish(start, run, target);
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k <= opt.max_retries; ++k) {
    Run r{sp, start, {}, run.log};
    try {
      if (k > 0) {
        FlowStep p = preamble(rng);
        r.log.push_back("retry " + std::to_string(k) + ": random preamble " + p.describe());
        r.apply(std::move(p));
      }
      attempt(r);
      double res = max_abs(r.v - target);
      if (res <= opt.tol) return finish(start, r, target);
      r.log.push_back("attempt " + std::to_string(k) + " ended with residual " + fmt(res));
    } catch (const Degenerate& e) {
      r.log.push_back("attempt " + std::to_string(k) + " degenerate: " + e.what());
    }
    run.log = r.log;
  }
  Witness w = finish(start, run, target);
  w.log.push_back("no witness within tolerance");
  w.residual = std::numeric_limits<double>::infinity();
  return w;
}

OctD random_C(std::mt19937_64& rng, double scale) {
  OctD o;
  o.c[0] = random_cd(rng, scale);
  o.c[1] = random_cd(rng, scale);
  return o;
}

}  // namespace

int space_dim(Space s) { return s == Space::J ? 27 : s == Space::P ? 56 : 248; }
std::string space_name(Space s) { return s == Space::J ? "J" : s == Space::P ? "P" : "e8"; }

std::string FlowStep::describe() const {
  std::string out = kind + "(";
  for (size_t i = 0; i < params.size(); ++i) out += (i ? ", " : "") + fmt(params[i]);
  return out + ")";
}

CVecX apply_steps(const std::vector<FlowStep>& steps, const CVecX& v) {
  CVecX x = v;
  for (const auto& s : steps) x = s.matrix * x;
  return x;
}

std::string witness_json(const Witness& w, int indent) {
  nlohmann::ordered_json j;
  j["space"] = space_name(w.space);
  auto& st = j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : w.steps) {
    nlohmann::ordered_json e;
    e["kind"] = s.kind;
    e["space"] = space_name(s.space);
    auto& p = e["params"] = nlohmann::ordered_json::array();
    for (const auto& z : s.params) p.push_back(fmt(z));
    st.push_back(e);
  }
  auto vec = [](const CVecX& v) {
    auto a = nlohmann::ordered_json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(fmt(cd(v(i))));
    return a;
  };
  j["start"] = vec(w.start);
  j["end"] = vec(w.end);
  j["residual"] = fmt(w.residual);
  j["log"] = w.log;
  return j.dump(indent);
}

CVecX to_vec(const J& X) {
  CVecX v(27);
  for (int i = 0; i < 27; ++i) v(i) = X.coord(i);
  return v;
}
CVecX to_vec(const PV& P) {
  CVecX v(56);
  for (int i = 0; i < 56; ++i) v(i) = P.coord(i);
  return v;
}
CVecX to_vec(const E8El<cd>& R) {
  auto c = R.coords();
  return Eigen::Map<CVecX>(c.data(), 248);
}
J jordan_of(const CVecX& v) {
  J X;
  for (int i = 0; i < 27; ++i) X.coord(i) = v(i);
  return X;
}
PV pvec_of(const CVecX& v) {
  PV P;
  for (int i = 0; i < 56; ++i) P.coord(i) = v(i);
  return P;
}
E8El<cd> e8_of(const CVecX& v) { return E8El<cd>::from_coords(std::vector<cd>(v.data(), v.data() + v.size())); }

CMat to_cmat(const LinearEndo<cd>& M) {
  CMat A(M.dim, M.dim);
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j) A(i, j) = M(i, j);
  return A;
}

CMat expm(const CMat& A) { return A.exp(); }

// ---- generators ----

CMat gen_g_rot(int i, int j) { return to_cmat(to_endo(F4El<cd>::G(i, j))); }
CMat gen_alpha_A1(const OctD& a) { return to_cmat(to_endo(F4El<cd>::A(1, a))); }
CMat gen_beta1(const OctD& t) { return to_cmat(to_endo(e6_from_T(J::F(1, t)))); }
CMat gen_alpha23() { return to_cmat(to_endo(e6_from_T(J::E(2) - J::E(3)))); }

CMat gen_phi_theta() {
  const OctD e1 = OctD::basis(1);
  return endo_J([&](const J& X) {
    J R;
    R.x[0] = -(e1 * X.x[0] + X.x[0] * e1);
    R.x[1] = e1 * X.x[1];
    R.x[2] = X.x[2] * e1;
    return R;
  });
}

CMat gen_alpha_i(int i, cd a) {
  return to_cmat(to_endo(E7El<cd>(E6El<cd>{}, a * J::E(i), -std::conj(a) * J::E(i), cd(0))));
}

CMat gen_alpha23_p(cd e) {
  J E = J::E(2) + J::E(3);
  return to_cmat(to_endo(E7El<cd>(E6El<cd>{}, e * E, -e * E, cd(0))));
}

CMat gen_beta_nu(cd nu) {
  J T = (cd(2.0 / 3) * nu) * (cd(2) * J::E(1) - J::E(2) - J::E(3));
  return to_cmat(to_endo(E7El<cd>(e6_from_T(T), J{}, J{}, cd(-2) * nu)));
}

CMat gen_psi(const Eigen::Matrix2cd& M) {
  cd nu = M(0, 0), a = M(0, 1), b = M(1, 0);
  J T = (cd(2.0 / 3) * nu) * (cd(2) * J::E(1) - J::E(2) - J::E(3));
  return to_cmat(to_endo(E7El<cd>(e6_from_T(T), a * J::E(1), b * J::E(1), nu)));
}

// ---- closed-form flows ----

FlowStep g_rot(int i, int j, cd s) {
  if (!(0 <= i && i < j && j < 8)) throw std::invalid_argument("g_rot: need 0 <= i < j <= 7");
  // x1 rotates in the (e_i, e_j) plane; the triality partners D on x2, x3
  // satisfy D^2 = -1/4, so exp(sD) = cos(s/2) + 2 sin(s/2) D.
  const auto& tri = so8_triples_as<cd>()[g_index(i, j)];
  const cd c = std::cos(s), sn = std::sin(s), ch = std::cos(s / 2.0), sh = 2.0 * std::sin(s / 2.0);
  CMat M = endo_J([&](const J& X) {
    J Y = X;
    cd ti = X.x[0].c[i], tj = X.x[0].c[j];
    Y.x[0].c[i] = c * ti + sn * tj;
    Y.x[0].c[j] = c * tj - sn * ti;
    for (int k = 1; k < 3; ++k) Y.x[k] = ch * X.x[k] + sh * mat8_apply(tri[k], X.x[k]);
    return Y;
  });
  return make("g_rot", {cd(i), cd(j), s}, Space::J, M);
}

FlowStep alpha_A1(const OctD& a) {
  cd aa = oct_norm(a);
  if (std::abs(aa) < 1e-14) throw std::domain_error("alpha_A1: a conj(a) = 0");
  cd nu = std::sqrt(aa);
  cd c2 = std::cos(cd(2) * nu), s2 = std::sin(cd(2) * nu), c1 = std::cos(nu), s1 = std::sin(nu);
  CMat M = endo_J([&](const J& X) {
    J Y;
    cd x2 = X.xi[1], x3 = X.xi[2], p = oct_inner(a, X.x[0]);
    Y.xi[0] = X.xi[0];
    Y.xi[1] = (x2 + x3) / 2.0 + (x2 - x3) / 2.0 * c2 + p / nu * s2;
    Y.xi[2] = (x2 + x3) / 2.0 - (x2 - x3) / 2.0 * c2 - p / nu * s2;
    Y.x[0] = X.x[0] - ((x2 - x3) / (2.0 * nu) * s2) * a - (2.0 * p / aa * s1 * s1) * a;
    Y.x[1] = c1 * X.x[1] - (s1 / nu) * oct_conj_d(X.x[2] * a);
    Y.x[2] = c1 * X.x[2] + (s1 / nu) * oct_conj_d(a * X.x[1]);
    return Y;
  });
  return make("alpha_A1", oct_params(a), Space::J, M);
}

FlowStep beta1(const OctD& t) {
  if (!in_C(t, 1e-14)) throw std::invalid_argument("beta1: t must lie in span{1, e1}");
  cd tt = oct_norm(t);
  if (std::abs(tt) < 1e-14) throw std::domain_error("beta1: t conj(t) = 0");
  cd nu = std::sqrt(tt);
  cd ch = std::cosh(nu), sh = std::sinh(nu), ch2 = std::cosh(nu / 2.0), sh2 = std::sinh(nu / 2.0);
  CMat M = endo_J([&](const J& X) {
    J Y;
    cd x2 = X.xi[1], x3 = X.xi[2], p = oct_inner(t, X.x[0]);
    Y.xi[0] = X.xi[0];
    Y.xi[1] = (x2 - x3) / 2.0 + (x2 + x3) / 2.0 * ch + p / nu * sh;
    Y.xi[2] = -(x2 - x3) / 2.0 + (x2 + x3) / 2.0 * ch + p / nu * sh;
    Y.x[0] = X.x[0] + ((x2 + x3) / (2.0 * nu) * sh) * t + (2.0 * p / tt * sh2 * sh2) * t;
    Y.x[1] = ch2 * X.x[1] + (sh2 / nu) * oct_conj_d(X.x[2] * t);
    Y.x[2] = ch2 * X.x[2] + (sh2 / nu) * oct_conj_d(t * X.x[1]);
    return Y;
  });
  return make("beta1", oct_params(t), Space::J, M);
}

FlowStep alpha23(cd c) {
  cd e = std::exp(c), h = std::exp(c / 2.0);
  CMat M = endo_J([&](const J& X) {
    J Y = X;
    Y.xi[1] *= e;
    Y.xi[2] /= e;
    Y.x[2] *= h;
    Y.x[1] *= 1.0 / h;
    return Y;
  });
  return make("alpha23", {c}, Space::J, M);
}

FlowStep phi_theta(const OctD& th, double tol) {
  if (!in_C(th, tol)) throw std::invalid_argument("phi_theta: theta must lie in span{1, e1}");
  if (std::abs(oct_norm(th) - 1.0) > tol) throw std::domain_error("phi_theta: theta conj(theta) != 1");
  OctD tb = oct_conj_d(th);
  CMat M = endo_J([&](const J& X) {
    J Y = X;
    Y.x[0] = tb * (X.x[0] * tb);
    Y.x[1] = th * X.x[1];
    Y.x[2] = X.x[2] * th;
    return Y;
  });
  return make("phi_theta", oct_params(th), Space::J, M);
}

namespace {

// The alpha_i block matrix with coefficients ca (of E_i in A-blocks),
// cb (of E_i in B-blocks), c = cos and the projection p_i.
CMat alpha_block(int i, cd ca, cd cb, cd c) {
  const J Ei = J::E(i);
  return endo_P([&](const PV& P) {
    auto proj = [&](const J& X) {
      J R;
      R.xi = X.xi;
      R.x[i - 1] = X.x[i - 1];
      return R;
    };
    PV R;
    R.X = P.X + (c - 1.0) * proj(P.X) + (cd(2) * cb) * jordan_cross(Ei, P.Y) + (P.eta * ca) * Ei;
    R.Y = (cd(2) * ca) * jordan_cross(Ei, P.X) + P.Y + (c - 1.0) * proj(P.Y) + (P.xi * cb) * Ei;
    R.xi = ca * jordan_inner(Ei, P.Y) + c * P.xi;
    R.eta = cb * jordan_inner(Ei, P.X) + c * P.eta;
    return R;
  });
}

}  // namespace

FlowStep alpha_i(int i, cd a) {
  if (i < 1 || i > 3) throw std::invalid_argument("alpha_i: i in 1..3");
  double m = std::abs(a);
  double sa = m < 1e-300 ? 1.0 : std::sin(m) / m;
  return make("alpha_i", {cd(i), a}, Space::P, alpha_block(i, a * sa, -std::conj(a) * sa, std::cos(m)));
}

FlowStep alpha_i_lin(int i, cd e) {
  if (i < 1 || i > 3) throw std::invalid_argument("alpha_i_lin: i in 1..3");
  cd s = std::sin(e);
  return make("alpha_i_lin", {cd(i), e}, Space::P, alpha_block(i, s, -s, std::cos(e)));
}

FlowStep alpha23_p(cd e) {
  cd s = std::sin(e);
  CMat M = alpha_block(2, s, -s, std::cos(e)) * alpha_block(3, s, -s, std::cos(e));
  return make("alpha23", {e}, Space::P, M);
}

FlowStep beta_nu(cd nu) {
  cd e1 = std::exp(nu), e2 = std::exp(2.0 * nu);
  CMat M = endo_P([&](const PV& P) {
    PV R = P;
    R.X.xi[0] *= e2;
    R.X.x[1] *= e1;
    R.X.x[2] *= e1;
    R.Y.xi[0] /= e2;
    R.Y.x[1] *= 1.0 / e1;
    R.Y.x[2] *= 1.0 / e1;
    R.xi /= e2;
    R.eta *= e2;
    return R;
  });
  return make("beta_nu", {nu}, Space::P, M);
}

FlowStep psi_sl2(const Eigen::Matrix2cd& A, double tol) {
  if (std::abs(A.determinant() - 1.0) > tol) throw std::domain_error("psi_sl2: det A != 1");
  Eigen::Matrix2cd B = A.inverse().transpose();
  CMat M = endo_P([&](const PV& P) {
    PV R = P;
    auto pair = [&](const Eigen::Matrix2cd& T, cd a, cd b, cd& oa, cd& ob) {
      oa = T(0, 0) * a + T(0, 1) * b;
      ob = T(1, 0) * a + T(1, 1) * b;
    };
    pair(A, P.X.xi[0], P.eta, R.X.xi[0], R.eta);
    pair(A, P.xi, P.Y.xi[0], R.xi, R.Y.xi[0]);
    pair(A, P.Y.xi[1], P.X.xi[2], R.Y.xi[1], R.X.xi[2]);
    pair(A, P.Y.xi[2], P.X.xi[1], R.Y.xi[2], R.X.xi[1]);
    for (int k = 0; k < 8; ++k) pair(B, P.X.x[0].c[k], P.Y.x[0].c[k], R.X.x[0].c[k], R.Y.x[0].c[k]);
    return R;
  });
  return make("psi_sl2", {A(0, 0), A(0, 1), A(1, 0), A(1, 1)}, Space::P, M);
}

FlowStep exp_e7(const E7El<cd>& F, const std::string& label) {
  return make("exp_e7:" + label, {}, Space::P, expm(to_cmat(to_endo(F))));
}

FlowStep exp_theta(const E8El<cd>& X, const std::string& label) {
  auto c = X.coords();
  std::vector<cd> params;
  for (int i = kE8P; i < 248; ++i) params.push_back(c[i]);
  return make(label, params, Space::E8, expm(to_cmat(ad_matrix(X))));
}

FlowStep lift_to_P(const FlowStep& s) {
  if (s.space != Space::J) throw std::invalid_argument("lift_to_P: step does not act on J");
  const CMat& G = jordan_gram();
  CMat tinv = G.inverse() * s.matrix.transpose().inverse() * G;
  CMat M = CMat::Zero(56, 56);
  M.block(0, 0, 27, 27) = s.matrix;
  M.block(27, 27, 27, 27) = tinv;
  M(54, 54) = 1;
  M(55, 55) = 1;
  return make(s.kind, s.params, Space::P, M);
}

// ---- exp Theta closed form ----

namespace {

// f(r) / r^k for f(r) = sum_j a_j exp(m_j r) vanishing to order k at 0.
cd exp_ratio(const std::vector<std::pair<double, double>>& terms, cd r, int k) {
  if (std::abs(r) > 0.5) {
    cd f = 0;
    for (auto [a, m] : terms) f += a * std::exp(m * r);
    return f / std::pow(r, k);
  }
  cd sum = 0, rp = 1;
  double fact = 1;
  for (int n = 0; n < k; ++n) fact *= (n + 1);
  for (int n = k; n < k + 40; ++n) {
    if (n > k) fact *= n;
    double c = 0;
    for (auto [a, m] : terms) c += a * std::pow(m, n);
    sum += c / fact * rp;
    rp *= r;
  }
  return sum;
}

}  // namespace

E8El<cd> exp_theta_closed_form(const PV& P1, cd r1, cd s1) {
  const E7El<cd> PP = fcross(P1, P1);
  const PV PPP = e7_act(PP, P1);
  const cd w = skew(P1, PPP);
  const cd c_phi = -0.5 * exp_ratio({{1, -2}, {-2, -1}, {1, 0}}, r1, 2);
  const cd c_p1 = 0.5 * s1 * exp_ratio({{-1, -2}, {-1, 1}, {1, -1}, {1, 0}}, r1, 2);
  const cd c_p3 = exp_ratio({{-1, -2}, {1, 1}, {3, -1}, {-3, 0}}, r1, 3) / 6.0;
  const cd c_q = exp_ratio({{1, -2}, {-1, -1}}, r1, 1);
  const cd c_r = 0.5 * s1 * exp_ratio({{1, 0}, {-1, -2}}, r1, 1);
  const cd c_s1 = -0.25 * s1 * s1 * exp_ratio({{1, -2}, {1, 2}, {-2, 0}}, r1, 2);
  const cd c_s2 = exp_ratio({{1, 2}, {1, -2}, {-4, 1}, {-4, -1}, {6, 0}}, r1, 4) / 96.0;
  E8El<cd> R;
  R.Phi = e7_lin(PP, c_phi, PP, cd(0));
  R.P = c_p1 * P1 + c_p3 * PPP;
  R.Q = c_q * P1;
  R.r = c_r;
  R.s = c_s1 + c_s2 * w;
  R.t = std::exp(-2.0 * r1);
  return R;
}

// ---- fixed subalgebra ----

const std::vector<E8El<cd>>& fixed_e8_basis() {
  static const std::vector<E8El<cd>> basis = [] {
    for (const auto& d : dimension_checks())
      if (d.id == "lemma5.1.2") {
        auto cert = solve(d.cs);
        std::vector<E8El<cd>> out;
        for (const auto& b : cert.basis) {
          std::vector<cd> v(248);
          for (int i = 0; i < 248; ++i) v[i] = to_cd(b[i]);
          out.push_back(E8El<cd>::from_coords(v));
        }
        return out;
      }
    throw std::logic_error("fixed subalgebra check not found");
  }();
  return basis;
}

double w_membership_residual(const E8El<cd>& R) {
  auto x = R.coords();
  double scale = std::max(1.0, dense_max_abs(x));
  double m = dense_max_abs(dense_sub(sigma4_on_e8(R).coords(), x)) / scale;
  for (const auto& D : so6_e8_generators()) {
    std::vector<cd> d;
    for (const auto& z : D.coords()) d.push_back(to_cd(z));
    m = std::max(m, dense_max_abs(e8_bracket_coords<cd>(d, x)) / scale);
  }
  m = std::max(m, r_cross_residual(R) / (scale * scale));
  return m;
}

// ---- samplers ----

cd random_cd(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> N(0.0, scale);
  double a = N(rng);
  double b = N(rng);
  return {a, b};
}

Jordan<cd> sphere_F1_basepoint(int k) { return J::F(1, OctD::basis(7 - k)); }

Jordan<cd> random_sphere_F1(int k, std::mt19937_64& rng) {
  OctD t;
  for (int i = 7 - k; i < 8; ++i) t.c[i] = random_cd(rng);
  cd n = std::sqrt(oct_norm(t));
  return J::F(1, (1.0 / n) * t);
}

CVecX sphere_minus_basepoint(MinusVariant v) {
  switch (v) {
    case MinusVariant::S2: return to_vec(J::E(2) - J::E(3));
    case MinusVariant::S3: return to_vec(I * (J::E(2) + J::E(3)));
    case MinusVariant::S4: return to_vec(PV(J{}, -I * J::E(1), 0, I));
    default: return to_vec(PV(J{}, J::E(1), 0, 1));
  }
}

std::string variant_name(MinusVariant v) {
  switch (v) {
    case MinusVariant::S2: return "S2minus";
    case MinusVariant::S3: return "S3minus";
    case MinusVariant::S4: return "S4minus";
    default: return "S5minus";
  }
}

CVecX random_sphere_minus(MinusVariant v, std::mt19937_64& rng) {
  J X;
  X.x[0] = random_C(rng, 1.0);
  if (v == MinusVariant::S2) {
    cd xi = random_cd(rng);
    X.xi[1] = xi;
    X.xi[2] = -xi;
    cd n = std::sqrt(xi * xi + oct_norm(X.x[0]));
    return to_vec((1.0 / n) * X);
  }
  X.xi[1] = random_cd(rng);
  X.xi[2] = random_cd(rng);
  if (v == MinusVariant::S3) {
    cd n = std::sqrt(-X.xi[1] * X.xi[2] + oct_norm(X.x[0]));
    return to_vec((1.0 / n) * X);
  }
  cd eta = random_cd(rng);
  PV P;
  P.X = X;
  P.eta = eta;
  P.Y.xi[0] = v == MinusVariant::S4 ? -eta : random_cd(rng);
  cd n = std::sqrt(-P.X.xi[1] * P.X.xi[2] + oct_norm(P.X.x[0]) + P.Y.xi[0] * P.eta);
  return to_vec((1.0 / n) * P);
}

E8El<cd> random_W(std::mt19937_64& rng, int factors, double scale) {
  const auto& B = fixed_e8_basis();
  CVecX v = to_vec(one_t<cd>());
  for (int f = 0; f < factors; ++f) {
    std::vector<cd> x(248, cd(0));
    for (const auto& b : B) {
      cd c = random_cd(rng, scale);
      auto bc = b.coords();
      for (int i = 0; i < 248; ++i) x[i] += c * bc[i];
    }
    v = expm(to_cmat(ad_matrix(E8El<cd>::from_coords(x)))) * v;
  }
  return e8_of(v);
}

// ---- F1 spheres ----

Witness reduce_sphere_F1(const Jordan<cd>& X, int k, const ReduceOptions& opt) {
  if (k < 2 || k > 5) throw std::invalid_argument("reduce_sphere_F1: k in 2..5");
  const int b0 = 7 - k;
  for (int i = 0; i < 27; ++i) {
    bool allowed = i >= 3 + b0 && i < 11;
    if (!allowed && std::abs(X.coord(i)) > 1e-9) throw std::invalid_argument("reduce_sphere_F1: X is not F1(t) with t in the sphere span");
  }
  if (std::abs(oct_norm(X.x[0]) - 1.0) > 1e-8) throw std::invalid_argument("reduce_sphere_F1: t conj(t) != 1");

  auto t = [](const Run& r, int i) { return cd(r.v(3 + i)); };
  auto rot = [](Run& r, int i, int j, cd s) { r.apply_if(g_rot(i, j, s), std::abs(s)); };

  std::function<void(Run&, int)> reduce = [&](Run& r, int b) {
    if (b == 5) {
      rot(r, 5, 6, angle(t(r, 6).real(), t(r, 5).real()));
      rot(r, 5, 7, angle(t(r, 7).real(), t(r, 5).real()));
      double r6 = t(r, 6).imag(), r7 = t(r, 7).imag();
      if (std::abs(r7) > kZero) rot(r, 6, 7, angle(r7, r6));
      cd t5 = t(r, 5);
      double rr6 = t(r, 6).imag();
      if (std::abs(t5.imag()) > 1e-6 || std::abs(t5) < kZero) throw Degenerate("t5 is not a nonzero real");
      double q = rr6 / t5.real();
      if (std::abs(q) >= 1) throw Degenerate("|r6 / t5| >= 1");
      rot(r, 5, 6, I * std::atanh(q));
      if (t(r, 5).real() < 0) r.apply(g_rot(5, 7, kPi));
      return;
    }
    rot(r, b, b + 1, angle(-t(r, b).real(), t(r, b + 1).real()));
    rot(r, b + 1, b + 2, angle(-t(r, b + 1).real(), t(r, b + 2).real()));
    double rb = t(r, b).imag(), rb1 = t(r, b + 1).imag();
    if (std::abs(rb) > kZero) rot(r, b, b + 1, angle(-rb, rb1));
    reduce(r, b + 1);
    r.apply(g_rot(b, b + 1, kPi / 2));
  };

  std::uniform_real_distribution<double> U(0, 2 * kPi);
  auto preamble = [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(b0, 7);
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    return g_rot(std::min(i, j), std::max(i, j), U(rng));
  };
  return with_retries(Space::J, to_vec(X), to_vec(sphere_F1_basepoint(k)), opt, [&](Run& r) { reduce(r, b0); },
                      preamble);
}

// ---- minus spheres ----

namespace {

// Sphere conditions on the J part: xi1 = 0, x2 = x3 = 0, x1 in span{1, e1}.
void check_J_shape(const J& X) {
  bool ok = std::abs(X.xi[0]) < 1e-9 && in_C(X.x[0], 1e-9);
  for (int i = 0; i < 8; ++i) ok = ok && std::abs(X.x[1].c[i]) < 1e-9 && std::abs(X.x[2].c[i]) < 1e-9;
  if (!ok) throw std::invalid_argument("point does not have the sphere shape");
}

// -xi2 xi3 + x conj(x) + eta1 eta, the quadratic form cutting out the spheres in P.
cd minus_form(const PV& P) { return -P.X.xi[1] * P.X.xi[2] + oct_norm(P.X.x[0]) + P.Y.xi[0] * P.eta; }

// Steps acting on J; `lift` embeds them into P when reducing inside P.
struct Ctx {
  Run& r;
  bool in_P;
  J X() const { return in_P ? pvec_of(r.v).X : jordan_of(r.v); }
  void apply(const FlowStep& s) { r.apply(in_P ? lift_to_P(s) : s); }
};

// S2minus: (xi, -xi, x) with xi^2 + x conj(x) = 1 to E2 - E3.
void reduce_S2(Ctx c) {
  J X = c.X();
  OctD x = X.x[0];
  cd xx = oct_norm(x);
  const double q = kPi / 4;
  OctD a;
  if (std::abs(x.c[0]) + std::abs(x.c[1]) < 1e-12) {
    a.c[0] = q;
  } else {
    if (std::abs(xx) < 1e-10) throw Degenerate("x is isotropic");
    cd k = q / std::sqrt(xx);
    a.c[0] = -k * x.c[1];
    a.c[1] = k * x.c[0];
  }
  bool at_base = std::abs(X.xi[1] - 1.0) < 1e-12 && std::abs(X.xi[2] + 1.0) < 1e-12 && std::abs(x.c[0]) + std::abs(x.c[1]) < 1e-12;
  if (at_base) return;
  c.apply(alpha_A1(a));
  OctD x1 = c.X().x[0];
  c.apply(alpha_A1(q * x1));
}

// S3minus: (S_-)^3 in J to i(E2 + E3).
void reduce_S3(Ctx c) {
  J X = c.X();
  if (std::abs(X.xi[1] - I) < 1e-12 && std::abs(X.xi[2] - I) < 1e-12 && X.x[0].c[0] == 0.0 && X.x[0].c[1] == 0.0) return;
  cd xx = oct_norm(X.x[0]);
  if (std::abs(xx) > 1e-10) {
    OctD t0 = (I * (kPi / 2) / std::sqrt(xx)) * (OctD::basis(1) * X.x[0]);
    c.apply(beta1(t0));
  } else {
    if (std::abs(X.xi[1]) < 1e-12) throw Degenerate("xi2 = 0 with isotropic x");
    c.apply(alpha23(-std::log(X.xi[1])));
  }
  reduce_S2(c);
  c.apply(alpha23(I * (kPi / 2)));
}

// S4minus: (S_-)^4 in P to i E~_{-1}.
void reduce_S4(Run& r) {
  auto eta = [&] { return cd(r.v(55)); };
  auto u = [&] { return (cd(r.v(1)) + cd(r.v(2))) / 2.0; };
  if (std::abs(eta().real()) > kZero) {
    double a = 0.5 * angle(2 * eta().real(), 2 * u().real());
    r.apply_if(alpha23_p(a), a);
  }
  if (std::abs(eta().imag()) > kZero) {
    double b = 0.5 * angle(2 * eta().imag(), 2 * u().imag());
    r.apply_if(alpha23_p(b), b);
  }
  if (std::abs(eta()) > kZero) {
    cd e;
    if (std::abs(u()) < kZero) {
      e = kPi / 4;
    } else {
      cd q = eta() / u();
      if (std::abs(q * q + 1.0) < 1e-10) throw Degenerate("eta = +-i (xi2 + xi3)/2");
      e = std::atan(q) / 2.0;
    }
    r.log.push_back("complex alpha23 step " + fmt(e) + " completes eta = 0");
    r.apply(alpha23_p(e));
  }
  reduce_S3(Ctx{r, true});
  r.apply(alpha23_p(-kPi / 4));
}

// S5minus: (S_-)^5 in P to E~_1.
void reduce_S5(Run& r) {
  auto P = [&] { return pvec_of(r.v); };
  const double z = 1e-10;
  auto case_i = [&] {
    PV p = P();
    cd nu = std::log(-p.Y.xi[0] / p.eta) / 4.0;
    r.apply(beta_nu(nu));
  };
  auto e7A = [](const J& A) { return E7El<cd>(E6El<cd>{}, A, J{}, cd(0)); };
  auto e7B = [](const J& B) { return E7El<cd>(E6El<cd>{}, J{}, B, cd(0)); };
  auto choose_t = [](cd w, bool minus) {
    // t with 2t + t^2 w (case iv) or 2t - t^2 w (case vii) away from zero
    double best = 1, bv = -1;
    for (double t : {1.0, 0.5, 2.0}) {
      double v = std::abs(2.0 * t + (minus ? -1.0 : 1.0) * t * t * w);
      if (v > bv) bv = v, best = t;
    }
    return best;
  };
  PV p = P();
  cd e1 = p.Y.xi[0], et = p.eta, x2 = p.X.xi[1], x3 = p.X.xi[2];
  bool n1 = std::abs(e1) > z, ne = std::abs(et) > z;
  if (n1 && ne) {
    r.log.push_back("case (i)");
    case_i();
  } else if (!n1 && ne) {
    if (std::abs(x2) > z) {
      r.log.push_back("case (ii)");
      r.apply(exp_e7(e7A(J::E(3)), "Phi(0,E3,0,0)"));
    } else if (std::abs(x3) > z) {
      r.log.push_back("case (iii)");
      r.apply(exp_e7(e7A(J::E(2)), "Phi(0,E2,0,0)"));
    } else {
      r.log.push_back("case (iv)");
      OctD x = p.X.x[0];
      if (std::abs(oct_norm(x)) < 1e-10) throw std::domain_error("isotropic x in case (iv) is unsupported");
      double t = choose_t(et, false);
      r.apply(exp_e7(e7A(t * J::F(1, x)), "Phi(0,tF1(x),0,0)"));
    }
    case_i();
  } else if (n1 && !ne) {
    if (std::abs(x2) > z) {
      r.log.push_back("case (v)");
      r.apply(exp_e7(e7B(J::E(2)), "Phi(0,0,E2,0)"));
    } else if (std::abs(x3) > z) {
      r.log.push_back("case (vi)");
      r.apply(exp_e7(e7B(J::E(3)), "Phi(0,0,E3,0)"));
    } else {
      r.log.push_back("case (vii)");
      OctD x = p.X.x[0];
      if (std::abs(oct_norm(x)) < 1e-10) throw std::domain_error("isotropic x in case (vii) is unsupported");
      double t = choose_t(e1, true);
      r.apply(exp_e7(e7B(t * J::F(1, x)), "Phi(0,0,tF1(x),0)"));
    }
    case_i();
  } else {
    r.log.push_back("case (viii)");
  }
  reduce_S4(r);
  r.apply(beta_nu(-I * (kPi / 4)));
}

}  // namespace

Witness reduce_sphere_minus(const CVecX& v, MinusVariant variant, const ReduceOptions& opt) {
  const bool onP = variant == MinusVariant::S4 || variant == MinusVariant::S5;
  if (v.size() != (onP ? 56 : 27)) throw std::invalid_argument("reduce_sphere_minus: wrong vector size");
  const double ctol = 1e-8;
  if (!onP) {
    J X = jordan_of(v);
    check_J_shape(X);
    if (variant == MinusVariant::S2) {
      if (std::abs(X.xi[1] + X.xi[2]) > ctol) throw std::invalid_argument("S2minus: xi3 != -xi2");
      if (std::abs(X.xi[1] * X.xi[1] + oct_norm(X.x[0]) - 1.0) > ctol) throw std::invalid_argument("S2minus: norm != 1");
    } else if (std::abs(-X.xi[1] * X.xi[2] + oct_norm(X.x[0]) - 1.0) > ctol) {
      throw std::invalid_argument("S3minus: norm != 1");
    }
  } else {
    PV P = pvec_of(v);
    check_J_shape(P.X);
    for (int i = 1; i < 27; ++i)
      if (std::abs(P.Y.coord(i)) > ctol) throw std::invalid_argument("Y must be a multiple of E1");
    if (std::abs(P.xi) > ctol) throw std::invalid_argument("xi must vanish");
    if (variant == MinusVariant::S4 && std::abs(P.Y.xi[0] + P.eta) > ctol) throw std::invalid_argument("S4minus: Y != -eta E1");
    if (std::abs(minus_form(P) - 1.0) > ctol) throw std::invalid_argument("sphere form != 1");
  }
  Space sp = onP ? Space::P : Space::J;
  auto attempt = [&](Run& r) {
    switch (variant) {
      case MinusVariant::S2: reduce_S2(Ctx{r, false}); break;
      case MinusVariant::S3: reduce_S3(Ctx{r, false}); break;
      case MinusVariant::S4: reduce_S4(r); break;
      case MinusVariant::S5: reduce_S5(r); break;
    }
  };
  auto preamble = [&](std::mt19937_64& rng) -> FlowStep {
    OctD b = random_C(rng, 0.5);
    FlowStep s = variant == MinusVariant::S2 ? alpha_A1(b) : beta1(b);
    return onP ? lift_to_P(s) : s;
  };
  return with_retries(sp, v, sphere_minus_basepoint(variant), opt, attempt, preamble);
}

// ---- W space ----

namespace {

E8El<cd> theta_el(const PV& P, const PV& Q, cd r, cd s, cd t) { return E8El<cd>(E7El<cd>{}, P, Q, r, s, t); }

// Basis of the sigma'_4-fixed, so(6)-commuting part of P (12 vectors).
std::vector<PV> fixed_P_basis() {
  std::vector<PV> out;
  for (int off : {0, 27})
    for (int i = 0; i < 5; ++i) out.push_back(PV::basis(off + i));
  out.push_back(PV::basis(54));
  out.push_back(PV::basis(55));
  return out;
}

}  // namespace

Witness reduce_W(const E8El<cd>& R, const ReduceOptions& opt) {
  double mres = w_membership_residual(R);
  if (mres > 1e-7) throw std::invalid_argument("reduce_W: R is not in the fixed W space (residual " + fmt(mres) + ")");
  const CVecX start = to_vec(R);
  const CVecX target = to_vec(one_t<cd>());
  auto attempt = [&](Run& run) {
    for (int iter = 0; iter < 8; ++iter) {
      E8El<cd> X = e8_of(run.v);
      double scale = std::max(1.0, max_abs(run.v));
      double z = 1e-9 * scale;
      if (std::abs(X.t) > z) {
        run.log.push_back("case (i)");
        cd r1 = -0.5 * std::log(X.t);
        cd cq = exp_ratio({{1, -2}, {-1, -1}}, r1, 1);
        cd cr = 0.5 * exp_ratio({{1, 0}, {-1, -2}}, r1, 1);
        if (std::abs(cq) < 1e-12 || std::abs(cr) < 1e-12) throw Degenerate("exp Theta coefficients vanish");
        PV P1 = (1.0 / cq) * X.Q;
        cd s1 = X.r / cr;
        run.apply(exp_theta(theta_el(-1.0 * P1, PV{}, -r1, -s1, 0), "exp_theta"));
        return;
      }
      if (std::abs(X.s) > z) {
        run.log.push_back("case (ii)");
        run.apply(exp_theta(theta_el(PV{}, PV{}, 0, kPi / 2, -kPi / 2), "lambda'"));
        continue;
      }
      if (std::abs(X.r) > z) {
        run.log.push_back("case (iii)");
        run.apply(exp_theta(theta_el(X.Q, PV{}, 0, 0, 0), "exp_theta"));
        continue;
      }
      const auto basis = fixed_P_basis();
      if (max_abs(to_vec(X.Q)) > z) {
        run.log.push_back("case (iv)");
        const PV* best = nullptr;
        double bv = 0;
        for (const auto& b : basis)
          if (double v = std::abs(skew(b, X.Q)); v > bv) bv = v, best = &b;
        if (!best || bv < z) throw Degenerate("no P1 with {P1, Q} != 0");
        run.apply(exp_theta(theta_el(*best, PV{}, 0, 0, 0), "exp_theta"));
        continue;
      }
      if (max_abs(to_vec(X.P)) > z) {
        run.log.push_back("case (v)");
        const PV* best = nullptr;
        double bv = 0;
        for (const auto& b : basis)
          if (double v = std::abs(skew(X.P, b)); v > bv) bv = v, best = &b;
        if (!best || bv < z) throw Degenerate("no Q1 with {P, Q1} != 0");
        run.apply(exp_theta(theta_el(PV{}, *best, 0, 0, 0), "exp_theta"));
        continue;
      }
      if (dense_max_abs(X.Phi.coords()) > z) {
        run.log.push_back("case (vi)");
        const PV* best = nullptr;
        double bv = 0;
        for (const auto& b : basis)
          if (double v = max_abs(to_vec(e7_act(X.Phi, b))); v > bv) bv = v, best = &b;
        if (!best || bv < z) throw Degenerate("no P1 with Phi P1 != 0");
        run.apply(exp_theta(theta_el(*best, PV{}, 0, 0, 0), "exp_theta"));
        continue;
      }
      throw Degenerate("R = 0");
    }
    throw Degenerate("case analysis did not terminate");
  };
  auto preamble = [&](std::mt19937_64& rng) {
    const auto& B = fixed_e8_basis();
    std::vector<cd> x(248, cd(0));
    for (const auto& b : B) {
      cd c = random_cd(rng, 0.2);
      auto bc = b.coords();
      for (int i = 0; i < 248; ++i) x[i] += c * bc[i];
    }
    return exp_theta(E8El<cd>::from_coords(x), "exp_theta");
  };
  return with_retries(Space::E8, start, target, opt, attempt, preamble);
}

}  // namespace e8
