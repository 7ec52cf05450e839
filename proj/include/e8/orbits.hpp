#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "e8/e8_core.hpp"

namespace e8 {

using CMat = Eigen::MatrixXcd;
using CVecX = Eigen::VectorXcd;
using OctD = Octonion<cd>;

enum class Space { J, P, E8 };
int space_dim(Space s);
std::string space_name(Space s);

// One invertible map together with its closed-form matrix on `space`.
struct FlowStep {
  std::string kind;
  std::vector<cd> params;
  Space space = Space::J;
  CMat matrix;
  std::string describe() const;
};

struct Witness {
  Space space = Space::J;
  std::vector<FlowStep> steps;
  CVecX start, end, target;
  double residual = 0;
  std::vector<std::string> log;
};

CVecX apply_steps(const std::vector<FlowStep>& steps, const CVecX& v);
std::string witness_json(const Witness& w, int indent = 2);

CVecX to_vec(const Jordan<cd>& X);
CVecX to_vec(const PVec<cd>& P);
CVecX to_vec(const E8El<cd>& R);
Jordan<cd> jordan_of(const CVecX& v);
PVec<cd> pvec_of(const CVecX& v);
E8El<cd> e8_of(const CVecX& v);
CMat to_cmat(const LinearEndo<cd>& M);
CMat expm(const CMat& A);

// ---- closed-form flows ----

// exp(s G_ij) on J.
FlowStep g_rot(int i, int j, cd s);
// exp A1~(a) on J.
FlowStep alpha_A1(const OctD& a);
// exp F1(t)~ on J, t in span{1, e1}.
FlowStep beta1(const OctD& t);
// exp c(E2 - E3)~ on J.
FlowStep alpha23(cd c);
// X -> [[xi1, x3 th, conj(th x2)], ., [th x2, th conj(x1) th, xi3]], th conj(th) = 1.
FlowStep phi_theta(const OctD& theta, double tol = 1e-9);
// exp Phi(0, a E_i, -conj(a) E_i, 0) on P with a in C (compact parametrisation).
FlowStep alpha_i(int i, cd a);
// exp Phi(0, e E_i, -e E_i, 0) on P (complex-linear parametrisation).
FlowStep alpha_i_lin(int i, cd e);
// alpha_2(e) alpha_3(e) on P.
FlowStep alpha23_p(cd e);
// exp Phi((2/3) nu (2E1 - E2 - E3)~, 0, 0, -2 nu) on P.
FlowStep beta_nu(cd nu);
// psi(A) on P, det A = 1.
FlowStep psi_sl2(const Eigen::Matrix2cd& A, double tol = 1e-9);
// exp Phi on P for an arbitrary e7 element.
FlowStep exp_e7(const E7El<cd>& F, const std::string& label);
// exp(ad X) on e8.
FlowStep exp_theta(const E8El<cd>& X, const std::string& label = "exp_theta");
// diag(beta, tbeta^{-1}, 1, 1) on P for an e6 step on J.
FlowStep lift_to_P(const FlowStep& s);

// ---- generators used by the oracles ----

CMat gen_g_rot(int i, int j);
CMat gen_alpha_A1(const OctD& a);
CMat gen_beta1(const OctD& t);
CMat gen_alpha23();
CMat gen_phi_theta();  // derivative of phi(cos s + e1 sin s) at s = 0
CMat gen_alpha_i(int i, cd a);
CMat gen_alpha23_p(cd e);
CMat gen_beta_nu(cd nu);
CMat gen_psi(const Eigen::Matrix2cd& M);

// (exp Theta(0, P1, 0, r1, s1, 0)) 1_- from the closed form, limits at r1 = 0
// taken analytically.
E8El<cd> exp_theta_closed_form(const PVec<cd>& P1, cd r1, cd s1);

// ---- reductions ----

enum class MinusVariant { S2, S3, S4, S5 };
std::string variant_name(MinusVariant v);

struct ReduceOptions {
  double tol = 1e-9;
  uint64_t seed = 0;
  int max_retries = 5;
};

// X = F1(t), t in span{e_b, ..., e7} with b = 7 - k, sum t_i^2 = 1; ends at F1(e_b).
Witness reduce_sphere_F1(const Jordan<cd>& X, int k, const ReduceOptions& opt = {});
Jordan<cd> sphere_F1_basepoint(int k);

// S2, S3 act on J; S4, S5 on P.
Witness reduce_sphere_minus(const CVecX& v, MinusVariant variant, const ReduceOptions& opt = {});
CVecX sphere_minus_basepoint(MinusVariant variant);

// R in W, sigma'_4-fixed and so(6)-commuting; ends at 1_-.
Witness reduce_W(const E8El<cd>& R, const ReduceOptions& opt = {});
// Max residual of the W-membership tests (sigma'_4, so(6), R x R = 0).
double w_membership_residual(const E8El<cd>& R);

// Basis of the sigma'_4-fixed, so(6)-commuting subalgebra of e8 (45).
const std::vector<E8El<cd>>& fixed_e8_basis();

// ---- samplers ----

Jordan<cd> random_sphere_F1(int k, std::mt19937_64& rng);
CVecX random_sphere_minus(MinusVariant variant, std::mt19937_64& rng);
// exp(ad X_m) ... exp(ad X_1) 1_- with X_i random in the fixed subalgebra.
E8El<cd> random_W(std::mt19937_64& rng, int factors = 2, double scale = 0.4);
cd random_cd(std::mt19937_64& rng, double scale = 1.0);

}  // namespace e8
