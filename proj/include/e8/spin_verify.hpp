#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "e8/e8_core.hpp"

namespace e8 {

// The 45 elements R_ij (0 <= i < j <= 9) spanning the so(10) factor of the
// sigma'_4-fixed, so(6)-commuting part of e8.
struct So10Basis {
  std::array<std::array<E8El<Cq>, 10>, 10> R;
  const E8El<Cq>& at(int i, int j) const { return R[i][j]; }
};

const So10Basis& build_so10();

// A rescaled copy of the printed basis that satisfies every identity and
// membership condition. Each entry records one amendment for review.
struct So10Correction {
  int i, j;
  Cq factor;
  std::string reason;
};
const std::vector<So10Correction>& so10_corrections();
const So10Basis& build_so10_corrected();

// Image of [G_ij, G_kl] in terms of the R basis: coefficient list over (m,n), m<n.
std::vector<std::pair<std::pair<int, int>, int>> so10_structure(int i, int j, int k, int l);

struct So10Failure {
  int i, j, k, l;
  std::string expected;
  std::string actual;
  std::string suggestion;  // nearest single-term correction, if any
};

struct So10Report {
  int checked = 0;
  int passed = 0;
  std::vector<So10Failure> failures;
};

So10Report so10_check(const So10Basis& B);

// Membership failures of individual R_ij: sigma'_4-fixedness, commuting with
// every so(6) generator, compact-form membership. Empty when all hold.
std::vector<std::string> so10_membership_failures(const So10Basis& B);

// Generators R_D = (Phi(G_ij), 0, ...) for 2 <= i < j <= 7.
std::vector<E8El<Cq>> so6_e8_generators();

// Triality triple (s1, s2, s3) acting on x1, x2, x3.
struct TrialityTriple {
  Mat8 s1, s2, s3;
};

TrialityTriple remark_triple();

// Checks (s1 x)(s2 y) = conj(s3 conj(xy)) on all 64 basis pairs. On failure
// the offending pair is returned.
std::optional<std::pair<int, int>> triality_failure(const TrialityTriple& t);

// Checks that X -> (xi, s1 x1, s2 x2, s3 x3) agrees with sigma4_map on the 27
// basis vectors; returns the first mismatching index.
std::optional<int> triple_sigma4_failure(const TrialityTriple& t);

// Candidates 1, sigma, sigma'_4, sigma sigma'_4 and exp(pi G_23) on the
// Jordan algebra; the kernel is the subset lying in the stabiliser of
// E1, E2, E3, F1(e0), F1(e1) and acting trivially on span F1(e2..e7).
struct KernelProbe {
  std::vector<std::string> candidates;
  std::vector<std::string> kernel;
};
KernelProbe spin6_kernel_probe();

// The four pairs (g, h) of the Z4 kernel; true where g h = 1 on e8.
std::vector<std::pair<std::string, bool>> z4_pair_compositions();

// Checks g ad(R_ij) = ad(R_ij) g on e8 for g in {1, sigma, sigma'_4,
// sigma sigma'_4}; returns one message per failing (g, R_ij).
std::vector<std::string> center_commutation_failures(const So10Basis& B);

Mat8 delta1();
mpq_class mat8_det(const Mat8& m);
bool mat8_orthogonal(const Mat8& m);
Mat8 mat8_mul(const Mat8& a, const Mat8& b);

}  // namespace e8
