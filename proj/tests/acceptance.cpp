#include <CLI11.hpp>
#include <cstdio>
#include <map>
#include <set>

#include "e8/verify.hpp"

namespace {

struct Criterion {
  int n;
  std::string title;
  std::vector<std::string> suites;
  std::vector<std::string> prefixes;
};

const std::vector<Criterion> kCriteria = {
    {1, "dimension counts", {"dims"}, {"dims."}},
    {2, "so(10) commutators and memberships", {"spin10"}, {"spin10.bracket.", "spin10.membership."}},
    {3, "order-4 automorphism", {"identities"}, {"identities.sigma4."}},
    {4, "kappa and mu", {"identities"}, {"identities.kappa.", "identities.mu.", "identities.kappa1."}},
    {5, "W-space", {"wspace"}, {"wspace.one_t_cross", "wspace.killing_one_t_one_s", "wspace.lemma53_agreement"}},
    {6, "Jacobi and Killing invariance", {"identities"}, {"identities.jacobi.", "identities.killing."}},
    {7, "flow oracles", {"orbits"}, {"orbits.flow."}},
    {8, "orbit reductions", {"orbits", "wspace"}, {"orbits.sphere.", "wspace.roundtrip"}},
    {9, "kernel and centre", {"spin10"}, {"spin10.kernel_spin6", "spin10.z4_pair.", "spin10.center"}},
    {10, "triality", {"identities"}, {"identities.triality.identity", "identities.triality.sigma4"}},
};

bool matches(const std::string& id, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  int only = 0;
  uint64_t seed = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--seed", seed, "seed for random draws");
  CLI11_PARSE(app, argc, argv);

  std::set<std::string> suites;
  for (const auto& c : kCriteria)
    if (only == 0 || c.n == only) suites.insert(c.suites.begin(), c.suites.end());

  std::vector<e8::CheckResult> checks;
  for (const auto& s : suites) {
    e8::RunConfig cfg;
    cfg.suite = s;
    cfg.seed = seed;
    cfg.tol = 1e-9;
    auto rep = e8::run(cfg);
    checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
  }

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.n != only) continue;
    int total = 0, passed = 0;
    std::string first_fail;
    for (const auto& ch : checks) {
      if (!matches(ch.id, c.prefixes)) continue;
      ++total;
      if (ch.status == "pass")
        ++passed;
      else if (first_fail.empty())
        first_fail = ch.id + " (expected " + ch.expected + ", got " + ch.actual + ")";
    }
    bool ok = total > 0 && passed == total;
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %d, %s: %d/%d checks pass%s%s\n", ok ? "PASS" : "FAIL", c.n, c.title.c_str(), passed, total,
                first_fail.empty() ? "" : "; first failure: ", first_fail.c_str());
  }
  return all_ok ? 0 : 1;
}
