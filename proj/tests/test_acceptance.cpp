// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "crfe/verifier.hpp"

using namespace crfe;

namespace {

struct Outcome {
  std::vector<Check> checks;
  std::vector<std::string> problems;
};

void append(Outcome& o, const Report& r) {
  for (const auto& c : r.checks) o.checks.push_back(c);
}

// Runs the suite restricted to one check name and requires the expected number of results.
void expect(Outcome& o, const std::vector<NamedComplex>& meshes, int k_min, int k_max, const std::string& name,
            std::size_t count) {
  SuiteOptions opt;
  opt.k_min = k_min;
  opt.k_max = k_max;
  opt.filter = name;
  const Report r = run_suite(meshes, opt);
  std::size_t n = 0;
  for (const auto& c : r.checks) n += c.name == name;
  if (n != count)
    o.problems.push_back(name + ": expected " + std::to_string(count) + " results, got " + std::to_string(n));
  append(o, r);
}

std::vector<NamedComplex> meshes_of(std::initializer_list<std::pair<MeshGenerator, int>> list) {
  std::vector<NamedComplex> out;
  for (const auto& [g, d] : list) out.push_back(make_named(g, d));
  return out;
}

constexpr auto Two = MeshGenerator::TwoSimplex;
constexpr auto Grid = MeshGenerator::Grid2d;
constexpr auto Kuhn = MeshGenerator::KuhnCube;

Outcome moments() {
  Outcome o;
  const auto meshes = meshes_of({{Two, 2}, {Grid, 2}, {Two, 3}, {Kuhn, 3}, {Two, 4}});
  expect(o, meshes, 1, 4, "moment_conditions", meshes.size() * 4 * 2);
  return o;
}

Outcome vertex_values() {
  Outcome o;
  const auto meshes = meshes_of({{Two, 2}, {Two, 3}, {Two, 4}});
  expect(o, meshes, 1, 5, "vertex_values", meshes.size() * 5);
  expect(o, {}, 1, 1, "tech_identities", 1);
  return o;
}

Outcome nc_k1() {
  Outcome o;
  const auto meshes = meshes_of({{Two, 2}, {Grid, 2}, {Two, 3}, {Kuhn, 3}, {Two, 4}});
  expect(o, meshes, 1, 1, "nc_k1_closed_form", meshes.size());
  return o;
}

Outcome determinants() {
  Outcome o;
  for (const char* name : {"det_Q_formula", "det_R_formula", "det_Q_regular"}) expect(o, {}, 1, 1, name, 1);
  return o;
}

Outcome direct_sums() {
  Outcome o;
  const auto meshes = default_meshes();
  expect(o, meshes, 1, 4, "direct_sums", meshes.size() * 4 * 2);
  expect(o, meshes, 1, 4, "overcomplete_dependency", meshes.size() * 2);
  expect(o, meshes, 1, 4, "containment", meshes.size() * 4 * 2);
  return o;
}

Outcome biduality() {
  Outcome o;
  const auto multi = meshes_of({{Two, 2}, {Grid, 2}, {Two, 3}, {Kuhn, 3}});
  expect(o, multi, 1, 3, "biduality_general", multi.size() * 2 * 2);
  const auto planar = meshes_of({{Two, 2}, {Grid, 2}});
  expect(o, planar, 1, 5, "biduality_edges_2d", planar.size() * 3);
  const auto means = meshes_of({{Two, 2}, {Two, 3}, {Two, 4}});
  expect(o, means, 1, 1, "biduality_facet_means", means.size() * 2);
  return o;
}

Outcome interpolation() {
  Outcome o;
  const auto multi = meshes_of({{Two, 2}, {Grid, 2}, {Two, 3}, {Kuhn, 3}});
  expect(o, multi, 1, 3, "interpolation_projection", multi.size() * 2 * 2);
  const auto planar = meshes_of({{Two, 2}, {Grid, 2}});
  expect(o, planar, 1, 3, "approx_op_2d_projection", planar.size() * 2);
  return o;
}

Outcome psi() {
  Outcome o;
  const auto meshes = default_meshes();
  expect(o, meshes, 1, 4, "psi_z_properties", meshes.size() * 4);
  expect(o, meshes, 1, 4, "psi_big_continuity", meshes.size() * 2);
  return o;
}

Outcome foundations() {
  Outcome o;
  for (const char* name : {"jacobi_orthogonality", "jacobi_endpoints", "jacobi_explicit_sum",
                           "simplex_orthopoly_orthogonality", "simplex_orthopoly_examples",
                           "edge_gamma_normalization", "g_x1_identity"})
    expect(o, {}, 1, 1, name, 1);
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + CRFE_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome negative_controls() {
  Outcome o;
  const Report neg = run_negative_controls();
  o.checks = neg.checks;
  std::set<std::string> covered;
  for (const auto& c : neg.checks) {
    covered.insert(c.name);
    if (c.status != CheckStatus::Fail || !c.witness)
      o.problems.push_back("negative control '" + c.name + "' did not fail with a witness");
  }
  SuiteOptions opt;
  opt.k_max = 3;
  for (const auto& c : run_suite(default_meshes(), opt).checks)
    if (!covered.count(c.name)) {
      o.problems.push_back("check family '" + c.name + "' has no negative control");
      covered.insert(c.name);
    }
  const std::pair<const char*, int> cli[] = {{"verify --filter det_", 0},
                                             {"verify --negative-controls", 1},
                                             {"verify --filter no_such_check", 0},
                                             {"--no-such-flag", 2},
                                             {"basis -k 0", 2},
                                             {"mesh --gen cube", 2},
                                             {"dofs -k 2", 3},
                                             {"dofs --gen reference -k 1", 3}};
  for (const auto& [args, want] : cli) {
    const int got = run_cli(args);
    if (got != want)
      o.problems.push_back(std::string("crfe ") + args + ": exit " + std::to_string(got) + ", expected " +
                           std::to_string(want));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "interior jump moments vanish", 60, moments},
      {2, "vertex values and technical identities", 10, vertex_values},
      {3, "k = 1 closed forms", 5, nc_k1},
      {4, "determinant identities", 5, determinants},
      {5, "direct sums and dimension count", 300, direct_sums},
      {6, "biduality of the functionals", 300, biduality},
      {7, "interpolation is a projection", 120, interpolation},
      {8, "psi functions", 60, psi},
      {9, "orthogonal polynomial foundations", 60, foundations},
      {10, "negative controls and exit codes", 120, negative_controls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Check* bad = nullptr;
    for (const auto& ch : o.checks)
      if (ch.status != CheckStatus::Pass && !bad) bad = &ch;
    // Negative controls are expected to fail; their outcome is in problems.
    if (c.id == 10) bad = nullptr;
    if (secs > c.limit_s)
      o.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    const bool ok = !bad && o.problems.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << o.checks.size()
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0)
              << c.limit_s << " s)\n";
    if (bad) std::cout << "       first failing check: " << to_json(*bad).dump() << "\n";
    for (const auto& p : o.problems) std::cout << "       " << p << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
