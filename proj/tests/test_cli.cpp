#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crfe/mesh.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("crfe_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + CRFE_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::string> csv_row(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const Result det = run("verify --filter det_");
  CHECK(det.code == 0);
  const auto j = nlohmann::ordered_json::parse(det.out);
  CHECK(j["checks"].size() == 3);

  const Result neg = run("verify --negative-controls");
  CHECK(neg.code == 1);
  for (const auto& c : nlohmann::ordered_json::parse(neg.out)["checks"]) CHECK(c["status"] == "fail");

  const Result none = run("verify --filter no_such_check");
  CHECK(none.code == 0);
  CHECK(none.err.find("no check matches") != std::string::npos);
  CHECK(nlohmann::ordered_json::parse(none.out)["checks"].empty());

  const Result one = run("verify --gen two-simplex --dim 3 -k 3 --filter biduality_general");
  CHECK(one.code == 0);
  CHECK(nlohmann::ordered_json::parse(one.out)["checks"].size() == 2);
  CHECK(run("verify -k 2 --k-min 1").code == 2);
}

TEST_CASE("usage and input errors") {
  CHECK(run("--bogus").code == 2);
  CHECK(run("basis -k 0").code == 2);
  CHECK(run("basis --bc maybe").code == 2);
  CHECK(run("mesh --gen grid2d --dim 3").code == 2);
  CHECK(run("mesh --gen kuhn-cube --dim 7").code == 2);
  CHECK(run("mesh --gen cube").code == 2);
  CHECK(run("mesh --mesh \"" + (scratch() / "missing.txt").string() + "\"").code == 2);
  const fs::path bad = scratch() / "bad.mesh";
  std::ofstream(bad) << "dim 2\nvertices 3\n0 0\n1 1\n2 2\nsimplices 1\n0 1 2\n";
  const Result degenerate = run("mesh --mesh \"" + bad.string() + "\"");
  CHECK(degenerate.code == 2);
  CHECK(degenerate.err.find("invalid mesh") != std::string::npos);
  CHECK(run("interpolate -k 3 --input \"poly:x*\"").code == 2);
  CHECK(run("interpolate -k 3 --input nonsense").code == 2);

  // A rejected invocation writes no output file.
  const fs::path target = scratch() / "never.json";
  fs::remove(target);
  CHECK(run("basis -k 3 --bogus -o \"" + target.string() + "\"").code == 2);
  CHECK(run("dofs -k 2 -o \"" + target.string() + "\"").code == 3);
  CHECK(!fs::exists(target));
}

TEST_CASE("unsupported configurations") {
  CHECK(run("dofs -k 2").code == 3);
  CHECK(run("dofs --gen reference -k 1").code == 3);
  CHECK(run("dofs --method edges --dim 3 -k 1").code == 3);
  CHECK(run("dofs --gen reference --bc zero -k 3").code == 0);
}

TEST_CASE("basis output formats agree") {
  const Result js = run("basis --gen grid2d -k 3 --bc zero --format json");
  const Result cs = run("basis --gen grid2d -k 3 --bc zero --format csv");
  REQUIRE(js.code == 0);
  REQUIRE(cs.code == 0);
  const auto j = nlohmann::ordered_json::parse(js.out);
  std::istringstream lines(cs.out);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#') rows.push_back(csv_row(line));
  REQUIRE(!rows.empty());
  CHECK(rows.front() == std::vector<std::string>{"index", "tag", "support", "pieces"});
  rows.erase(rows.begin());
  REQUIRE(rows.size() == j["members"].size());
  CHECK(j["count"] == j["dim_formula"]);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& m = j["members"][i];
    CHECK(rows[i][0] == std::to_string(i));
    CHECK(rows[i][1] == m["tag"].get<std::string>());
    std::string support;
    for (const auto& K : m["support"]) support += (support.empty() ? "" : " ") + std::to_string(K.get<int>());
    CHECK(rows[i][2] == support);
    std::string pieces;
    for (const auto& [K, p] : m["pieces"].items()) pieces += (pieces.empty() ? "" : "; ") + K + ": " + p.get<std::string>();
    CHECK(rows[i][3] == pieces);
  }

  const Result even = run("basis -k 2");
  CHECK(even.code == 0);
  CHECK(nlohmann::ordered_json::parse(even.out).contains("dropped_simplex"));
}

TEST_CASE("mesh generation and files") {
  const Result r = run("mesh --gen kuhn-cube");
  REQUIRE(r.code == 0);
  const crfe::Mesh m = crfe::parse_mesh(r.out);
  CHECK(m.dim == 3);
  CHECK(m.vertices.size() == 8);
  CHECK(m.simplices.size() == 6);

  const fs::path file = scratch() / "kuhn.mesh";
  CHECK(run("mesh --gen kuhn-cube -o \"" + file.string() + "\"").code == 0);
  CHECK(slurp(file) == r.out);
  const Result again = run("basis -k 1 --mesh \"" + file.string() + "\"");
  CHECK(again.code == 0);
  CHECK(nlohmann::ordered_json::parse(again.out)["count"] == 18);

  const Result js = run("mesh --gen grid2d --n 3 --format json");
  CHECK(nlohmann::ordered_json::parse(js.out)["simplices"].size() == 18);
}

TEST_CASE("interpolation commands") {
  const Result p = run("interpolate -k 3 --input \"poly:x*y - 1/3*y^2\"");
  REQUIRE(p.code == 0);
  CHECK(nlohmann::ordered_json::parse(p.out)["reproduced"] == true);

  const Result b = run("interpolate --gen grid2d -k 3 --method edges --bc zero --input basis:0");
  CHECK(b.code == 0);

  const Result demo = run("interpolate --gen grid2d -k 3 --input demo:sin-product");
  REQUIRE(demo.code == 0);
  const auto j = nlohmann::ordered_json::parse(demo.out);
  CHECK(j.contains("points_per_direction"));
  CHECK(j["sampled_max_error"].get<double>() < 0.1);
}
