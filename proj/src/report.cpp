#include "crfe/errors.hpp"
#include "crfe/verifier.hpp"

#include <algorithm>

namespace crfe {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_check_status(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ParseError("unknown check status '" + std::string(s) + "'");
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["params"] = c.params;
  j["status"] = to_string(c.status);
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["version"] = r.version;
  j["mesh"] = r.mesh;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Check check_from_json(const Json& j) {
  try {
    Check c;
    c.name = j.at("name").get<std::string>();
    c.params = j.at("params");
    c.status = parse_check_status(j.at("status").get<std::string>());
    if (j.contains("witness")) c.witness = j.at("witness");
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed check: ") + e.what());
  }
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.version = j.at("version").get<std::string>();
    r.mesh = j.at("mesh").get<std::string>();
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

Json rational_json(const Rational& q) { return to_string(q); }

Json tag_json(const BasisTag& t) { return t.to_string(); }

void CheckRecorder::fail(Json witness) {
  if (!witness_) {
    witness_ = std::move(witness);
  }
  ++failures_;
}

void CheckRecorder::skip(std::string reason) { skip_reason_ = std::move(reason); }

Check CheckRecorder::finish() const {
  Check c;
  c.name = name_;
  c.params = params_;
  if (failures_ > 0) {
    c.status = CheckStatus::Fail;
    Json w = *witness_;
    w["failures"] = failures_;
    c.witness = std::move(w);
  } else if (skip_reason_) {
    c.status = CheckStatus::Skipped;
    c.witness = Json{{"reason", *skip_reason_}};
  } else {
    c.status = CheckStatus::Pass;
  }
  return c;
}

NamedComplex make_named(MeshGenerator g, int dim, int n) {
  std::string id = generator_name(g) + "-d" + std::to_string(dim);
  if (g == MeshGenerator::Grid2d) id = generator_name(g) + "-n" + std::to_string(n);
  return NamedComplex{id, SimplicialComplex(generate_mesh(g, dim, n))};
}

Json mesh_params(const NamedComplex& m, int k) {
  Json p;
  p["mesh"] = m.id;
  p["d"] = m.cx.dim();
  p["k"] = k;
  return p;
}

}  // namespace crfe
