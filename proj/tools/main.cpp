#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "crfe/basis.hpp"
#include "crfe/complex.hpp"
#include "crfe/dofs.hpp"
#include "crfe/errors.hpp"
#include "crfe/interpolation.hpp"
#include "crfe/quadrature.hpp"
#include "crfe/verifier.hpp"
#include "poly_parser.hpp"

using namespace crfe;

namespace {

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2, kUnsupported = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string mesh_file;
  std::string gen = "two-simplex";
  int dim = 2;
  int n = 2;
  int k = 1;
  int k_min = 1;
  int k_max = 3;
  std::string bc = "full";
  // Empty: plain text for meshes, json otherwise.
  std::string format;
  std::string out;
  std::string filter;
  int quad_order = 0;
  std::string method = "dofs";
  std::string input;
  std::string dof_mode = "corrected";
  bool negative_controls = false;
};

// Mesh source: an explicit file wins over a generator.
NamedComplex load_complex(const Options& o) {
  if (!o.mesh_file.empty()) return NamedComplex{o.mesh_file, SimplicialComplex(load_mesh_file(o.mesh_file))};
  return make_named(parse_generator(o.gen), o.dim, o.n);
}

void validate(const Options& o, bool uses_k) {
  if (o.mesh_file.empty() && o.gen == "grid2d" && o.dim != 2) throw UsageError("grid2d is two-dimensional");
  if (o.mesh_file.empty() && o.gen == "kuhn-cube" && o.dim > 5) throw UsageError("kuhn-cube supports --dim up to 5");
  if (o.dim < 2 || o.dim > kMaxVars - 1)
    throw UsageError("--dim must lie in [2, " + std::to_string(kMaxVars - 1) + "]");
  if (uses_k && o.k < 1) throw UsageError("--order must be at least 1");
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.quad_order < 0) throw UsageError("--quad-order must be positive");
  try {
    if (o.mesh_file.empty()) parse_generator(o.gen);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

std::string cmd_mesh(const Options& o) {
  const NamedComplex m = load_complex(o);
  const Mesh& mesh = m.cx.mesh();
  if (o.format == "plain") return format_mesh(mesh);
  if (o.format == "csv") {
    std::ostringstream s;
    s << "kind,index,values\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      std::string v;
      for (std::size_t j = 0; j < mesh.vertices[i].size(); ++j) v += (j ? " " : "") + to_string(mesh.vertices[i][j]);
      s << "vertex," << i << "," << v << "\n";
    }
    for (std::size_t i = 0; i < mesh.simplices.size(); ++i) s << "simplex," << i << "," << join_ints(mesh.simplices[i]) << "\n";
    return s.str();
  }
  Json j;
  j["mesh"] = m.id;
  j["dim"] = mesh.dim;
  j["vertices"] = Json::array();
  for (const auto& p : mesh.vertices) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(to_string(c));
    j["vertices"].push_back(row);
  }
  j["simplices"] = mesh.simplices;
  return j.dump(2) + "\n";
}

std::vector<std::pair<int, std::string>> pieces_of(const FeFunction& f) {
  std::vector<std::pair<int, std::string>> out;
  const FeFunction c = f.canonical();
  for (const auto& [K, p] : c.pieces()) out.emplace_back(K, p.to_string());
  return out;
}

std::string cmd_basis(const Options& o) {
  const NamedComplex m = load_complex(o);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  const CrBasis basis = build_basis(m.cx, o.k, bc);
  std::string note;
  if (basis.dropped_simplex)
    note = "even k: the function of simplex " + std::to_string(*basis.dropped_simplex) +
           " is left out, it lies in the span of the others";

  if (o.format == "json") {
    Json j;
    j["mesh"] = m.id;
    j["dim"] = m.cx.dim();
    j["k"] = o.k;
    j["bc"] = to_string(bc);
    j["count"] = basis.members.size();
    j["dim_formula"] = dim_formula(m.cx, o.k, bc);
    if (basis.dropped_simplex) {
      j["dropped_simplex"] = *basis.dropped_simplex;
      j["note"] = note;
    }
    j["variables"] = "l0..ld are the barycentric coordinates of each simplex in ascending vertex order; l0 is eliminated";
    j["members"] = Json::array();
    for (std::size_t i = 0; i < basis.members.size(); ++i) {
      const auto& mem = basis.members[i];
      Json row;
      row["index"] = i;
      row["tag"] = mem.tag.to_string();
      Json pieces = Json::object();
      std::vector<int> support;
      for (const auto& [K, p] : pieces_of(mem.function)) {
        support.push_back(K);
        pieces[std::to_string(K)] = p;
      }
      row["support"] = support;
      row["pieces"] = pieces;
      j["members"].push_back(row);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream s;
  const bool csv = o.format == "csv";
  s << "# mesh=" << m.id << " d=" << m.cx.dim() << " k=" << o.k << " bc=" << to_string(bc)
    << " count=" << basis.members.size() << "\n";
  if (!note.empty()) s << "# " << note << "\n";
  if (csv) s << "index,tag,support,pieces\n";
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    const auto& mem = basis.members[i];
    std::vector<int> support;
    std::string pieces;
    for (const auto& [K, p] : pieces_of(mem.function)) {
      support.push_back(K);
      pieces += (pieces.empty() ? "" : "; ") + std::to_string(K) + ": " + p;
    }
    if (csv)
      s << i << "," << csv_field(mem.tag.to_string()) << "," << join_ints(support) << "," << csv_field(pieces) << "\n";
    else
      s << i << "  " << mem.tag.to_string() << "  on {" << join_ints(support, ",") << "}  " << pieces << "\n";
  }
  return s.str();
}

Json functional_json(const Functional& f) {
  Json j;
  j["tag"] = f.tag.to_string();
  j["terms"] = Json::array();
  for (const auto& t : f.terms) {
    Json term;
    term["carrier"] = t.kind == CarrierKind::Simplex ? "simplex" : "facet";
    term["id"] = t.carrier;
    term["scale"] = to_string(t.scale);
    term["weight"] = bary_canonical(t.weight).to_string();
    term["weight_degree"] = bary_degree(t.weight);
    j["terms"].push_back(term);
  }
  return j;
}

BoundaryDofMode parse_dof_mode(const std::string& s) {
  return s == "raw" ? BoundaryDofMode::Raw : BoundaryDofMode::Corrected;
}

std::vector<Functional> edge_functionals(const SimplicialComplex& cx, int k, std::vector<BasisMember>* members) {
  if (cx.dim() != 2) throw UnsupportedError("--method edges needs a two-dimensional mesh");
  std::vector<Functional> dofs;
  for (const Face& E : cx.faces(1)) {
    if (E.on_boundary) continue;
    for (auto& f : edge_dofs_2d(cx, E.id, k)) dofs.push_back(std::move(f));
    if (members)
      for (auto& b : edge_basis_2d(cx, E.id, k)) members->push_back(std::move(b));
  }
  return dofs;
}

std::string cmd_dofs(const Options& o) {
  const NamedComplex m = load_complex(o);
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  std::vector<Functional> dofs;
  if (o.method == "edges") {
    dofs = edge_functionals(m.cx, o.k, nullptr);
  } else {
    const CrBasis basis = build_basis(m.cx, o.k, bc);
    dofs = assemble_dofs(m.cx, basis, Mark(m.cx), parse_dof_mode(o.dof_mode)).functionals;
  }
  int wdeg = -1;
  for (const auto& f : dofs)
    for (const auto& t : f.terms)
      if (t.kind == CarrierKind::Facet && m.cx.face(m.cx.dim() - 1, t.carrier).on_boundary)
        wdeg = std::max(wdeg, bary_degree(t.weight));

  if (o.format == "json") {
    Json j;
    j["mesh"] = m.id;
    j["dim"] = m.cx.dim();
    j["k"] = o.k;
    j["bc"] = to_string(bc);
    j["method"] = o.method;
    if (o.method != "edges") j["mode"] = o.dof_mode;
    j["count"] = dofs.size();
    if (wdeg >= 0) j["boundary_weight_max_degree"] = wdeg;
    j["functionals"] = Json::array();
    for (const auto& f : dofs) j["functionals"].push_back(functional_json(f));
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  const bool csv = o.format == "csv";
  s << "# mesh=" << m.id << " d=" << m.cx.dim() << " k=" << o.k << " bc=" << to_string(bc) << " count=" << dofs.size();
  if (wdeg >= 0) s << " boundary_weight_max_degree=" << wdeg;
  s << "\n";
  if (csv) s << "index,tag,term,carrier,id,scale,weight\n";
  for (std::size_t i = 0; i < dofs.size(); ++i)
    for (std::size_t t = 0; t < dofs[i].terms.size(); ++t) {
      const auto& term = dofs[i].terms[t];
      const std::string carrier = term.kind == CarrierKind::Simplex ? "simplex" : "facet";
      const std::string w = bary_canonical(term.weight).to_string();
      if (csv)
        s << i << "," << csv_field(dofs[i].tag.to_string()) << "," << t << "," << carrier << "," << term.carrier << ","
          << to_string(term.scale) << "," << csv_field(w) << "\n";
      else
        s << i << "  " << dofs[i].tag.to_string() << "  " << (t ? "+ " : "") << to_string(term.scale) << " * "
          << carrier << " " << term.carrier << "  weight " << w << "\n";
    }
  return s.str();
}

FeFunction from_cartesian_everywhere(const SimplicialComplex& cx, const Polynomial& p) {
  FeFunction u;
  for (int K = 0; K < cx.num_simplices(); ++K) u.set(K, cx.from_cartesian(K, p));
  return u;
}

std::string render_coefficients(const Options& o, const Json& j) {
  if (o.format == "json") return j.dump(2) + "\n";
  std::ostringstream s;
  const bool csv = o.format == "csv";
  s << "# mesh=" << j["mesh"].get<std::string>() << " k=" << j["k"].get<int>() << " input=" << j["input"].get<std::string>();
  for (const char* key : {"reproduced", "sampled_max_error", "points_per_direction"})
    if (j.contains(key)) s << " " << key << "=" << j[key].dump();
  s << "\n";
  if (csv) s << "index,tag,coefficient\n";
  int i = 0;
  for (const auto& row : j["coefficients"]) {
    const std::string c = row["value"].is_string() ? row["value"].get<std::string>() : row["value"].dump();
    if (csv)
      s << i << "," << csv_field(row["tag"].get<std::string>()) << "," << c << "\n";
    else
      s << i << "  " << row["tag"].get<std::string>() << "  " << c << "\n";
    ++i;
  }
  return s.str();
}

std::string cmd_interpolate(const Options& o) {
  const NamedComplex m = load_complex(o);
  const auto& cx = m.cx;
  const BoundaryCondition bc = parse_boundary_condition(o.bc);
  const bool edges = o.method == "edges";
  Json j;
  j["mesh"] = m.id;
  j["k"] = o.k;
  j["bc"] = to_string(bc);
  j["method"] = o.method;
  j["input"] = o.input;

  std::vector<BasisMember> members;
  std::vector<Functional> dofs;
  if (edges) {
    dofs = edge_functionals(cx, o.k, &members);
  } else {
    CrBasis basis = build_basis(cx, o.k, bc);
    dofs = assemble_dofs(cx, basis, Mark(cx), parse_dof_mode(o.dof_mode)).functionals;
    members = std::move(basis.members);
  }

  const auto colon = o.input.find(':');
  const std::string kind = o.input.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : o.input.substr(colon + 1);

  if (kind == "demo") {
    if (arg != "sin-product") throw UsageError("unknown demo function '" + arg + "'");
    if (edges) throw UnsupportedError("the quadrature path uses the general functionals");
    const Callable u = [](std::span<const double> x) {
      double r = 1;
      for (double xi : x) r *= std::sin(std::numbers::pi * xi);
      return r;
    };
    const int points = o.quad_order > 0 ? o.quad_order : default_quadrature_points(o.k, cx.dim());
    DofSet set{o.k, bc, parse_dof_mode(o.dof_mode), dofs};
    const FloatInterpolant fi = interpolate_callable(cx, set, u, points);
    CrBasis basis{o.k, bc, members, std::nullopt};
    j["points_per_direction"] = points;
    j["sampled_max_error"] = sampled_max_error(cx, basis, fi.coefficients, u);
    j["coefficients"] = Json::array();
    for (std::size_t i = 0; i < members.size(); ++i)
      j["coefficients"].push_back({{"tag", members[i].tag.to_string()}, {"value", fi.coefficients[i]}});
    return render_coefficients(o, j);
  }

  FeFunction u;
  if (kind == "poly") {
    u = from_cartesian_everywhere(cx, parse_polynomial(arg, cx.dim()));
  } else if (kind == "basis") {
    std::size_t idx = 0;
    try {
      idx = std::stoul(arg);
    } catch (const std::exception&) {
      throw UsageError("basis index expected after 'basis:'");
    }
    if (idx >= members.size())
      throw UsageError("basis index " + arg + " out of range (" + std::to_string(members.size()) + " members)");
    u = members[idx].function;
  } else {
    throw UsageError("input must be poly:<expr>, basis:<index> or demo:sin-product");
  }

  const RationalMatrix A = functional_matrix(cx, dofs, std::vector<FeFunction>{u});
  FeFunction back;
  j["coefficients"] = Json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Rational& c = A(static_cast<Eigen::Index>(i), 0);
    j["coefficients"].push_back({{"tag", members[i].tag.to_string()}, {"value", to_string(c)}});
    if (c != 0) back += c * members[i].function;
  }
  if (edges) {
    const FeFunction full = approx_op_2d(cx, u, o.k);
    j["reproduced"] = full.equals(u);
  } else {
    j["reproduced"] = back.equals(u);
  }
  return render_coefficients(o, j);
}

std::string render_report(const Options& o, const Report& r) {
  if (o.format == "json") return to_json(r).dump(2) + "\n";
  std::ostringstream s;
  if (o.format == "csv") {
    s << "name,status,params,witness\n";
    for (const auto& c : r.checks)
      s << c.name << "," << to_string(c.status) << "," << csv_field(c.params.dump()) << ","
        << csv_field(c.witness ? c.witness->dump() : "") << "\n";
    return s.str();
  }
  s << "# " << r.version << "  meshes: " << r.mesh << "\n";
  for (const auto& c : r.checks) {
    s << to_string(c.status) << "  " << c.name << "  " << c.params.dump();
    if (c.witness) s << "  witness " << c.witness->dump();
    s << "\n";
  }
  s << "# " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
    << r.count(CheckStatus::Skipped) << " skipped\n";
  return s.str();
}

int cmd_verify(const Options& o, bool explicit_mesh, std::string& output) {
  if (o.k_min < 1 || o.k_max < o.k_min) throw UsageError("need 1 <= --k-min <= --k-max");
  Report r;
  if (o.negative_controls) {
    r = run_negative_controls(o.filter);
  } else {
    std::vector<NamedComplex> meshes;
    if (explicit_mesh) meshes.push_back(load_complex(o));
    else meshes = default_meshes();
    r = run_suite(meshes, SuiteOptions{o.k_min, o.k_max, o.filter});
  }
  output = render_report(o, r);
  if (r.checks.empty()) std::cerr << "crfe: no check matches the filter '" << o.filter << "'\n";
  return r.passed() ? kPass : kFailure;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Crouzeix-Raviart elements of arbitrary order with exact verification", "crfe"};
  app.require_subcommand(1);
  app.fallthrough();

  auto* dim_opt = app.add_option("--dim", o.dim, "Spatial dimension of generated meshes");
  auto* k_opt = app.add_option("-k,--order", o.k, "Polynomial order");
  app.add_option("--bc", o.bc, "Boundary data")->check(CLI::IsMember({"full", "zero"}));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("-o,--out", o.out, "Output file (default: stdout)");
  app.add_option("--filter", o.filter, "Check name prefix");
  app.add_option("--quad-order", o.quad_order, "Gauss points per direction on the quadrature path");
  auto* mesh_opt = app.add_option("--mesh", o.mesh_file, "Mesh file");
  auto* gen_opt = app.add_option("--gen", o.gen, "Mesh generator: reference, two-simplex, kuhn-cube, grid2d");
  app.add_option("--n", o.n, "Squares per side for grid2d");
  mesh_opt->excludes(gen_opt);

  auto* mesh_cmd = app.add_subcommand("mesh", "Write a generated or validated mesh");
  auto* basis_cmd = app.add_subcommand("basis", "Tabulate the basis");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks");
  auto* kmin_opt = verify_cmd->add_option("--k-min", o.k_min, "Smallest order");
  auto* kmax_opt = verify_cmd->add_option("--k-max", o.k_max, "Largest order");
  verify_cmd->add_flag("--negative-controls", o.negative_controls, "Run the fixtures built to fail");
  auto* dofs_cmd = app.add_subcommand("dofs", "List the degrees of freedom");
  auto* interp_cmd = app.add_subcommand("interpolate", "Interpolate a function");
  interp_cmd->add_option("--input", o.input, "poly:<expr>, basis:<index> or demo:sin-product")->required();
  for (auto* c : {dofs_cmd, interp_cmd}) {
    c->add_option("--method", o.method, "dofs (general) or edges (two dimensions)")
        ->check(CLI::IsMember({"dofs", "edges"}));
    c->add_option("--dof-mode", o.dof_mode, "Boundary functionals: corrected or raw")
        ->check(CLI::IsMember({"corrected", "raw"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool explicit_mesh = mesh_opt->count() > 0 || gen_opt->count() > 0;
  if (o.format.empty()) o.format = mesh_cmd->parsed() ? "plain" : "json";
  if (dim_opt->count() == 0 && o.gen == "kuhn-cube") o.dim = 3;
  if (verify_cmd->parsed() && k_opt->count() > 0) {
    if (kmin_opt->count() > 0 || kmax_opt->count() > 0) {
      std::cerr << "crfe: --order cannot be combined with --k-min/--k-max\n";
      return kUsage;
    }
    o.k_min = o.k_max = o.k;
  }
  try {
    std::string output;
    int code = kPass;
    if (mesh_cmd->parsed()) {
      validate(o, false);
      output = cmd_mesh(o);
    } else if (basis_cmd->parsed()) {
      validate(o, true);
      output = cmd_basis(o);
    } else if (verify_cmd->parsed()) {
      validate(o, false);
      code = cmd_verify(o, explicit_mesh, output);
    } else if (dofs_cmd->parsed()) {
      validate(o, true);
      output = cmd_dofs(o);
    } else if (interp_cmd->parsed()) {
      validate(o, true);
      output = cmd_interpolate(o);
    }
    write_output(o, output);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "crfe: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "crfe: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "crfe: " << e.what() << "\n";
    return kUsage;
  } catch (const MeshError& e) {
    std::cerr << "crfe: invalid mesh: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "crfe: " << e.what() << "\n";
    return kFailure;
  }
}
