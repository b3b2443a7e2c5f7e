#include "crfe/mesh.hpp"

#include "crfe/errors.hpp"
#include "crfe/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <sstream>

namespace crfe {

namespace {

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

// Non-empty, comment-free lines split into tokens, with line numbers.
struct TokenLines {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::size_t pos = 0;

  explicit TokenLines(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      std::istringstream ls(strip_comment(line));
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) lines.emplace_back(no, std::move(toks));
    }
  }

  const std::vector<std::string>& next(const char* what) {
    if (pos >= lines.size()) throw ParseError(std::string("unexpected end of mesh text, expected ") + what);
    return lines[pos++].second;
  }
  int line_no() const { return pos == 0 ? 0 : lines[pos - 1].first; }
};

long parse_count(const std::string& s, int line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + s + "'");
  return std::stol(s);
}

const std::vector<std::string>& header(TokenLines& tl, const char* key) {
  const auto& t = tl.next(key);
  if (t.size() != 2 || t[0] != key)
    throw ParseError("line " + std::to_string(tl.line_no()) + ": expected '" + key + " <count>'");
  return t;
}

// Small dense simplex method with Bland's rule. Maximizes c^T x subject to
// A x = b, x >= 0, with b >= 0. The feasible set is assumed non-empty and
// bounded, which holds for the intersection problems built below. Returns
// nullopt when the constraints are infeasible.
std::optional<Rational> lp_maximize(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  // Tableau over [x | artificials | rhs].
  RationalMatrix T = RationalMatrix::Zero(m, n + m + 1);
  T.leftCols(n) = A;
  for (Eigen::Index i = 0; i < m; ++i) {
    T(i, n + i) = 1;
    T(i, n + m) = b(i);
  }
  std::vector<Eigen::Index> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  auto pivot = [&](Eigen::Index r, Eigen::Index col) {
    const Rational inv = Rational(1) / T(r, col);
    T.row(r) *= inv;
    for (Eigen::Index i = 0; i < m; ++i)
      if (i != r && T(i, col) != 0) T.row(i) -= T(i, col) * T.row(r);
    basis[r] = col;
  };

  // Reduced costs for objective `obj` over allowed columns; returns false when optimal.
  auto run = [&](const RationalVector& obj, Eigen::Index allowed) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed && enter < 0; ++j) {
        Rational rc = obj(j);
        for (Eigen::Index i = 0; i < m; ++i) rc -= obj(basis[i]) * T(i, j);
        if (rc > 0) enter = j;
      }
      if (enter < 0) return;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (T(i, enter) <= 0) continue;
        Rational ratio = T(i, n + m) / T(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw Error("internal: unbounded intersection problem");
      pivot(leave, enter);
    }
  };

  RationalVector phase1 = RationalVector::Zero(n + m);
  for (Eigen::Index i = 0; i < m; ++i) phase1(n + i) = -1;
  run(phase1, n + m);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] >= n && T(i, n + m) != 0) return std::nullopt;
  // Drive remaining artificials out of the basis where possible.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j)
      if (T(i, j) != 0) {
        pivot(i, j);
        break;
      }
  }
  RationalVector phase2 = RationalVector::Zero(n + m);
  phase2.head(n) = c;
  // Artificials left in the basis sit on redundant zero rows and never re-enter.
  run(phase2, n);
  Rational value(0);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] < n) value += c(basis[i]) * T(i, n + m);
  return value;
}

// True if conv(K1) and conv(K2) intersect exactly in the convex hull of
// their shared vertices.
bool intersect_properly(const Mesh& mesh, const std::vector<int>& k1, const std::vector<int>& k2) {
  const int d = mesh.dim;
  const Eigen::Index n1 = static_cast<Eigen::Index>(k1.size()), n2 = static_cast<Eigen::Index>(k2.size());
  // Bounding boxes first.
  for (int c = 0; c < d; ++c) {
    Rational lo1 = mesh.vertices[k1[0]][c], hi1 = lo1, lo2 = mesh.vertices[k2[0]][c], hi2 = lo2;
    for (int v : k1) {
      lo1 = std::min(lo1, mesh.vertices[v][c]);
      hi1 = std::max(hi1, mesh.vertices[v][c]);
    }
    for (int v : k2) {
      lo2 = std::min(lo2, mesh.vertices[v][c]);
      hi2 = std::max(hi2, mesh.vertices[v][c]);
    }
    if (hi1 < lo2 || hi2 < lo1) return true;
  }
  RationalMatrix A = RationalMatrix::Zero(d + 2, n1 + n2);
  RationalVector b = RationalVector::Zero(d + 2);
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (int c = 0; c < d; ++c) A(c, i) = mesh.vertices[k1[i]][c];
    A(d, i) = 1;
  }
  for (Eigen::Index j = 0; j < n2; ++j) {
    for (int c = 0; c < d; ++c) A(c, n1 + j) = -mesh.vertices[k2[j]][c];
    A(d + 1, n1 + j) = 1;
  }
  b(d) = 1;
  b(d + 1) = 1;
  // Mass on non-shared vertices of either simplex.
  RationalVector obj = RationalVector::Zero(n1 + n2);
  for (Eigen::Index i = 0; i < n1; ++i)
    if (std::find(k2.begin(), k2.end(), k1[i]) == k2.end()) obj(i) = 1;
  for (Eigen::Index j = 0; j < n2; ++j)
    if (std::find(k1.begin(), k1.end(), k2[j]) == k1.end()) obj(n1 + j) = 1;
  auto best = lp_maximize(A, b, obj);
  return !best || *best == 0;
}

}  // namespace

Rational signed_volume_factor(const Mesh& mesh, int simplex) {
  const auto& s = mesh.simplices[simplex];
  const int d = mesh.dim;
  RationalMatrix m(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) m(i, j) = mesh.vertices[s[j + 1]][i] - mesh.vertices[s[0]][i];
  return exact_determinant(m);
}

void validate_mesh(Mesh& mesh) {
  const int d = mesh.dim;
  if (d < 1) throw MeshError(MeshError::Kind::Malformed, "mesh dimension must be at least 1");
  if (d + 1 > 8) throw MeshError(MeshError::Kind::Malformed, "mesh dimension above 7 is not supported");
  if (mesh.simplices.empty()) throw MeshError(MeshError::Kind::Malformed, "mesh has no simplices");
  const int nv = static_cast<int>(mesh.vertices.size());
  for (const auto& p : mesh.vertices)
    if (static_cast<int>(p.size()) != d) throw MeshError(MeshError::Kind::Malformed, "vertex with wrong coordinate count");
  std::vector<bool> used(nv, false);
  for (std::size_t s = 0; s < mesh.simplices.size(); ++s) {
    auto& simplex = mesh.simplices[s];
    if (static_cast<int>(simplex.size()) != d + 1)
      throw MeshError(MeshError::Kind::Malformed, "simplex " + std::to_string(s) + " needs " + std::to_string(d + 1) + " vertices");
    for (int v : simplex) {
      if (v < 0 || v >= nv) throw MeshError(MeshError::Kind::Malformed, "simplex " + std::to_string(s) + " references missing vertex " + std::to_string(v));
      used[v] = true;
    }
    std::sort(simplex.begin(), simplex.end());
    if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
      throw MeshError(MeshError::Kind::Degenerate, "simplex " + std::to_string(s) + " repeats a vertex");
    if (signed_volume_factor(mesh, static_cast<int>(s)) == 0)
      throw MeshError(MeshError::Kind::Degenerate, "simplex " + std::to_string(s) + " has zero volume");
  }
  for (int v = 0; v < nv; ++v)
    if (!used[v]) throw MeshError(MeshError::Kind::Malformed, "vertex " + std::to_string(v) + " is not used by any simplex");
  {
    std::set<std::vector<int>> seen;
    for (std::size_t s = 0; s < mesh.simplices.size(); ++s)
      if (!seen.insert(mesh.simplices[s]).second)
        throw MeshError(MeshError::Kind::NonConforming, "simplex " + std::to_string(s) + " is a duplicate");
  }
  const std::size_t m = mesh.simplices.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!intersect_properly(mesh, mesh.simplices[a], mesh.simplices[b]))
        throw MeshError(MeshError::Kind::NonConforming,
                        "simplices " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in a common face");
  // Facet connectivity.
  std::map<std::vector<int>, std::vector<int>> facet_owners;
  for (std::size_t s = 0; s < m; ++s)
    for (int drop = 0; drop <= d; ++drop) {
      std::vector<int> f;
      for (int i = 0; i <= d; ++i)
        if (i != drop) f.push_back(mesh.simplices[s][i]);
      facet_owners[f].push_back(static_cast<int>(s));
    }
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [f, owners] : facet_owners) {
    if (owners.size() > 2) throw MeshError(MeshError::Kind::NonConforming, "a facet is shared by more than two simplices");
    if (owners.size() == 2) parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t s = 1; s < m; ++s)
    if (find(static_cast<int>(s)) != find(0))
      throw MeshError(MeshError::Kind::Disconnected, "simplices are not connected through shared facets");
}

Mesh parse_mesh(std::string_view text) {
  TokenLines tl(text);
  Mesh mesh;
  mesh.dim = static_cast<int>(parse_count(header(tl, "dim")[1], tl.line_no()));
  if (mesh.dim < 1 || mesh.dim > 7) throw ParseError("unsupported mesh dimension " + std::to_string(mesh.dim));
  const long nv = parse_count(header(tl, "vertices")[1], tl.line_no());
  for (long i = 0; i < nv; ++i) {
    const auto& t = tl.next("vertex coordinates");
    if (static_cast<int>(t.size()) != mesh.dim)
      throw ParseError("line " + std::to_string(tl.line_no()) + ": expected " + std::to_string(mesh.dim) + " coordinates");
    Point p;
    for (const auto& s : t) p.push_back(parse_rational(s));
    mesh.vertices.push_back(std::move(p));
  }
  const long ns = parse_count(header(tl, "simplices")[1], tl.line_no());
  for (long i = 0; i < ns; ++i) {
    const auto& t = tl.next("simplex vertex indices");
    if (static_cast<int>(t.size()) != mesh.dim + 1)
      throw ParseError("line " + std::to_string(tl.line_no()) + ": expected " + std::to_string(mesh.dim + 1) + " vertex indices");
    std::vector<int> s;
    for (const auto& v : t) s.push_back(static_cast<int>(parse_count(v, tl.line_no())));
    mesh.simplices.push_back(std::move(s));
  }
  if (tl.pos != tl.lines.size()) throw ParseError("trailing content after the simplex list");
  validate_mesh(mesh);
  return mesh;
}

Mesh load_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mesh file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_mesh(buf.str());
}

std::string format_mesh(const Mesh& mesh) {
  std::ostringstream out;
  out << "dim " << mesh.dim << "\n";
  out << "vertices " << mesh.vertices.size() << "\n";
  for (const auto& p : mesh.vertices) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
    out << "\n";
  }
  out << "simplices " << mesh.simplices.size() << "\n";
  for (const auto& s : mesh.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\n";
  }
  return out.str();
}

MeshGenerator parse_generator(std::string_view name) {
  if (name == "reference") return MeshGenerator::Reference;
  if (name == "two-simplex") return MeshGenerator::TwoSimplex;
  if (name == "kuhn-cube") return MeshGenerator::KuhnCube;
  if (name == "grid2d") return MeshGenerator::Grid2d;
  throw ParseError("unknown mesh generator '" + std::string(name) + "'");
}

std::string generator_name(MeshGenerator g) {
  switch (g) {
    case MeshGenerator::Reference: return "reference";
    case MeshGenerator::TwoSimplex: return "two-simplex";
    case MeshGenerator::KuhnCube: return "kuhn-cube";
    case MeshGenerator::Grid2d: return "grid2d";
  }
  return "?";
}

Mesh generate_mesh(MeshGenerator g, int dim, int n) {
  Mesh mesh;
  mesh.dim = dim;
  auto unit = [&](int i) {
    Point p(dim, Rational(0));
    if (i >= 0) p[i] = 1;
    return p;
  };
  switch (g) {
    case MeshGenerator::Reference:
    case MeshGenerator::TwoSimplex: {
      if (dim < 1 || dim > 7) throw Error("generator dimension must be in 1..7");
      mesh.vertices.push_back(unit(-1));
      for (int i = 0; i < dim; ++i) mesh.vertices.push_back(unit(i));
      std::vector<int> first(dim + 1);
      std::iota(first.begin(), first.end(), 0);
      mesh.simplices.push_back(first);
      if (g == MeshGenerator::TwoSimplex) {
        // Apex (1,...,1) lies beyond the facet x_1 + ... + x_d = 1.
        mesh.vertices.push_back(Point(dim, Rational(1)));
        std::vector<int> second(first.begin() + 1, first.end());
        second.push_back(dim + 1);
        mesh.simplices.push_back(second);
      }
      break;
    }
    case MeshGenerator::KuhnCube: {
      if (dim < 1 || dim > 5) throw Error("kuhn-cube dimension must be in 1..5");
      for (int code = 0; code < (1 << dim); ++code) {
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = (code >> i) & 1;
        mesh.vertices.push_back(p);
      }
      std::vector<int> perm(dim);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> s{0};
        int code = 0;
        for (int i : perm) {
          code |= 1 << i;
          s.push_back(code);
        }
        mesh.simplices.push_back(s);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case MeshGenerator::Grid2d: {
      if (dim != 2) throw Error("grid2d is two-dimensional");
      if (n < 1) throw Error("grid2d needs n >= 1");
      auto id = [&](int i, int j) { return j * (n + 1) + i; };
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) mesh.vertices.push_back({Rational(i, n), Rational(j, n)});
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          mesh.simplices.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
          mesh.simplices.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
      break;
    }
  }
  validate_mesh(mesh);
  return mesh;
}

}  // namespace crfe
