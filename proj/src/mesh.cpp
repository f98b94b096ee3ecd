#include "histo/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "histo/errors.hpp"

namespace histo {

namespace {

double edge_len(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Uniform double in (lo, hi) with an explicit 53-bit mapping so that meshes
// are bit-identical per seed across standard library implementations.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

// Sorted axis breakpoints: n-1 interior samples plus the endpoints.
// Redraws until every gap exceeds the degeneracy clamp.
std::vector<double> random_breakpoints(int n, std::mt19937_64& rng) {
  constexpr double kMinGap = 1e-6;
  std::vector<double> pts;
  for (;;) {
    pts.assign(1, -1.0);
    for (int i = 0; i < n - 1; ++i) {
      pts.push_back(uniform(rng, -1.0, 1.0));
    }
    pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] - pts[i - 1] < kMinGap) {
        ok = false;
        break;
      }
    }
    if (ok) return pts;
  }
}

// Both generators share this: grid of breakpoints, cells split along the
// lower-left to upper-right diagonal.
Triangulation from_breakpoints(const std::vector<double>& xs, const std::vector<double>& ys) {
  Triangulation tri;
  const int nx = static_cast<int>(xs.size()) - 1;
  const int ny = static_cast<int>(ys.size()) - 1;
  tri.vertices.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      tri.vertices.push_back({xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]});
    }
  }
  const auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
  tri.triangles.reserve(static_cast<std::size_t>(2 * nx * ny));
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      tri.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      tri.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  tri.recompute_area();
  return tri;
}

}  // namespace

void Triangulation::recompute_area() {
  double sum = 0.0;
  for (int i = 0; i < size(); ++i) {
    sum += triangle_area(i);
  }
  domain_area = sum;
}

Triangulation friedrichs_keller(int n) {
  if (n < 1) throw ValidationError("friedrichs_keller: n must be >= 1");
  std::vector<double> bp(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    bp[static_cast<std::size_t>(i)] = 2.0 * i / n - 1.0;
  }
  return from_breakpoints(bp, bp);
}

Triangulation random_axes_fk(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_axes_fk: n must be >= 1");
  std::mt19937_64 rng(seed);
  const std::vector<double> xs = random_breakpoints(n, rng);
  const std::vector<double> ys = random_breakpoints(n, rng);
  return from_breakpoints(xs, ys);
}

double max_edge_length(const Triangulation& tri) {
  if (tri.triangles.empty()) throw EmptyMesh("max_edge_length: empty triangulation");
  double h = 0.0;
  for (int i = 0; i < tri.size(); ++i) {
    const TriangleGeom t = tri.triangle(i);
    h = std::max({h, edge_len(t.v1, t.v2), edge_len(t.v2, t.v3), edge_len(t.v3, t.v1)});
  }
  return h;
}

Triangulation load_mesh(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("load_mesh: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("triangles")) {
    throw ParseError("load_mesh: expected object with 'vertices' and 'triangles'");
  }
  Triangulation tri;
  try {
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2) throw ParseError("load_mesh: vertex must be [x, y]");
      tri.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    }
    for (const auto& t : j.at("triangles")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("load_mesh: triangle must be [i, j, k]");
      tri.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("load_mesh: ") + e.what());
  }
  const int nv = static_cast<int>(tri.vertices.size());
  for (const auto& v : tri.vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw ValidationError("load_mesh: non-finite vertex coordinate");
    }
  }
  for (const auto& t : tri.triangles) {
    for (int k : t) {
      if (k < 0 || k >= nv) throw ValidationError("load_mesh: triangle index out of range");
    }
  }
  for (std::size_t i = 0; i < tri.triangles.size(); ++i) {
    if (tri.triangle_area(static_cast<int>(i)) <= 0.0) {
      throw ValidationError("load_mesh: degenerate triangle at index " + std::to_string(i));
    }
  }
  tri.recompute_area();
  return tri;
}

void save_mesh(const Triangulation& tri, std::ostream& out) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : tri.vertices) {
    j["vertices"].push_back({v.x, v.y});
  }
  j["triangles"] = nlohmann::json::array();
  for (const auto& t : tri.triangles) {
    j["triangles"].push_back({t[0], t[1], t[2]});
  }
  out << j.dump(2) << "\n";
}

Triangulation load_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_mesh: cannot open " + path);
  return load_mesh(in);
}

void save_mesh_file(const Triangulation& tri, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("save_mesh: cannot open " + path);
  save_mesh(tri, out);
}

MeshDiagnostics validate(const Triangulation& tri) {
  MeshDiagnostics diag;
  if (tri.triangles.empty()) {
    diag.indices_valid = tri.vertices.empty() || true;
    return diag;
  }
  const int nv = static_cast<int>(tri.vertices.size());
  diag.min_area = std::numeric_limits<double>::infinity();
  for (int i = 0; i < tri.size(); ++i) {
    for (int k : tri.triangles[static_cast<std::size_t>(i)]) {
      if (k < 0 || k >= nv) diag.indices_valid = false;
    }
  }
  if (!diag.indices_valid) return diag;
  for (int i = 0; i < tri.size(); ++i) {
    const double a = tri.triangle_area(i);
    diag.min_area = std::min(diag.min_area, a);
    diag.area_sum += a;
  }
  diag.h_max = max_edge_length(tri);
  if (tri.size() <= 5000) {
    diag.disjoint_checked = true;
    // Centroid of each triangle must lie strictly inside no other triangle.
    for (int i = 0; i < tri.size() && diag.disjoint_ok; ++i) {
      const TriangleGeom ti = tri.triangle(i);
      const Point2 c{(ti.v1.x + ti.v2.x + ti.v3.x) / 3.0, (ti.v1.y + ti.v2.y + ti.v3.y) / 3.0};
      for (int k = 0; k < tri.size(); ++k) {
        if (k == i) continue;
        const auto lam = barycentric(c, tri.triangle(k));
        if (lam[0] > 1e-9 && lam[1] > 1e-9 && lam[2] > 1e-9) {
          diag.disjoint_ok = false;
          break;
        }
      }
    }
  }
  return diag;
}

}  // namespace histo
