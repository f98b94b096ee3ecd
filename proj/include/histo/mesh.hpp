#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "histo/geometry.hpp"

namespace histo {

/// Immutable triangulation of a polygonal domain, by default [-1,1]^2.
/// Triangles are index triples (0-based) into the vertex list; the list
/// order is significant (it is the tie-break order for point attribution).
struct Triangulation {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> triangles;
  double domain_area = 0.0;  // cached sum of |t_i|

  int size() const { return static_cast<int>(triangles.size()); }
  TriangleGeom triangle(int i) const {
    const auto& tr = triangles[static_cast<std::size_t>(i)];
    return {vertices[static_cast<std::size_t>(tr[0])],
            vertices[static_cast<std::size_t>(tr[1])],
            vertices[static_cast<std::size_t>(tr[2])]};
  }
  double triangle_area(int i) const { return area(triangle(i)); }

  void recompute_area();
};

/// Friedrichs-Keller triangulation of [-1,1]^2: (n+1)^2 grid vertices,
/// every cell split along the (-1,-1)->(1,1) diagonal, 2n^2 triangles.
Triangulation friedrichs_keller(int n);

/// Friedrichs-Keller-style mesh on randomly partitioned axes: n-1 interior
/// breakpoints per axis drawn uniformly on (-1,1), sorted, endpoints
/// appended. Deterministic per seed.
Triangulation random_axes_fk(int n, std::uint64_t seed);

/// Maximum Euclidean edge length over all triangles. Throws EmptyMesh.
double max_edge_length(const Triangulation& tri);

Triangulation load_mesh(std::istream& in);
void save_mesh(const Triangulation& tri, std::ostream& out);
Triangulation load_mesh_file(const std::string& path);
void save_mesh_file(const Triangulation& tri, const std::string& path);

struct MeshDiagnostics {
  double min_area = 0.0;
  double area_sum = 0.0;
  double h_max = 0.0;
  bool indices_valid = true;
  bool disjoint_checked = false;
  bool disjoint_ok = true;
};

/// Diagnostic sweep over the mesh; failures are reported, never thrown.
/// The sampled interior-disjointness check runs for meshes with at most
/// 5000 triangles.
MeshDiagnostics validate(const Triangulation& tri);

}  // namespace histo
