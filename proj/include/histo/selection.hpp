#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "histo/basis.hpp"
#include "histo/mesh.hpp"

namespace histo {

enum class Method { padua, fekete, leja };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct SelectionDiagnostics {
  /// Padua only: point_to_triangle[k] is the triangle attributed to the k-th
  /// Padua point (enumeration order).
  std::vector<int> point_to_triangle;
  /// Fekete/Leja: the M pivot magnitudes, in selection order.
  Eigen::VectorXd pivot_magnitudes;
  /// kappa_1 estimate of the square Vandermonde on the selected triangles.
  double condition_estimate = 0.0;
};

struct SelectionResult {
  Method method = Method::padua;
  std::vector<int> indices;  // M distinct triangle indices, selection order
  int degree = 0;            // m
  SelectionDiagnostics diagnostics;
};

struct PaduaConfig {
  double alpha = 0.5;       // stability parameter, 0 < alpha < 1
  double tolerance = 1e-12;  // membership tolerance for the area-sum test
};

/// The (m+1)(m+2)/2 Padua points of degree m, in (i, j) lexicographic order.
std::vector<Point2> padua_points(int m);

/// Largest degree m for which every Padua triangle is guaranteed to contain
/// exactly one Padua point: m < pi / arccos(1 - h_max/sqrt(2)) - 1.
/// Returns 0 when no positive degree qualifies. Throws InvalidMesh for
/// h_max >= sqrt(2).
int max_admissible_degree(double h_max);

/// Specialization for the Friedrichs-Keller mesh: m < pi/arccos((n-2)/n) - 1.
int fk_max_degree(int n);

/// Padua triangles: each Padua point is attached to the first triangle in
/// list order that contains it. Throws AttributionNotInjective when two
/// points land in the same triangle, PointUnassigned when a point is in no
/// triangle.
SelectionResult extract_padua(const Triangulation& tri, int m, const PaduaConfig& cfg = {});

/// Approximate Fekete triangles via column-pivoted QR of the transposed
/// moment matrix. Throws RankDeficient when a pivot falls below
/// 1e-12 * (first pivot).
SelectionResult extract_fekete(const Triangulation& tri, int m,
                               BasisKind kind = BasisKind::chebyshev_product);

/// Discrete Leja triangles via row-pivoted LU of the moment matrix.
SelectionResult extract_leja(const Triangulation& tri, int m,
                             BasisKind kind = BasisKind::chebyshev_product);

}  // namespace histo
