#pragma once

#include <array>

namespace histo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// A planar triangle given by its three vertices.
struct TriangleGeom {
  Point2 v1, v2, v3;
};

/// Signed area of the triangle (a, b, c); positive for counterclockwise order.
double signed_area(const Point2& a, const Point2& b, const Point2& c);

/// Unsigned triangle measure |t|.
double area(const TriangleGeom& t);

/// Barycentric coordinates of p with respect to t. The three values sum to 1.
/// Throws DegenerateTriangle when t has (near-)zero area.
std::array<double, 3> barycentric(const Point2& p, const TriangleGeom& t);

/// Area-sum membership test: p is inside t iff |t| equals the sum of the
/// three sub-triangle areas obtained by replacing each vertex with p, within
/// tol * |t|. Edges and vertices count as inside.
bool contains_point(const TriangleGeom& t, const Point2& p, double tol = 1e-12);

}  // namespace histo
