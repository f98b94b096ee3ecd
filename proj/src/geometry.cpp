#include "histo/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "histo/errors.hpp"

namespace histo {

namespace {

double bbox_scale(const TriangleGeom& t) {
  const double xs = std::max({std::abs(t.v1.x), std::abs(t.v2.x), std::abs(t.v3.x)});
  const double ys = std::max({std::abs(t.v1.y), std::abs(t.v2.y), std::abs(t.v3.y)});
  return std::max({xs, ys, 1.0});
}

}  // namespace

double signed_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double area(const TriangleGeom& t) {
  return std::abs(signed_area(t.v1, t.v2, t.v3));
}

std::array<double, 3> barycentric(const Point2& p, const TriangleGeom& t) {
  const double scale = bbox_scale(t);
  const double denom = 2.0 * signed_area(t.v1, t.v2, t.v3);
  if (std::abs(denom) < 2.0 * 1e-14 * scale * scale) {
    throw DegenerateTriangle("barycentric: triangle area below tolerance");
  }
  // Cross-product ratios; each numerator is twice a signed sub-triangle area.
  const auto cross = [](const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; };
  const Point2 d3{p.x - t.v3.x, p.y - t.v3.y};
  const Point2 d1{p.x - t.v1.x, p.y - t.v1.y};
  const Point2 e23{t.v2.x - t.v3.x, t.v2.y - t.v3.y};
  const Point2 e31{t.v3.x - t.v1.x, t.v3.y - t.v1.y};
  const Point2 e12{t.v1.x - t.v2.x, t.v1.y - t.v2.y};
  const double l1 = cross(d3, e23) / denom;
  const double l2 = cross(d3, e31) / denom;
  const double l3 = cross(d1, e12) / denom;
  return {l1, l2, l3};
}

bool contains_point(const TriangleGeom& t, const Point2& p, double tol) {
  const double total = area(t);
  if (total == 0.0) {
    throw DegenerateTriangle("contains_point: degenerate triangle");
  }
  const double a1 = area(TriangleGeom{p, t.v2, t.v3});
  const double a2 = area(TriangleGeom{t.v1, p, t.v3});
  const double a3 = area(TriangleGeom{t.v1, t.v2, p});
  return std::abs(a1 + a2 + a3 - total) <= tol * total;
}

}  // namespace histo
