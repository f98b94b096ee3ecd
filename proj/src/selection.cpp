#include "histo/selection.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "histo/errors.hpp"
#include "histo/linalg.hpp"
#include "histo/quadrature.hpp"

namespace histo {

std::string to_string(Method m) {
  switch (m) {
    case Method::padua: return "padua";
    case Method::fekete: return "fekete";
    case Method::leja: return "leja";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  if (s == "padua") return Method::padua;
  if (s == "fekete") return Method::fekete;
  if (s == "leja") return Method::leja;
  throw ParseError("unknown method: " + s);
}

std::vector<Point2> padua_points(int m) {
  if (m < 1) throw DimensionMismatch("padua_points: m must be >= 1");
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(dimension(m)));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; i + j <= m; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      pts.push_back({sign * std::cos(std::numbers::pi * j / (m + 1)),
                     sign * std::cos(std::numbers::pi * i / m)});
    }
  }
  return pts;
}

int max_admissible_degree(double h_max) {
  if (!(h_max > 0.0) || h_max >= std::numbers::sqrt2) {
    throw InvalidMesh("max_admissible_degree: require 0 < h_max < sqrt(2)");
  }
  const double bound = std::numbers::pi / std::acos(1.0 - h_max / std::numbers::sqrt2) - 1.0;
  // Largest integer strictly below the bound.
  int m = static_cast<int>(std::ceil(bound)) - 1;
  if (static_cast<double>(m) >= bound) --m;
  return m < 0 ? 0 : m;
}

int fk_max_degree(int n) {
  if (n < 3) throw InvalidMesh("fk_max_degree: n must be >= 3");
  const double bound = std::numbers::pi / std::acos((n - 2.0) / n) - 1.0;
  int m = static_cast<int>(std::ceil(bound)) - 1;
  if (static_cast<double>(m) >= bound) --m;
  return m < 0 ? 0 : m;
}

namespace {

double square_vandermonde_condition(const Triangulation& tri, const std::vector<int>& indices,
                                    int m, BasisKind kind) {
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, m);
  const Eigen::MatrixXd v = moment_matrix(tri, indices, basis);
  return condition_1norm(v);
}

}  // namespace

SelectionResult extract_padua(const Triangulation& tri, int m, const PaduaConfig& cfg) {
  if (cfg.alpha <= 0.0 || cfg.alpha >= 1.0) {
    throw ValidationError("extract_padua: alpha must lie in (0, 1)");
  }
  const std::vector<Point2> pts = padua_points(m);

  SelectionResult res;
  res.method = Method::padua;
  res.degree = m;
  res.diagnostics.point_to_triangle.reserve(pts.size());
  std::set<int> taken;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int found = -1;
    for (int i = 0; i < tri.size(); ++i) {
      if (contains_point(tri.triangle(i), pts[k], cfg.tolerance)) {
        found = i;
        break;
      }
    }
    if (found < 0) {
      throw PointUnassigned("extract_padua: point " + std::to_string(k) +
                            " lies in no triangle");
    }
    if (!taken.insert(found).second) {
      throw AttributionNotInjective("extract_padua: triangle " + std::to_string(found) +
                                    " contains more than one point");
    }
    res.diagnostics.point_to_triangle.push_back(found);
    res.indices.push_back(found);
  }
  res.diagnostics.condition_estimate =
      square_vandermonde_condition(tri, res.indices, m, BasisKind::chebyshev_product);
  return res;
}

SelectionResult extract_fekete(const Triangulation& tri, int m, BasisKind kind) {
  const int mdim = dimension(m);
  if (tri.size() < mdim) {
    throw RankDeficient("extract_fekete: fewer triangles than dim P_m");
  }
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, m);
  const Eigen::MatrixXd w = moment_matrix(tri, basis);
  const QrResult qr = qr_column_pivot(w.transpose());

  SelectionResult res;
  res.method = Method::fekete;
  res.degree = m;
  res.diagnostics.pivot_magnitudes = qr.diag_magnitudes.head(mdim);
  const double tol = 1e-12 * qr.diag_magnitudes(0);
  for (int k = 0; k < mdim; ++k) {
    if (qr.diag_magnitudes(k) < tol) {
      throw RankDeficient("extract_fekete: pivot " + std::to_string(k) + " below tolerance");
    }
    res.indices.push_back(qr.col_perm[static_cast<std::size_t>(k)]);
  }
  res.diagnostics.condition_estimate = square_vandermonde_condition(tri, res.indices, m, kind);
  return res;
}

SelectionResult extract_leja(const Triangulation& tri, int m, BasisKind kind) {
  const int mdim = dimension(m);
  if (tri.size() < mdim) {
    throw RankDeficient("extract_leja: fewer triangles than dim P_m");
  }
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, m);
  const Eigen::MatrixXd w = moment_matrix(tri, basis);
  const LuResult lu = lu_partial_pivot(w);

  SelectionResult res;
  res.method = Method::leja;
  res.degree = m;
  res.diagnostics.pivot_magnitudes = lu.pivot_magnitudes;
  const double tol = 1e-12 * lu.pivot_magnitudes(0);
  for (int k = 0; k < mdim; ++k) {
    if (lu.pivot_magnitudes(k) < tol) {
      throw RankDeficient("extract_leja: pivot " + std::to_string(k) + " below tolerance");
    }
    res.indices.push_back(lu.row_order[static_cast<std::size_t>(k)]);
  }
  res.diagnostics.condition_estimate = square_vandermonde_condition(tri, res.indices, m, kind);
  return res;
}

}  // namespace histo
