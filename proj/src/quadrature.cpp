#include "histo/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "histo/errors.hpp"

namespace histo {

namespace {

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on P_g.
void gauss_legendre(int g, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(static_cast<std::size_t>(g));
  weights.resize(static_cast<std::size_t>(g));
  for (int k = 0; k < g; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (g + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_g(x) and its derivative.
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= g; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = g * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(k)] = x;
    weights[static_cast<std::size_t>(k)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

TriangleRule triangle_rule(int q) {
  if (q < 0) throw DimensionMismatch("triangle_rule: negative degree");
  const int g = (q + 3) / 2;  // ceil((q + 2) / 2)
  std::vector<double> gx, gw;
  gauss_legendre(g, gx, gw);

  TriangleRule rule;
  rule.exact_degree = 2 * g - 2;
  rule.nodes.reserve(static_cast<std::size_t>(g * g));
  rule.weights.reserve(static_cast<std::size_t>(g * g));
  // Collapse of the unit square (a, b) -> (a, b (1 - a)) onto the reference
  // triangle; the Jacobian (1 - a) folds into the weight. Weights sum to 1.
  for (int i = 0; i < g; ++i) {
    const double a = 0.5 * (gx[static_cast<std::size_t>(i)] + 1.0);
    const double wa = 0.5 * gw[static_cast<std::size_t>(i)];
    for (int j = 0; j < g; ++j) {
      const double b = 0.5 * (gx[static_cast<std::size_t>(j)] + 1.0);
      const double wb = 0.5 * gw[static_cast<std::size_t>(j)];
      const double x = a;
      const double y = b * (1.0 - a);
      rule.nodes.push_back({1.0 - x - y, x, y});
      rule.weights.push_back(2.0 * wa * wb * (1.0 - a));
    }
  }
  return rule;
}

double average(const Field& f, const TriangleGeom& t, const TriangleRule& rule) {
  if (area(t) == 0.0) throw DegenerateTriangle("average: degenerate triangle");
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const auto& lam = rule.nodes[k];
    const double x = lam[0] * t.v1.x + lam[1] * t.v2.x + lam[2] * t.v3.x;
    const double y = lam[0] * t.v1.y + lam[1] * t.v2.y + lam[2] * t.v3.y;
    sum += rule.weights[k] * f(x, y);
  }
  return sum;
}

Eigen::MatrixXd moment_matrix(const Triangulation& tri, std::span<const int> rows,
                              const TotalDegreeBasis& basis) {
  const TriangleRule rule = triangle_rule(basis.degree);
  Eigen::MatrixXd w(static_cast<Eigen::Index>(rows.size()), basis.size());
  std::vector<double> vals;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    const TriangleGeom t = tri.triangle(rows[static_cast<std::size_t>(r)]);
    if (area(t) == 0.0) throw DegenerateTriangle("moment_matrix: degenerate triangle");
    w.row(r).setZero();
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const auto& lam = rule.nodes[k];
      const Point2 p{lam[0] * t.v1.x + lam[1] * t.v2.x + lam[2] * t.v3.x,
                     lam[0] * t.v1.y + lam[1] * t.v2.y + lam[2] * t.v3.y};
      vals = eval_basis(basis, p);
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        w(r, j) += rule.weights[k] * vals[static_cast<std::size_t>(j)];
      }
    }
  }
  return w;
}

Eigen::MatrixXd moment_matrix(const Triangulation& tri, const TotalDegreeBasis& basis) {
  std::vector<int> rows(static_cast<std::size_t>(tri.size()));
  for (int i = 0; i < tri.size(); ++i) rows[static_cast<std::size_t>(i)] = i;
  return moment_matrix(tri, rows, basis);
}

Eigen::VectorXd averages(const Field& f, const Triangulation& tri, std::span<const int> rows,
                         int rule_degree) {
  const TriangleRule rule = triangle_rule(rule_degree);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (Eigen::Index r = 0; r < b.size(); ++r) {
    b(r) = average(f, tri.triangle(rows[static_cast<std::size_t>(r)]), rule);
  }
  return b;
}

}  // namespace histo
