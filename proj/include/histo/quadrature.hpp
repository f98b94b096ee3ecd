#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "histo/basis.hpp"
#include "histo/geometry.hpp"
#include "histo/mesh.hpp"

namespace histo {

using Field = std::function<double(double, double)>;

/// Mean-value quadrature rule on the reference triangle. Nodes are stored as
/// barycentric triples and the weights sum to 1, so applying the rule to a
/// triangle yields the average of the integrand, exactly for polynomials of
/// total degree <= exact_degree.
struct TriangleRule {
  std::vector<std::array<double, 3>> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
};

/// Collapsed tensor Gauss-Legendre rule with ceil((q+2)/2)^2 points,
/// exact for total degree >= q.
TriangleRule triangle_rule(int q);

/// Weighted mean of f over t: (1/|t|) * integral of f.
double average(const Field& f, const TriangleGeom& t, const TriangleRule& rule);

/// Moment matrix [mu_i(p_j)] for the given triangle rows and basis columns.
/// The rule degree equals the basis degree, so entries are exact averages of
/// the basis polynomials.
Eigen::MatrixXd moment_matrix(const Triangulation& tri, std::span<const int> rows,
                              const TotalDegreeBasis& basis);

/// Convenience overload: all triangles in list order.
Eigen::MatrixXd moment_matrix(const Triangulation& tri, const TotalDegreeBasis& basis);

/// Vector of triangle averages of a general field, with a rule of the given
/// exactness degree.
Eigen::VectorXd averages(const Field& f, const Triangulation& tri, std::span<const int> rows,
                         int rule_degree);

}  // namespace histo
