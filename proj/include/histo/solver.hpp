#pragma once

#include <iosfwd>
#include <optional>

#include <Eigen/Dense>

#include "histo/basis.hpp"
#include "histo/quadrature.hpp"
#include "histo/selection.hpp"

namespace histo {

/// Evaluable polynomial approximant: basis plus coefficient vector.
struct Histopolant {
  TotalDegreeBasis basis;
  Eigen::VectorXd coeffs;
  Method method = Method::padua;
  int m = 0;  // histopolation degree
  int d = 0;  // full degree (== m for pure histopolation)
  double condition_estimate = 0.0;

  double evaluate(const Point2& p) const;
  double operator()(double x, double y) const { return evaluate({x, y}); }
};

void save_histopolant(const Histopolant& h, std::ostream& out);
Histopolant load_histopolant(std::istream& in);

/// Exact histopolation: solves V a = data on a unisolvent selection.
/// Throws SingularSystem on pivot breakdown.
Histopolant histopolate(const Eigen::MatrixXd& v, const Eigen::VectorXd& data,
                        const TotalDegreeBasis& basis, Method method);

/// Combined histopolation-regression: minimizes ||W a - b||_2 subject to
/// C a = d through the augmented KKT system
///   [2 W^T W, C^T; C, 0] [a; z] = [2 W^T b; d].
Histopolant histopolate_regress(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c,
                                const Eigen::VectorXd& b, const Eigen::VectorXd& d,
                                const TotalDegreeBasis& basis, Method method, int m);

/// Direct-elimination solution of the same constrained problem (the
/// reference path; also supplies the factors used by the norm bound).
Eigen::VectorXd solve_regress_elimination(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c,
                                          const Eigen::VectorXd& b, const Eigen::VectorXd& d);

/// Full run: selection, reorder, moment assembly, data averaging, solve.
/// Pure histopolation when d_deg is absent; regression in P_d otherwise.
Histopolant pipeline(const Triangulation& tri, Method method, int m, std::optional<int> d_deg,
                     const Field& f, BasisKind kind = BasisKind::chebyshev_product);

/// Reordered index list: selected triangles first, remaining in list order.
std::vector<int> reorder_indices(const SelectionResult& sel, int total);

}  // namespace histo
