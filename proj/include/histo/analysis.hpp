#pragma once

#include <vector>

#include <Eigen/Dense>

#include "histo/basis.hpp"
#include "histo/mesh.hpp"
#include "histo/selection.hpp"

namespace histo {

enum class GridKind { uniform, chebyshev_lobatto };

/// Discrete point set covering [-1,1]^2 on which suprema are estimated.
struct EvaluationGrid {
  GridKind kind = GridKind::uniform;
  int resolution = 101;
  std::vector<Point2> points;

  static EvaluationGrid make(GridKind kind, int resolution);
};

/// Expansion coefficients of the average-based Lagrange basis: column j of
/// the result holds the coefficients of ell_j, i.e. the inverse of V.
Eigen::MatrixXd lagrange_coefficients(const Eigen::MatrixXd& v);

/// Lebesgue constant of a triangle selection, estimated as the maximum over
/// grid points of || p(xi) V^{-1} ||_1 (a lower bound of the supremum).
double lebesgue_constant(const SelectionResult& sel, const Triangulation& tri,
                         const EvaluationGrid& grid,
                         BasisKind kind = BasisKind::chebyshev_product);

/// Nodal analogue: same computation with a point-evaluation Vandermonde.
double nodal_lebesgue_constant(const std::vector<Point2>& points, int m,
                               const EvaluationGrid& grid,
                               BasisKind kind = BasisKind::chebyshev_product);

/// Factors of the operator-norm bound zeta_d + eta_d obtained from the
/// direct-elimination factorization C = Q [R1 R2], A = W2 - W1 R1^{-1} R2:
///   eta  = ||(A^T A)^{-1} A^T||_1 (D + M ||W1 R1^{-1} Q^T||_1)
///   zeta = ||R1^{-1}||_1 (M ||Q^T||_1 + ||R2||_1 eta)
/// with eta = 0 by convention when D == M.
struct NormBoundFactors {
  double zeta = 0.0;
  double eta = 0.0;
  double r1_inv_norm = 0.0;
  double qt_norm = 0.0;
  double r2_norm = 0.0;
  double pseudo_inv_norm = 0.0;  // ||(A^T A)^{-1} A^T||_1
  double w1_r1_inv_qt_norm = 0.0;
  int m_dim = 0;
  int d_dim = 0;
};

NormBoundFactors norm_bound(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c);

}  // namespace histo
