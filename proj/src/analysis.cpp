#include "histo/analysis.hpp"

#include <cmath>
#include <numbers>

#include "histo/errors.hpp"
#include "histo/linalg.hpp"
#include "histo/quadrature.hpp"

namespace histo {

EvaluationGrid EvaluationGrid::make(GridKind kind, int resolution) {
  if (resolution < 2) throw DimensionMismatch("EvaluationGrid: resolution must be >= 2");
  std::vector<double> axis(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    if (kind == GridKind::uniform) {
      axis[static_cast<std::size_t>(k)] = -1.0 + 2.0 * k / (resolution - 1);
    } else {
      axis[static_cast<std::size_t>(k)] = -std::cos(std::numbers::pi * k / (resolution - 1));
    }
  }
  EvaluationGrid grid;
  grid.kind = kind;
  grid.resolution = resolution;
  grid.points.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (double y : axis) {
    for (double x : axis) {
      grid.points.push_back({x, y});
    }
  }
  return grid;
}

Eigen::MatrixXd lagrange_coefficients(const Eigen::MatrixXd& v) {
  if (v.rows() != v.cols()) throw DimensionMismatch("lagrange_coefficients: V must be square");
  return solve_multi(v, Eigen::MatrixXd::Identity(v.rows(), v.rows()));
}

namespace {

// Max over grid points of the row 1-norm of P V^{-1}, where row xi of P
// holds the basis values at xi.
double max_lagrange_row_norm(const Eigen::MatrixXd& v, const TotalDegreeBasis& basis,
                             const EvaluationGrid& grid) {
  const Eigen::MatrixXd vinv = lagrange_coefficients(v);
  double best = 0.0;
  Eigen::RowVectorXd row(basis.size());
  for (const Point2& xi : grid.points) {
    const std::vector<double> vals = eval_basis(basis, xi);
    for (Eigen::Index j = 0; j < row.size(); ++j) row(j) = vals[static_cast<std::size_t>(j)];
    best = std::max(best, (row * vinv).cwiseAbs().sum());
  }
  return best;
}

}  // namespace

double lebesgue_constant(const SelectionResult& sel, const Triangulation& tri,
                         const EvaluationGrid& grid, BasisKind kind) {
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, sel.degree);
  const Eigen::MatrixXd v = moment_matrix(tri, sel.indices, basis);
  return max_lagrange_row_norm(v, basis, grid);
}

double nodal_lebesgue_constant(const std::vector<Point2>& points, int m,
                               const EvaluationGrid& grid, BasisKind kind) {
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, m);
  if (static_cast<int>(points.size()) != basis.size()) {
    throw DimensionMismatch("nodal_lebesgue_constant: point count must equal dim P_m");
  }
  Eigen::MatrixXd v(basis.size(), basis.size());
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const std::vector<double> vals = eval_basis(basis, points[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = vals[static_cast<std::size_t>(j)];
  }
  return max_lagrange_row_norm(v, basis, grid);
}

NormBoundFactors norm_bound(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c) {
  const Eigen::Index bigd = w.cols();
  const Eigen::Index bigm = c.rows();
  if (c.cols() != bigd) throw DimensionMismatch("norm_bound: W and C column counts differ");

  {
    const QrResult rank_probe = qr_column_pivot(c);
    if (rank_probe.diag_magnitudes(bigm - 1) < 1e-12 * rank_probe.diag_magnitudes(0)) {
      throw RankDeficientConstraints("norm_bound: C rank deficient");
    }
  }

  const QrResult qr = qr_householder(c);
  const Eigen::MatrixXd r1 = qr.r.leftCols(bigm).topRows(bigm);
  const Eigen::MatrixXd r2 = qr.r.rightCols(bigd - bigm).topRows(bigm);
  const Eigen::MatrixXd r1inv = solve_multi(r1, Eigen::MatrixXd::Identity(bigm, bigm));
  const Eigen::MatrixXd w1 = w.leftCols(bigm);

  NormBoundFactors out;
  out.m_dim = static_cast<int>(bigm);
  out.d_dim = static_cast<int>(bigd);
  out.r1_inv_norm = one_norm(r1inv);
  out.qt_norm = one_norm(qr.q.transpose());
  out.r2_norm = one_norm(r2);
  out.w1_r1_inv_qt_norm = one_norm(w1 * r1inv * qr.q.transpose());

  if (bigd > bigm) {
    const Eigen::MatrixXd a = w.rightCols(bigd - bigm) - w1 * r1inv * r2;
    // Probe the transpose: same rank, much smaller Q factor for tall A.
    const QrResult a_probe = qr_column_pivot(a.rows() > a.cols() ? a.transpose() : a);
    const Eigen::Index r = a_probe.diag_magnitudes.size();
    if (a_probe.diag_magnitudes(r - 1) < 1e-12 * a_probe.diag_magnitudes(0)) {
      throw RankDeficientDesign("norm_bound: A = W2 - W1 R1^{-1} R2 rank deficient");
    }
    const Eigen::MatrixXd pinv = solve_multi(a.transpose() * a, Eigen::MatrixXd(a.transpose()));
    out.pseudo_inv_norm = one_norm(pinv);
    out.eta = out.pseudo_inv_norm *
              (static_cast<double>(bigd) + static_cast<double>(bigm) * out.w1_r1_inv_qt_norm);
  }
  out.zeta = out.r1_inv_norm * (static_cast<double>(bigm) * out.qt_norm + out.r2_norm * out.eta);
  return out;
}

}  // namespace histo
