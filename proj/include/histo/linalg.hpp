#pragma once

#include <vector>

#include <Eigen/Dense>

namespace histo {

/// Row-pivoted Doolittle LU of a rows >= cols matrix: P A = L U.
/// row_order[k] is the original index of the row pivoted into position k;
/// ties break at the lowest row index. Zero pivots are reported through the
/// magnitudes, never thrown.
struct LuResult {
  Eigen::MatrixXd lower;           // rows x cols, unit diagonal
  Eigen::MatrixXd upper;           // cols x cols
  std::vector<int> row_order;      // full permutation, length rows
  Eigen::VectorXd pivot_magnitudes;  // |U_kk|, length cols
};
LuResult lu_partial_pivot(const Eigen::MatrixXd& a);

/// Householder QR with column pivoting: A P = Q R. At every step the column
/// with the largest remaining norm is pivoted in (first occurrence on ties),
/// so |R_kk| is nonincreasing.
struct QrResult {
  Eigen::MatrixXd q;             // rows x rows
  Eigen::MatrixXd r;             // rows x cols
  std::vector<int> col_perm;     // col_perm[k] = original column at position k
  Eigen::VectorXd diag_magnitudes;  // |R_kk|, length min(rows, cols)
};
QrResult qr_column_pivot(const Eigen::MatrixXd& a);

/// Plain Householder QR, A = Q R, no pivoting.
QrResult qr_householder(const Eigen::MatrixXd& a);

/// Solves the square system A x = rhs by row-pivoted elimination.
/// Throws SingularSystem on pivot breakdown.
Eigen::VectorXd solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs);
Eigen::MatrixXd solve_multi(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs);

/// Matrix operator 1-norm (max absolute column sum).
double one_norm(const Eigen::MatrixXd& a);

/// kappa_1(A) = ||A||_1 ||A^-1||_1, computed by explicit inversion.
/// Returns +inf when A is numerically singular.
double condition_1norm(const Eigen::MatrixXd& a);

}  // namespace histo
