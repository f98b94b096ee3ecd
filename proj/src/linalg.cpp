#include "histo/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "histo/errors.hpp"

namespace histo {

LuResult lu_partial_pivot(const Eigen::MatrixXd& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (rows < cols) throw DimensionMismatch("lu_partial_pivot: rows < cols");

  Eigen::MatrixXd work = a;
  std::vector<int> order(static_cast<std::size_t>(rows));
  std::iota(order.begin(), order.end(), 0);
  Eigen::VectorXd pivots(cols);

  for (Eigen::Index k = 0; k < cols; ++k) {
    Eigen::Index best = k;
    double best_mag = std::abs(work(k, k));
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      const double mag = std::abs(work(i, k));
      if (mag > best_mag) {  // strict: ties keep the lowest row index
        best_mag = mag;
        best = i;
      }
    }
    if (best != k) {
      work.row(k).swap(work.row(best));
      std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(best)]);
    }
    pivots(k) = std::abs(work(k, k));
    if (work(k, k) != 0.0) {
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        const double factor = work(i, k) / work(k, k);
        work(i, k) = factor;
        for (Eigen::Index j = k + 1; j < cols; ++j) {
          work(i, j) -= factor * work(k, j);
        }
      }
    }
  }

  LuResult res;
  res.row_order = std::move(order);
  res.pivot_magnitudes = pivots;
  res.lower = Eigen::MatrixXd::Zero(rows, cols);
  res.upper = Eigen::MatrixXd::Zero(cols, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (i > j) {
        res.lower(i, j) = work(i, j);
      } else {
        if (i < cols) res.upper(i, j) = work(i, j);
        if (i == j) res.lower(i, j) = 1.0;
      }
    }
  }
  return res;
}

namespace {

// Applies one Householder reflection (v, beta) to the trailing block of m.
void apply_reflector(Eigen::MatrixXd& m, const Eigen::VectorXd& v, double beta, Eigen::Index k) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  for (Eigen::Index j = 0; j < cols; ++j) {
    double dot = 0.0;
    for (Eigen::Index i = k; i < rows; ++i) dot += v(i - k) * m(i, j);
    dot *= beta;
    for (Eigen::Index i = k; i < rows; ++i) m(i, j) -= dot * v(i - k);
  }
}

QrResult qr_impl(const Eigen::MatrixXd& a, bool pivot) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const Eigen::Index steps = std::min(rows, cols);

  Eigen::MatrixXd r = a;
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(rows, rows);
  std::vector<int> perm(static_cast<std::size_t>(cols));
  std::iota(perm.begin(), perm.end(), 0);

  for (Eigen::Index k = 0; k < steps; ++k) {
    if (pivot) {
      Eigen::Index best = k;
      double best_norm = r.col(k).segment(k, rows - k).squaredNorm();
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        const double nrm = r.col(j).segment(k, rows - k).squaredNorm();
        if (nrm > best_norm) {
          best_norm = nrm;
          best = j;
        }
      }
      if (best != k) {
        r.col(k).swap(r.col(best));
        std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(best)]);
      }
    }

    Eigen::VectorXd v = r.col(k).segment(k, rows - k);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    v(0) += (v(0) >= 0.0 ? norm : -norm);
    const double vnorm2 = v.squaredNorm();
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    apply_reflector(r, v, beta, k);
    // Accumulate Q from the right: Q <- Q (I - beta v v^T).
    for (Eigen::Index i = 0; i < rows; ++i) {
      double dot = 0.0;
      for (Eigen::Index j = k; j < rows; ++j) dot += q(i, j) * v(j - k);
      dot *= beta;
      for (Eigen::Index j = k; j < rows; ++j) q(i, j) -= dot * v(j - k);
    }
  }

  QrResult res;
  res.q = std::move(q);
  res.r = std::move(r);
  res.col_perm = std::move(perm);
  res.diag_magnitudes = Eigen::VectorXd(steps);
  for (Eigen::Index k = 0; k < steps; ++k) {
    res.diag_magnitudes(k) = std::abs(res.r(k, k));
  }
  // Zero out the numerically eliminated subdiagonal.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = j + 1; i < rows; ++i) res.r(i, j) = 0.0;
  }
  return res;
}

}  // namespace

QrResult qr_column_pivot(const Eigen::MatrixXd& a) { return qr_impl(a, true); }

QrResult qr_householder(const Eigen::MatrixXd& a) { return qr_impl(a, false); }

Eigen::MatrixXd solve_multi(const Eigen::MatrixXd& a, const Eigen::MatrixXd& rhs) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve: matrix not square");
  if (a.rows() != rhs.rows()) throw DimensionMismatch("solve: rhs size mismatch");
  const Eigen::Index n = a.rows();
  if (n == 0) return rhs;

  const LuResult lu = lu_partial_pivot(a);
  const double scale = a.cwiseAbs().maxCoeff();
  const double tol = std::numeric_limits<double>::epsilon() * scale * static_cast<double>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (lu.pivot_magnitudes(k) <= tol) {
      throw SingularSystem("solve: pivot breakdown at step " + std::to_string(k));
    }
  }

  Eigen::MatrixXd x(n, rhs.cols());
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      double sum = rhs(lu.row_order[static_cast<std::size_t>(i)], c);
      for (Eigen::Index j = 0; j < i; ++j) sum -= lu.lower(i, j) * y(j);
      y(i) = sum;
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      double sum = y(i);
      for (Eigen::Index j = i + 1; j < n; ++j) sum -= lu.upper(i, j) * x(j, c);
      x(i, c) = sum / lu.upper(i, i);
    }
  }
  return x;
}

Eigen::VectorXd solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs) {
  return solve_multi(a, rhs);
}

double one_norm(const Eigen::MatrixXd& a) {
  if (a.cols() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

double condition_1norm(const Eigen::MatrixXd& a) {
  try {
    const Eigen::MatrixXd inv = solve_multi(a, Eigen::MatrixXd::Identity(a.rows(), a.rows()));
    return one_norm(a) * one_norm(inv);
  } catch (const SingularSystem&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace histo
