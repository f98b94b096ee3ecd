#include "histo/solver.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "histo/errors.hpp"
#include "histo/linalg.hpp"

namespace histo {

double Histopolant::evaluate(const Point2& p) const {
  return eval_poly(std::span<const double>(coeffs.data(), static_cast<std::size_t>(coeffs.size())),
                   basis, p);
}

void save_histopolant(const Histopolant& h, std::ostream& out) {
  nlohmann::json j;
  j["method"] = to_string(h.method);
  j["m"] = h.m;
  j["d"] = h.d;
  j["basis"] = to_string(h.basis.kind);
  j["coeffs"] = std::vector<double>(h.coeffs.data(), h.coeffs.data() + h.coeffs.size());
  out << j.dump(2) << "\n";
}

Histopolant load_histopolant(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("load_histopolant: ") + e.what());
  }
  Histopolant h;
  try {
    h.method = method_from_string(j.at("method").get<std::string>());
    h.m = j.at("m").get<int>();
    h.d = j.at("d").get<int>();
    h.basis = TotalDegreeBasis::make(basis_kind_from_string(j.at("basis").get<std::string>()), h.d);
    const auto coeffs = j.at("coeffs").get<std::vector<double>>();
    h.coeffs = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                 static_cast<Eigen::Index>(coeffs.size()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("load_histopolant: ") + e.what());
  }
  if (h.coeffs.size() != h.basis.size()) {
    throw ParseError("load_histopolant: coefficient count does not match degree");
  }
  return h;
}

Histopolant histopolate(const Eigen::MatrixXd& v, const Eigen::VectorXd& data,
                        const TotalDegreeBasis& basis, Method method) {
  if (v.rows() != v.cols() || v.rows() != data.size() || v.cols() != basis.size()) {
    throw DimensionMismatch("histopolate: V must be square and match data and basis");
  }
  Histopolant h;
  h.basis = basis;
  h.method = method;
  h.m = basis.degree;
  h.d = basis.degree;
  h.coeffs = solve(v, data);
  h.condition_estimate = condition_1norm(v);
  const double residual = (v * h.coeffs - data).lpNorm<Eigen::Infinity>();
  if (residual > 1e-8 * (1.0 + data.lpNorm<Eigen::Infinity>())) {
    throw SingularSystem("histopolate: residual above contract, selection likely non-unisolvent");
  }
  return h;
}

namespace {

void check_full_rank(const Eigen::MatrixXd& a, const char* what) {
  // Probing the transpose of a tall matrix avoids forming its large Q factor.
  const QrResult qr = qr_column_pivot(a.rows() > a.cols() ? a.transpose() : a);
  const Eigen::Index r = qr.diag_magnitudes.size();
  if (r == 0 || qr.diag_magnitudes(r - 1) < 1e-12 * qr.diag_magnitudes(0)) {
    if (std::string(what) == "C") throw RankDeficientConstraints("constraint matrix C rank deficient");
    throw RankDeficientDesign("design matrix W rank deficient");
  }
}

}  // namespace

Histopolant histopolate_regress(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c,
                                const Eigen::VectorXd& b, const Eigen::VectorXd& d,
                                const TotalDegreeBasis& basis, Method method, int m) {
  const Eigen::Index bign = w.rows();
  const Eigen::Index bigd = w.cols();
  const Eigen::Index bigm = c.rows();
  if (c.cols() != bigd || b.size() != bign || d.size() != bigm) {
    throw DimensionMismatch("histopolate_regress: inconsistent shapes");
  }
  if (bigd - bigm > bign - bigm) {
    throw DimensionMismatch("histopolate_regress: D - M exceeds N - M");
  }
  if (basis.size() != bigd) {
    throw DimensionMismatch("histopolate_regress: basis length does not match W columns");
  }
  check_full_rank(c, "C");
  check_full_rank(w, "W");

  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(bigd + bigm, bigd + bigm);
  kkt.topLeftCorner(bigd, bigd) = 2.0 * w.transpose() * w;
  kkt.topRightCorner(bigd, bigm) = c.transpose();
  kkt.bottomLeftCorner(bigm, bigd) = c;
  Eigen::VectorXd rhs(bigd + bigm);
  rhs.head(bigd) = 2.0 * w.transpose() * b;
  rhs.tail(bigm) = d;

  Eigen::VectorXd sol;
  try {
    sol = solve(kkt, rhs);
  } catch (const SingularSystem& e) {
    throw SingularKKT(std::string("histopolate_regress: ") + e.what());
  }

  Histopolant h;
  h.basis = basis;
  h.method = method;
  h.m = m;
  h.d = basis.degree;
  h.coeffs = sol.head(bigd);
  h.condition_estimate = condition_1norm(kkt);
  const double cres = (c * h.coeffs - d).lpNorm<Eigen::Infinity>();
  if (cres > 1e-8 * (1.0 + d.lpNorm<Eigen::Infinity>())) {
    throw SingularKKT("histopolate_regress: constraint residual above contract");
  }
  return h;
}

Eigen::VectorXd solve_regress_elimination(const Eigen::MatrixXd& w, const Eigen::MatrixXd& c,
                                          const Eigen::VectorXd& b, const Eigen::VectorXd& d) {
  const Eigen::Index bigd = w.cols();
  const Eigen::Index bigm = c.rows();
  // C = Q [R1 R2], split W = [W1 W2].
  const QrResult qr = qr_householder(c);
  const Eigen::MatrixXd q = qr.q;
  const Eigen::MatrixXd r1 = qr.r.leftCols(bigm).topRows(bigm);
  const Eigen::MatrixXd r2 = qr.r.rightCols(bigd - bigm).topRows(bigm);
  const Eigen::MatrixXd w1 = w.leftCols(bigm);
  const Eigen::MatrixXd w2 = w.rightCols(bigd - bigm);

  const Eigen::MatrixXd r1inv_r2 = solve_multi(r1, r2);
  const Eigen::VectorXd qt_d = q.transpose() * d;
  const Eigen::VectorXd r1inv_qtd = solve(r1, qt_d);

  Eigen::VectorXd a2(0);
  if (bigd > bigm) {
    const Eigen::MatrixXd a = w2 - w1 * r1inv_r2;
    const Eigen::VectorXd b1 = b - w1 * r1inv_qtd;
    a2 = solve(a.transpose() * a, a.transpose() * b1);
  }
  const Eigen::VectorXd a1 = solve(r1, qt_d - r2 * a2);
  Eigen::VectorXd out(bigd);
  out.head(bigm) = a1;
  out.tail(bigd - bigm) = a2;
  return out;
}

std::vector<int> reorder_indices(const SelectionResult& sel, int total) {
  std::vector<int> order = sel.indices;
  std::vector<char> selected(static_cast<std::size_t>(total), 0);
  for (int i : sel.indices) selected[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < total; ++i) {
    if (!selected[static_cast<std::size_t>(i)]) order.push_back(i);
  }
  return order;
}

Histopolant pipeline(const Triangulation& tri, Method method, int m, std::optional<int> d_deg,
                     const Field& f, BasisKind kind) {
  SelectionResult sel;
  switch (method) {
    case Method::padua: sel = extract_padua(tri, m); break;
    case Method::fekete: sel = extract_fekete(tri, m, kind); break;
    case Method::leja: sel = extract_leja(tri, m, kind); break;
  }

  if (!d_deg) {
    const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, m);
    const Eigen::MatrixXd v = moment_matrix(tri, sel.indices, basis);
    const Eigen::VectorXd data = averages(f, tri, sel.indices, m + 10);
    return histopolate(v, data, basis, method);
  }

  const int d = *d_deg;
  if (d <= m) throw DimensionMismatch("pipeline: regression degree d must exceed m");
  const TotalDegreeBasis basis = TotalDegreeBasis::make(kind, d);
  const std::vector<int> order = reorder_indices(sel, tri.size());
  const Eigen::MatrixXd w = moment_matrix(tri, order, basis);
  const Eigen::MatrixXd c = w.topRows(dimension(m));
  const Eigen::VectorXd b = averages(f, tri, order, d + 10);
  const Eigen::VectorXd data = b.head(dimension(m));
  return histopolate_regress(w, c, b, data, basis, method, m);
}

}  // namespace histo
