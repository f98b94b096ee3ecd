#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "histo/analysis.hpp"
#include "histo/errors.hpp"
#include "histo/solver.hpp"

using namespace histo;

namespace {

// Random constrained least-squares instance with C equal to the first M rows
// of W, the shape the reorder step produces.
struct Instance {
  Eigen::MatrixXd w, c;
  Eigen::VectorXd b, d;
};

Instance random_instance(int n, int bigd, int bigm, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Instance ins;
  ins.w = Eigen::MatrixXd(n, bigd);
  for (Eigen::Index i = 0; i < ins.w.rows(); ++i) {
    for (Eigen::Index j = 0; j < ins.w.cols(); ++j) ins.w(i, j) = u(rng);
  }
  ins.c = ins.w.topRows(bigm);
  ins.b = Eigen::VectorXd(n);
  for (Eigen::Index i = 0; i < n; ++i) ins.b(i) = u(rng);
  ins.d = ins.b.head(bigm);
  return ins;
}

double grid_sup_diff(const Histopolant& h, const Field& f, int res = 51) {
  const EvaluationGrid grid = EvaluationGrid::make(GridKind::uniform, res);
  double worst = 0.0;
  for (const Point2& p : grid.points) {
    worst = std::max(worst, std::abs(h.evaluate(p) - f(p.x, p.y)));
  }
  return worst;
}

}  // namespace

TEST_CASE("histopolation of a constant") {
  const Triangulation tri = friedrichs_keller(4);
  const SelectionResult sel = extract_padua(tri, 2);
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 2);
  const Eigen::MatrixXd v = moment_matrix(tri, sel.indices, basis);
  const Eigen::VectorXd data = Eigen::VectorXd::Constant(v.rows(), 3.25);
  const Histopolant h = histopolate(v, data, basis, Method::padua);
  CHECK(h.coeffs(0) == doctest::Approx(3.25).epsilon(1e-10));
  CHECK(h.coeffs.tail(h.coeffs.size() - 1).lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("histopolation reproduces polynomials of degree m") {
  const Triangulation tri = friedrichs_keller(8);
  const Field f = [](double x, double y) { return x + y; };
  for (Method method : {Method::padua, Method::fekete, Method::leja}) {
    const Histopolant h = pipeline(tri, method, 1, std::nullopt, f);
    CHECK(grid_sup_diff(h, f) <= 1e-9);
  }
}

TEST_CASE("single triangle, m = 0") {
  Triangulation tri;
  tri.vertices = {{0, 0}, {1, 0}, {0, 1}};
  tri.triangles = {{0, 1, 2}};
  tri.recompute_area();
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 0);
  const Eigen::MatrixXd v = moment_matrix(tri, basis);
  Eigen::VectorXd data(1);
  data << 0.75;
  const Histopolant h = histopolate(v, data, basis, Method::padua);
  CHECK(h.evaluate({0.2, 0.3}) == doctest::Approx(0.75));
}

TEST_CASE("regression solution matches direct elimination") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance ins = random_instance(20, 10, 6, 1000 + seed);
    const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 3);
    const Histopolant h =
        histopolate_regress(ins.w, ins.c, ins.b, ins.d, basis, Method::padua, 2);
    const Eigen::VectorXd ref = solve_regress_elimination(ins.w, ins.c, ins.b, ins.d);
    CHECK((h.coeffs - ref).lpNorm<Eigen::Infinity>() <=
          1e-8 * (1.0 + ref.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("regression satisfies the constraints exactly") {
  const Instance ins = random_instance(30, 15, 10, 77);
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 4);
  const Histopolant h = histopolate_regress(ins.w, ins.c, ins.b, ins.d, basis, Method::leja, 3);
  CHECK((ins.c * h.coeffs - ins.d).lpNorm<Eigen::Infinity>() <=
        1e-8 * (1.0 + ins.d.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("regression minimizes the residual among feasible vectors") {
  const Instance ins = random_instance(25, 10, 6, 4242);
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 3);
  const Histopolant h = histopolate_regress(ins.w, ins.c, ins.b, ins.d, basis, Method::padua, 2);
  const double opt = (ins.w * h.coeffs - ins.b).norm();
  // Random feasible perturbations (nullspace of C) never improve the norm.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(ins.c);
  const Eigen::MatrixXd null_basis = lu.kernel();
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::VectorXd z(null_basis.cols());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = u(rng);
    const Eigen::VectorXd candidate = h.coeffs + null_basis * z;
    CHECK((ins.w * candidate - ins.b).norm() >= opt - 1e-10);
  }
}

TEST_CASE("projector property on the regression operator") {
  const Triangulation tri = friedrichs_keller(6);
  const int m = 2, d = 3;
  const SelectionResult sel = extract_padua(tri, m);
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, d);
  const std::vector<int> order = reorder_indices(sel, tri.size());
  const Eigen::MatrixXd w = moment_matrix(tri, order, basis);
  const Eigen::MatrixXd c = w.topRows(dimension(m));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    Eigen::VectorXd b(w.rows());
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = u(rng);
    const Histopolant h1 =
        histopolate_regress(w, c, b, b.head(c.rows()), basis, Method::padua, m);
    // Averages of the first approximant become the new data.
    const Eigen::VectorXd b2 = w * h1.coeffs;
    const Histopolant h2 =
        histopolate_regress(w, c, b2, b2.head(c.rows()), basis, Method::padua, m);
    CHECK((h2.coeffs - h1.coeffs).lpNorm<Eigen::Infinity>() <=
          1e-8 * (1.0 + h1.coeffs.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("linearity of both solvers in the data") {
  const Triangulation tri = friedrichs_keller(5);
  const int m = 2;
  const SelectionResult sel = extract_leja(tri, m);
  const auto basis_m = TotalDegreeBasis::make(BasisKind::chebyshev_product, m);
  const Eigen::MatrixXd v = moment_matrix(tri, sel.indices, basis_m);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    Eigen::VectorXd f(v.rows()), g(v.rows());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      f(i) = u(rng);
      g(i) = u(rng);
    }
    const double alpha = u(rng), beta = u(rng);
    const Eigen::VectorXd mixed =
        histopolate(v, alpha * f + beta * g, basis_m, Method::leja).coeffs;
    const Eigen::VectorXd apart = alpha * histopolate(v, f, basis_m, Method::leja).coeffs +
                                  beta * histopolate(v, g, basis_m, Method::leja).coeffs;
    CHECK((mixed - apart).lpNorm<Eigen::Infinity>() <=
          1e-10 * (1.0 + apart.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("integral preservation on selected triangles") {
  const Triangulation tri = friedrichs_keller(6);
  const int m = 2;
  const Field f = [](double x, double y) { return std::sin(x) * std::cos(2 * y); };
  const SelectionResult sel = extract_padua(tri, m);
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, m);
  const Eigen::MatrixXd v = moment_matrix(tri, sel.indices, basis);
  const Eigen::VectorXd data = averages(f, tri, sel.indices, m + 10);
  const Histopolant h = histopolate(v, data, basis, Method::padua);
  // The histopolation conditions force equal weighted sums of averages.
  double lhs = 0.0, rhs = 0.0;
  const Eigen::VectorXd fitted = v * h.coeffs;
  for (Eigen::Index k = 0; k < data.size(); ++k) {
    const double a = tri.triangle_area(sel.indices[static_cast<std::size_t>(k)]);
    lhs += a * fitted(k);
    rhs += a * data(k);
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("pipeline basics") {
  const Triangulation tri = friedrichs_keller(8);
  const Field one = [](double, double) { return 1.0; };
  for (Method method : {Method::padua, Method::fekete, Method::leja}) {
    const Histopolant h = pipeline(tri, method, 2, std::nullopt, one);
    CHECK(grid_sup_diff(h, one) <= 1e-9);
  }
  // x*y is reproduced exactly for m >= 2.
  const Field xy = [](double x, double y) { return x * y; };
  CHECK(grid_sup_diff(pipeline(tri, Method::fekete, 2, std::nullopt, xy), xy) <= 1e-9);
  CHECK(grid_sup_diff(pipeline(tri, Method::leja, 2, std::nullopt, xy), xy) <= 1e-9);
}

TEST_CASE("pipeline produces a finite approximation of f1 on FK(20)") {
  const Triangulation tri = friedrichs_keller(20);
  const Field f1 = [](double x, double y) {
    return std::exp(x + y) * std::sin(3.14159265358979323846 * x * y);
  };
  const int m = fk_max_degree(20);
  const Histopolant h = pipeline(tri, Method::padua, m, std::nullopt, f1);
  const double err = grid_sup_diff(h, f1, 101);
  CHECK(std::isfinite(err));
  CHECK(err < 4.71);
}

TEST_CASE("regression pipeline reproduces polynomials in P_d") {
  const Triangulation tri = friedrichs_keller(6);
  const Field cubic = [](double x, double y) { return x * x * x - 2.0 * x * y + 0.5; };
  const Histopolant h = pipeline(tri, Method::padua, 2, 3, cubic);
  CHECK(grid_sup_diff(h, cubic) <= 1e-8);
}

TEST_CASE("histopolant JSON round trip") {
  const Triangulation tri = friedrichs_keller(5);
  const Field f = [](double x, double y) { return std::cos(x + 2 * y); };
  const Histopolant h = pipeline(tri, Method::leja, 2, std::nullopt, f);
  std::stringstream s;
  save_histopolant(h, s);
  const Histopolant r = load_histopolant(s);
  CHECK(r.method == h.method);
  CHECK(r.m == h.m);
  CHECK(r.d == h.d);
  CHECK((r.coeffs - h.coeffs).lpNorm<Eigen::Infinity>() == doctest::Approx(0.0));
}

TEST_CASE("shape violations are rejected") {
  const auto basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, 3);
  // D - M > N - M.
  const Instance tight = random_instance(9, 10, 6, 2);
  CHECK_THROWS_AS(
      histopolate_regress(tight.w, tight.c, tight.b, tight.d, basis, Method::padua, 2),
      DimensionMismatch);

  // Rank-deficient constraints.
  Instance bad = random_instance(20, 10, 6, 1);
  bad.c.row(1) = bad.c.row(0);
  bad.w.row(1) = bad.w.row(0);
  bad.b(1) = bad.b(0);
  bad.d = bad.b.head(6);
  CHECK_THROWS_AS(histopolate_regress(bad.w, bad.c, bad.b, bad.d, basis, Method::padua, 2),
                  RankDeficientConstraints);
}
