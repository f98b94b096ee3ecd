#include "histo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "histo/errors.hpp"

namespace histo {

TestFunction test_function(const std::string& id) {
  if (id == "f1") {
    return {"f1",
            [](double x, double y) { return std::exp(x + y) * std::sin(std::numbers::pi * x * y); },
            4.71};
  }
  if (id == "f2") {
    return {"f2", [](double x, double y) { return std::abs(x + y); }, 2.0};
  }
  if (id == "f3") {
    return {"f3", [](double x, double y) { return 1.0 / (1.0 + 10.0 * (x * x + y * y)); }, 1.0};
  }
  throw ParseError("unknown test function: " + id);
}

double sup_error(const Field& f, const Histopolant& h, const EvaluationGrid& grid) {
  double best = 0.0;
  for (const Point2& p : grid.points) {
    best = std::max(best, std::abs(f(p.x, p.y) - h.evaluate(p)));
  }
  return best;
}

namespace {

ConvergenceRecord run_one(const Triangulation& tri, int n, int m, Method method,
                          const std::string& fid, bool regression, const EvaluationGrid& grid,
                          bool with_bound) {
  ConvergenceRecord rec;
  rec.n = n;
  rec.N = tri.size();
  rec.m = m;
  rec.method = method;
  rec.function_id = fid;
  rec.mode = regression ? "regression" : "histopolation";
  const int d = regression ? m + static_cast<int>(std::floor(std::sqrt(static_cast<double>(m)))) : m;
  rec.d = d;

  const TestFunction fn = test_function(fid);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Histopolant h =
        pipeline(tri, method, m, regression ? std::optional<int>(d) : std::nullopt, fn.evaluator);
    rec.sup_error = sup_error(fn.evaluator, h, grid);
    rec.cond_estimate = h.condition_estimate;

    SelectionResult sel;
    switch (method) {
      case Method::padua: sel = extract_padua(tri, m); break;
      case Method::fekete: sel = extract_fekete(tri, m); break;
      case Method::leja: sel = extract_leja(tri, m); break;
    }
    rec.lebesgue = lebesgue_constant(sel, tri, grid);

    if (with_bound && regression) {
      const TotalDegreeBasis basis = TotalDegreeBasis::make(BasisKind::chebyshev_product, d);
      const std::vector<int> order = reorder_indices(sel, tri.size());
      const Eigen::MatrixXd w = moment_matrix(tri, order, basis);
      const NormBoundFactors nb = norm_bound(w, w.topRows(dimension(m)));
      rec.zeta_eta = nb.zeta + nb.eta;
    }
  } catch (const Error& e) {
    rec.status = std::string("failed: ") + e.what();
  }
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::vector<ConvergenceRecord> convergence_sweep(const SweepConfig& config) {
  std::vector<ConvergenceRecord> records;
  const EvaluationGrid grid = EvaluationGrid::make(GridKind::uniform, config.grid_resolution);
  for (int n : config.n_values) {
    Triangulation tri;
    if (config.mesh_family == "random-axes") {
      tri = random_axes_fk(n, config.seed);
    } else if (config.mesh_family == "fk") {
      tri = friedrichs_keller(n);
    } else {
      throw ParseError("unknown mesh family: " + config.mesh_family);
    }
    const int m = fk_max_degree(n);
    for (Method method : config.methods) {
      for (const std::string& fid : config.functions) {
        records.push_back(
            run_one(tri, n, m, method, fid, config.regression, grid, config.with_bound));
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const ConvergenceRecord& a, const ConvergenceRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.method != b.method) return to_string(a.method) < to_string(b.method);
    return a.function_id < b.function_id;
  });
  return records;
}

void write_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
  out << "n,N,m,d,method,mode,function,sup_error,lebesgue,cond_estimate,zeta_eta,wall_time,status\n";
  out.precision(17);
  for (const auto& r : records) {
    out << r.n << ',' << r.N << ',' << r.m << ',' << r.d << ',' << to_string(r.method) << ','
        << r.mode << ',' << r.function_id << ',' << r.sup_error << ',' << r.lebesgue << ','
        << r.cond_estimate << ',';
    if (r.zeta_eta) out << *r.zeta_eta;
    out << ',' << r.wall_time << ',' << (r.status == "ok" ? "ok" : "failed") << '\n';
  }
}

void write_json(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"n", r.n},
                     {"N", r.N},
                     {"m", r.m},
                     {"d", r.d},
                     {"method", to_string(r.method)},
                     {"mode", r.mode},
                     {"function", r.function_id},
                     {"sup_error", r.sup_error},
                     {"lebesgue", r.lebesgue},
                     {"cond_estimate", r.cond_estimate},
                     {"wall_time", r.wall_time},
                     {"status", r.status}};
    if (r.zeta_eta) j["zeta_eta"] = *r.zeta_eta;
    arr.push_back(j);
  }
  out << arr.dump(2) << "\n";
}

}  // namespace histo
