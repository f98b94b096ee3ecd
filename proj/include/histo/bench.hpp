#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "histo/analysis.hpp"
#include "histo/solver.hpp"

namespace histo {

struct TestFunction {
  std::string id;
  Field evaluator;
  double known_sup_norm = 0.0;
};

/// The benchmark functions: f1 = e^{x+y} sin(pi x y), f2 = |x+y|,
/// f3 = 1/(1 + 10 (x^2 + y^2)).
TestFunction test_function(const std::string& id);

/// Max over the grid of |f(xi) - h(xi)|.
double sup_error(const Field& f, const Histopolant& h, const EvaluationGrid& grid);

struct SweepConfig {
  std::string mesh_family = "fk";  // "fk" or "random-axes"
  std::vector<int> n_values;
  std::vector<Method> methods;
  std::vector<std::string> functions;
  bool regression = false;  // when set, d = m + floor(sqrt(m))
  std::uint64_t seed = 0;
  int grid_resolution = 101;
  bool with_bound = false;  // also record zeta + eta (regression runs)
};

struct ConvergenceRecord {
  int n = 0;
  int N = 0;
  int m = 0;
  int d = 0;
  Method method = Method::padua;
  std::string mode;  // "histopolation" or "regression"
  std::string function_id;
  double sup_error = 0.0;
  double lebesgue = 0.0;
  double cond_estimate = 0.0;
  std::optional<double> zeta_eta;
  double wall_time = 0.0;  // seconds
  std::string status = "ok";
};

/// Runs the configured sweep. Per-record failures (attribution failures on
/// random meshes, singular systems) are captured in the status column and
/// never abort the sweep. For each n, m = fk_max_degree(n).
std::vector<ConvergenceRecord> convergence_sweep(const SweepConfig& config);

void write_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out);
void write_json(const std::vector<ConvergenceRecord>& records, std::ostream& out);

}  // namespace histo
