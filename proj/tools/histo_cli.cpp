#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "histo/analysis.hpp"
#include "histo/bench.hpp"
#include "histo/errors.hpp"
#include "histo/mesh.hpp"
#include "histo/selection.hpp"
#include "histo/solver.hpp"

namespace {

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw histo::Error("cannot open output file: " + path);
  return file;
}

std::vector<int> parse_range(const std::string& spec) {
  // "a:b" or "a:b:step" or a comma list.
  std::vector<int> out;
  if (spec.find(':') != std::string::npos) {
    int a = 0, b = 0, step = 1;
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    a = std::stoi(spec.substr(0, c1));
    if (c2 == std::string::npos) {
      b = std::stoi(spec.substr(c1 + 1));
    } else {
      b = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
      step = std::stoi(spec.substr(c2 + 1));
    }
    for (int n = a; n <= b; n += step) out.push_back(n);
  } else {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      const auto comma = spec.find(',', pos);
      out.push_back(std::stoi(spec.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial histopolation on triangle selections"};
  app.require_subcommand(1);

  // --- mesh fk / mesh random-axes ---
  auto* mesh_cmd = app.add_subcommand("mesh", "Generate a triangulation");
  mesh_cmd->require_subcommand(1);
  int mesh_n = 10;
  std::uint64_t mesh_seed = 0;
  std::string mesh_out;
  auto* mesh_fk = mesh_cmd->add_subcommand("fk", "Friedrichs-Keller mesh of [-1,1]^2");
  mesh_fk->add_option("--n", mesh_n, "Subdivisions per axis")->required();
  mesh_fk->add_option("--out", mesh_out, "Output mesh file (JSON)");
  auto* mesh_ra = mesh_cmd->add_subcommand("random-axes", "Randomly partitioned axes");
  mesh_ra->add_option("--n", mesh_n, "Cells per axis")->required();
  mesh_ra->add_option("--seed", mesh_seed, "RNG seed");
  mesh_ra->add_option("--out", mesh_out, "Output mesh file (JSON)");

  // --- select ---
  auto* select_cmd = app.add_subcommand("select", "Extract histopolation triangles");
  std::string sel_mesh, sel_method = "padua";
  int sel_degree = 1;
  select_cmd->add_option("--mesh", sel_mesh, "Mesh file")->required();
  select_cmd->add_option("--method", sel_method, "padua|fekete|leja");
  select_cmd->add_option("--degree", sel_degree, "Total degree m")->required();

  // --- histopolate ---
  auto* histo_cmd = app.add_subcommand("histopolate", "Fit a histopolant to a test function");
  std::string h_mesh, h_method = "padua", h_function = "f1", h_out;
  int h_degree = 1, h_ddeg = 0;
  bool h_regress = false;
  histo_cmd->add_option("--mesh", h_mesh, "Mesh file")->required();
  histo_cmd->add_option("--method", h_method, "padua|fekete|leja");
  histo_cmd->add_option("--degree", h_degree, "Total degree m")->required();
  histo_cmd->add_flag("--regress", h_regress, "Histopolation-regression mode");
  histo_cmd->add_option("--ddeg", h_ddeg, "Regression degree d (default m + floor(sqrt(m)))");
  histo_cmd->add_option("--function", h_function, "f1|f2|f3");
  histo_cmd->add_option("--out", h_out, "Output histopolant file (JSON)");

  // --- lebesgue ---
  auto* leb_cmd = app.add_subcommand("lebesgue", "Lebesgue constant of a selection");
  std::string l_mesh, l_method = "padua";
  int l_degree = 1, l_grid = 101;
  leb_cmd->add_option("--mesh", l_mesh, "Mesh file")->required();
  leb_cmd->add_option("--method", l_method, "padua|fekete|leja");
  leb_cmd->add_option("--degree", l_degree, "Total degree m")->required();
  leb_cmd->add_option("--grid", l_grid, "Grid resolution per axis");

  // --- bound ---
  auto* bound_cmd = app.add_subcommand("bound", "Operator-norm bound zeta + eta");
  std::string b_mesh, b_method = "padua";
  int b_degree = 1, b_ddeg = 0;
  bound_cmd->add_option("--mesh", b_mesh, "Mesh file")->required();
  bound_cmd->add_option("--method", b_method, "padua|fekete|leja");
  bound_cmd->add_option("--degree", b_degree, "Total degree m")->required();
  bound_cmd->add_option("--ddeg", b_ddeg, "Regression degree d (default m + floor(sqrt(m)))");

  // --- convergence ---
  auto* conv_cmd = app.add_subcommand("convergence", "Convergence sweep over mesh sizes");
  std::string c_family = "fk", c_range = "10:40:10", c_methods = "padua,fekete,leja";
  std::string c_functions = "f1", c_out, c_format = "csv";
  std::uint64_t c_seed = 0;
  bool c_regress = false;
  int c_grid = 101;
  conv_cmd->add_option("--family", c_family, "fk|random-axes");
  conv_cmd->add_option("--n", c_range, "Range a:b[:step] or comma list");
  conv_cmd->add_option("--method", c_methods, "Comma list of methods");
  conv_cmd->add_option("--function", c_functions, "Comma list of f1|f2|f3");
  conv_cmd->add_flag("--regress", c_regress, "Regression mode, d = m + floor(sqrt(m))");
  conv_cmd->add_option("--seed", c_seed, "RNG seed for random meshes");
  conv_cmd->add_option("--grid", c_grid, "Error grid resolution");
  conv_cmd->add_option("--out", c_out, "Output file");
  conv_cmd->add_option("--format", c_format, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ofstream file;
    if (mesh_fk->parsed() || mesh_ra->parsed()) {
      const histo::Triangulation tri = mesh_fk->parsed()
                                           ? histo::friedrichs_keller(mesh_n)
                                           : histo::random_axes_fk(mesh_n, mesh_seed);
      if (mesh_out.empty()) {
        histo::save_mesh(tri, std::cout);
      } else {
        histo::save_mesh_file(tri, mesh_out);
        std::cout << "wrote " << tri.size() << " triangles to " << mesh_out << "\n";
      }
    } else if (select_cmd->parsed()) {
      const histo::Triangulation tri = histo::load_mesh_file(sel_mesh);
      const histo::Method method = histo::method_from_string(sel_method);
      histo::SelectionResult sel;
      switch (method) {
        case histo::Method::padua: sel = histo::extract_padua(tri, sel_degree); break;
        case histo::Method::fekete: sel = histo::extract_fekete(tri, sel_degree); break;
        case histo::Method::leja: sel = histo::extract_leja(tri, sel_degree); break;
      }
      for (std::size_t i = 0; i < sel.indices.size(); ++i) {
        std::cout << sel.indices[i] << (i + 1 < sel.indices.size() ? ' ' : '\n');
      }
      std::cerr << "condition estimate: " << sel.diagnostics.condition_estimate << "\n";
    } else if (histo_cmd->parsed()) {
      const histo::Triangulation tri = histo::load_mesh_file(h_mesh);
      const histo::TestFunction fn = histo::test_function(h_function);
      std::optional<int> ddeg;
      if (h_regress) {
        ddeg = h_ddeg > 0 ? h_ddeg
                          : h_degree + static_cast<int>(std::sqrt(static_cast<double>(h_degree)));
      }
      const histo::Histopolant h = histo::pipeline(tri, histo::method_from_string(h_method),
                                                   h_degree, ddeg, fn.evaluator);
      const auto grid = histo::EvaluationGrid::make(histo::GridKind::uniform, 101);
      std::cout << "sup_error: " << histo::sup_error(fn.evaluator, h, grid) << "\n";
      if (!h_out.empty()) {
        std::ofstream hf(h_out);
        histo::save_histopolant(h, hf);
      }
    } else if (leb_cmd->parsed()) {
      const histo::Triangulation tri = histo::load_mesh_file(l_mesh);
      const histo::Method method = histo::method_from_string(l_method);
      histo::SelectionResult sel;
      switch (method) {
        case histo::Method::padua: sel = histo::extract_padua(tri, l_degree); break;
        case histo::Method::fekete: sel = histo::extract_fekete(tri, l_degree); break;
        case histo::Method::leja: sel = histo::extract_leja(tri, l_degree); break;
      }
      const auto grid = histo::EvaluationGrid::make(histo::GridKind::uniform, l_grid);
      std::cout << histo::lebesgue_constant(sel, tri, grid) << "\n";
    } else if (bound_cmd->parsed()) {
      const histo::Triangulation tri = histo::load_mesh_file(b_mesh);
      const histo::Method method = histo::method_from_string(b_method);
      const int d = b_ddeg > 0
                        ? b_ddeg
                        : b_degree + static_cast<int>(std::sqrt(static_cast<double>(b_degree)));
      histo::SelectionResult sel;
      switch (method) {
        case histo::Method::padua: sel = histo::extract_padua(tri, b_degree); break;
        case histo::Method::fekete: sel = histo::extract_fekete(tri, b_degree); break;
        case histo::Method::leja: sel = histo::extract_leja(tri, b_degree); break;
      }
      const auto basis = histo::TotalDegreeBasis::make(histo::BasisKind::chebyshev_product, d);
      const auto order = histo::reorder_indices(sel, tri.size());
      const Eigen::MatrixXd w = histo::moment_matrix(tri, order, basis);
      const auto nb = histo::norm_bound(w, w.topRows(histo::dimension(b_degree)));
      std::cout << "zeta: " << nb.zeta << "\neta: " << nb.eta
                << "\nzeta+eta: " << nb.zeta + nb.eta << "\n";
    } else if (conv_cmd->parsed()) {
      histo::SweepConfig cfg;
      cfg.mesh_family = c_family == "random-axes" ? "random-axes" : "fk";
      cfg.n_values = parse_range(c_range);
      cfg.regression = c_regress;
      cfg.seed = c_seed;
      cfg.grid_resolution = c_grid;
      std::size_t pos = 0;
      while (pos < c_methods.size()) {
        const auto comma = c_methods.find(',', pos);
        cfg.methods.push_back(histo::method_from_string(c_methods.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      pos = 0;
      while (pos < c_functions.size()) {
        const auto comma = c_functions.find(',', pos);
        cfg.functions.push_back(c_functions.substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      const auto records = histo::convergence_sweep(cfg);
      std::ostream& out = output_stream(c_out, file);
      if (c_format == "json") {
        histo::write_json(records, out);
      } else {
        histo::write_csv(records, out);
      }
    }
  } catch (const histo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
