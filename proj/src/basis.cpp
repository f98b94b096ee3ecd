#include "histo/basis.hpp"

#include <cmath>

#include "histo/errors.hpp"

namespace histo {

std::string to_string(BasisKind kind) {
  return kind == BasisKind::chebyshev_product ? "chebyshev_product" : "monomial";
}

BasisKind basis_kind_from_string(const std::string& s) {
  if (s == "chebyshev_product") return BasisKind::chebyshev_product;
  if (s == "monomial") return BasisKind::monomial;
  throw ParseError("unknown basis kind: " + s);
}

int dimension(int m) {
  if (m < 0) throw DimensionMismatch("dimension: negative degree");
  return (m + 1) * (m + 2) / 2;
}

TotalDegreeBasis TotalDegreeBasis::make(BasisKind kind, int degree) {
  if (degree < 0) throw DimensionMismatch("TotalDegreeBasis: negative degree");
  TotalDegreeBasis b;
  b.kind = kind;
  b.degree = degree;
  b.exponents.reserve(static_cast<std::size_t>(dimension(degree)));
  for (int grade = 0; grade <= degree; ++grade) {
    for (int a = 0; a <= grade; ++a) {
      b.exponents.emplace_back(a, grade - a);
    }
  }
  return b;
}

namespace {

// T_0..T_n at x by the three-term recurrence.
void chebyshev_values(double x, int n, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  if (n >= 1) out[1] = x;
  for (int k = 2; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] =
        2.0 * x * out[static_cast<std::size_t>(k - 1)] - out[static_cast<std::size_t>(k - 2)];
  }
}

void power_values(double x, int n, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * x;
  }
}

}  // namespace

std::vector<double> eval_basis(const TotalDegreeBasis& basis, const Point2& p) {
  std::vector<double> tx, ty;
  if (basis.kind == BasisKind::chebyshev_product) {
    chebyshev_values(p.x, basis.degree, tx);
    chebyshev_values(p.y, basis.degree, ty);
  } else {
    power_values(p.x, basis.degree, tx);
    power_values(p.y, basis.degree, ty);
  }
  std::vector<double> out;
  out.reserve(basis.exponents.size());
  for (const auto& [a, b] : basis.exponents) {
    out.push_back(tx[static_cast<std::size_t>(a)] * ty[static_cast<std::size_t>(b)]);
  }
  return out;
}

double eval_poly(std::span<const double> coeffs, const TotalDegreeBasis& basis, const Point2& p) {
  if (static_cast<int>(coeffs.size()) != basis.size()) {
    throw DimensionMismatch("eval_poly: coefficient length does not match basis");
  }
  const std::vector<double> vals = eval_basis(basis, p);
  double sum = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    sum += coeffs[k] * vals[k];
  }
  return sum;
}

}  // namespace histo
