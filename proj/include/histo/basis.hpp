#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "histo/geometry.hpp"

namespace histo {

enum class BasisKind { chebyshev_product, monomial };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string& s);

/// dim P_m(R^2) = (m+1)(m+2)/2.
int dimension(int m);

/// Graded total-degree basis of P_d(R^2). The exponent pairs (a, b) are
/// ordered by grade a+b, then by a ascending, so for every m <= d the first
/// dimension(m) elements span P_m(R^2).
struct TotalDegreeBasis {
  BasisKind kind = BasisKind::chebyshev_product;
  int degree = 0;
  std::vector<std::pair<int, int>> exponents;

  static TotalDegreeBasis make(BasisKind kind, int degree);
  int size() const { return static_cast<int>(exponents.size()); }
};

/// Evaluates all basis functions at p. Chebyshev kind: T_a(x) * T_b(y) via
/// the three-term recurrence; monomial kind: x^a * y^b.
std::vector<double> eval_basis(const TotalDegreeBasis& basis, const Point2& p);

/// Dot product of coeffs with eval_basis. Throws DimensionMismatch.
double eval_poly(std::span<const double> coeffs, const TotalDegreeBasis& basis, const Point2& p);

}  // namespace histo
