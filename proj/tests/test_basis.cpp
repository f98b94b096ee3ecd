#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "histo/basis.hpp"
#include "histo/errors.hpp"
#include "oracles.hpp"

using namespace histo;

TEST_CASE("dimension closed form") {
  CHECK(dimension(7) == 36);
  CHECK(dimension(0) == 1);
  CHECK(dimension(6) == 28);
  CHECK(dimension(5) == 21);
}

TEST_CASE("graded ordering with prefix property") {
  const auto b = TotalDegreeBasis::make(BasisKind::chebyshev_product, 6);
  REQUIRE(b.size() == dimension(6));
  for (int m = 0; m <= 6; ++m) {
    // The first dimension(m) pairs enumerate exactly the pairs with a+b <= m.
    const int prefix = dimension(m);
    for (int k = 0; k < prefix; ++k) {
      const auto& [ea, eb] = b.exponents[static_cast<std::size_t>(k)];
      CHECK(ea + eb <= m);
    }
    for (int k = prefix; k < b.size(); ++k) {
      const auto& [ea, eb] = b.exponents[static_cast<std::size_t>(k)];
      CHECK(ea + eb > m);
    }
  }
  // Within a grade, a ascends.
  CHECK(b.exponents[1] == std::pair<int, int>{0, 1});
  CHECK(b.exponents[2] == std::pair<int, int>{1, 0});
}

TEST_CASE("eval_basis chebyshev values") {
  const auto b = TotalDegreeBasis::make(BasisKind::chebyshev_product, 3);
  const auto vals = eval_basis(b, {0.3, 0.9});
  CHECK(vals[0] == doctest::Approx(1.0));  // (0,0)
  // entry for (1,0) = T_1(x) = x
  const auto it10 = std::find(b.exponents.begin(), b.exponents.end(), std::pair<int, int>{1, 0});
  CHECK(vals[static_cast<std::size_t>(it10 - b.exponents.begin())] == doctest::Approx(0.3));

  const auto b2 = TotalDegreeBasis::make(BasisKind::chebyshev_product, 3);
  const auto v2 = eval_basis(b2, {0.5, -0.4});
  const auto it21 = std::find(b2.exponents.begin(), b2.exponents.end(), std::pair<int, int>{2, 1});
  CHECK(v2[static_cast<std::size_t>(it21 - b2.exponents.begin())] == doctest::Approx(0.2));
}

TEST_CASE("chebyshev recurrence matches trigonometric identity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto b = TotalDegreeBasis::make(BasisKind::chebyshev_product, 8);
  for (int rep = 0; rep < 50; ++rep) {
    const Point2 p{u(rng), u(rng)};
    const auto vals = eval_basis(b, p);
    for (int k = 0; k < b.size(); ++k) {
      const auto& [ea, eb] = b.exponents[static_cast<std::size_t>(k)];
      const double ref = testing::chebyshev_trig(ea, p.x) * testing::chebyshev_trig(eb, p.y);
      CHECK(vals[static_cast<std::size_t>(k)] == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("chebyshev values bounded by 1 on a dense grid") {
  const auto b = TotalDegreeBasis::make(BasisKind::chebyshev_product, 10);
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    for (int j = 0; j <= 200; ++j) {
      const Point2 p{-1.0 + i / 100.0, -1.0 + j / 100.0};
      for (double v : eval_basis(b, p)) worst = std::max(worst, std::abs(v));
    }
  }
  CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("monomial kind") {
  const auto b = TotalDegreeBasis::make(BasisKind::monomial, 4);
  const auto vals = eval_basis(b, {0.5, 2.0});
  const auto it = std::find(b.exponents.begin(), b.exponents.end(), std::pair<int, int>{2, 1});
  CHECK(vals[static_cast<std::size_t>(it - b.exponents.begin())] == doctest::Approx(0.5));
}

TEST_CASE("eval_poly") {
  const auto b = TotalDegreeBasis::make(BasisKind::chebyshev_product, 4);
  std::vector<double> e1(static_cast<std::size_t>(b.size()), 0.0);
  e1[0] = 1.0;
  CHECK(eval_poly(e1, b, {0.2, -0.7}) == doctest::Approx(1.0));

  std::vector<double> zero(static_cast<std::size_t>(b.size()), 0.0);
  CHECK(eval_poly(zero, b, {0.9, 0.9}) == doctest::Approx(0.0));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> coeffs(static_cast<std::size_t>(b.size()));
  for (auto& c : coeffs) c = u(rng);
  const Point2 p{u(rng), u(rng)};
  const auto vals = eval_basis(b, p);
  double ref = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) ref += coeffs[k] * vals[k];
  CHECK(eval_poly(coeffs, b, p) == doctest::Approx(ref).epsilon(1e-14));

  std::vector<double> wrong(3, 1.0);
  CHECK_THROWS_AS(eval_poly(wrong, b, p), DimensionMismatch);
}
