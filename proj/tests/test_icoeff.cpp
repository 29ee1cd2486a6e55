#include <doctest.h>

#include <cmath>

#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/arith.hpp"

using namespace poincare;
using namespace poincare::icoeff;

// values of the 2-D quadrature oracle (tolerance 1e-6 or better), frozen
constexpr double kQuad12half = 0.000282660489161;  // I(1,2; 0.5)
constexpr double kQuadOpp11 = 0.00964886712165;    // I(1,-1; 1)
constexpr double kQuadAxis11 = 0.00335559416496;   // I(1,0; 1)

TEST_CASE("I1 is alpha times sqrt(y) K_{7/2}") {
  for (auto [n1, n2, y] : {std::tuple{1, 2, 0.5}, {2, -3, 2.0}, {-1, 3, 1.0}, {3, 3, 0.5}}) {
    const double s1 = double(numkit::sigma2(std::abs(n1))), s2 = double(numkit::sigma2(std::abs(n2)));
    double lhs = 4 / (y * n1 * n1 * n2 * n2) * s1 * s2 * i1_closed(n1, n2, y);
    double rhs = alpha_pair(n1, n2, y) * std::sqrt(y) * numkit::bessel_k72(2 * pi * std::abs(n1 + n2) * y);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("alpha symmetries and special sectors") {
  CHECK(alpha_pair(1, 2) == doctest::Approx(alpha_pair(2, 1)).epsilon(1e-14));
  CHECK(alpha_pair(-1, -2) == doctest::Approx(alpha_pair(1, 2)).epsilon(1e-14));
  CHECK(alpha_pair(0, 0) == 0);
  // axis: 64 sigma2(n) (n^2 pi^4 - 90 zeta3) / (135 |n|^{5/2} pi)
  const double z3 = 1.2020569031595942;
  CHECK(alpha_pair(2, 0) == doctest::Approx(64 * 5 * (4 * std::pow(pi, 4) - 90 * z3) / (135 * std::pow(2, 2.5) * pi)));
  CHECK(alpha_tilde(1, 1) == doctest::Approx(-64).epsilon(1e-12));
}

TEST_CASE("explicit I2 agrees with the p2 route") {
  for (auto [n1, n2, y] : {std::tuple{1, 2, 0.5}, {2, -3, 1.0}, {-1, -1, 2.0}})
    CHECK(i2_closed(n1, n2, y) == doctest::Approx(i2_generic(n1, n2, y)).epsilon(1e-12));
  CHECK_THROWS_AS(i1_closed(1, -1, 1), PoleError);
  CHECK_THROWS_AS(i2_closed(1, 0, 1), DegenerateError);
}

TEST_CASE("closed forms against frozen quadrature values") {
  CHECK(i_total(1, 2, 0.5) == doctest::Approx(kQuad12half).epsilon(1e-8));
  auto lim = i_limit_opposite(1, 1);
  CHECK(lim.value == doctest::Approx(kQuadOpp11).epsilon(1e-10));
  CHECK(lim.lower_orders < 1e-30);
  CHECK(i_total(1, -1, 1) == lim.value);
  CHECK(i_axis(1, 1) == doctest::Approx(kQuadAxis11).epsilon(1e-10));
  CHECK(i_total(0, 1, 1) == i_axis(1, 1));
  // the zero mode solves y^2 f'' - 12 f = -const, giving I(0,0) = 2/5
  CHECK(i_total(0, 0, 1) == doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("pair coefficients") {
  auto pc = pair_coefficients(1, 2, 1.0);
  CHECK(pc.I1 == doctest::Approx(i1_closed(1, 2, 1.0)));
  CHECK(pc.I2 == doctest::Approx(i2_closed(1, 2, 1.0)));
  CHECK(pc.fhatP == doctest::Approx(fhatP_pair(1, 2, 1.0)));
}
