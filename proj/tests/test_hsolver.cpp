#include <doctest.h>

#include <cmath>

#include "poincare/common.hpp"
#include "poincare/hsolver/fit.hpp"
#include "poincare/hsolver/hclosed.hpp"
#include "poincare/hsolver/vp.hpp"

using namespace poincare;
using namespace poincare::hsolver;

TEST_CASE("closed form h_{3/2}") {
  CHECK(h_closed_32(0.0) == doctest::Approx(7.0 / 3 - 64 / (9 * pi)).epsilon(1e-15));
  for (double u : {0.3, 1.9, 2.1, 7.5, 300.0}) CHECK(h_closed_32(u) == h_closed_32(-u));
  // both branches agree at the switch
  CHECK(h_closed_32(2.0 + 1e-12) == doctest::Approx(h_closed_32(2.0 - 1e-12)).epsilon(1e-11));
  CHECK(static_cast<double>(h_closed_32(Real50(3.0))) == doctest::Approx(h_closed_32(3.0)).epsilon(1e-14));
  // the first term alone also solves the ODE with the same source
  CHECK(std::abs(ode_residual_jet([](auto u) { return h_closed_32_first(u); }, 1.5, 12, 0.7)) < 1e-12);
}

TEST_CASE("ODE residual and decay") {
  for (double u : {-20.0, -3.0, 0.0, 0.5, 2.0, 11.0})
    CHECK(std::abs(ode_residual_jet([](auto v) { return h_closed_32(v); }, 1.5, 12, u)) < 1e-10);
  // finite differences as a second opinion
  CHECK(std::abs(ode_residual([](double v) { return h_closed_32(v); }, 1.5, 12, 0.8)) < 1e-7);
  // lim u^3 h = 1/6, against the 50-digit value at u = 1e12 (correction O(1/u))
  Real50 U = 1e12;
  CHECK(h32_c_inf() == doctest::Approx(1.0 / 6).epsilon(1e-15));
  CHECK(h32_c_inf() == doctest::Approx(static_cast<double>(U * U * U * h_closed_32(U))).epsilon(1e-9));
}

TEST_CASE("half-integer ansatz fit reproduces h_{3/2}") {
  const HalfIntAnsatz& f = fit_halfint(1);
  REQUIRE(f.exact_ABC);
  CHECK(f.residual_bound < 1e-8);
  CHECK(std::abs(f.decay_ratio - 1) < 0.05);
  for (double u : {0.0, 0.5, 2.0, 10.0}) CHECK(f(u) == doctest::Approx(h_closed_32(u)).epsilon(1e-12));
  const auto& q = *f.exact_ABC;
  // A = (5/2, 1), B = (5/2, 1), C = (-17/6, 0, 0, 0)
  CHECK(q[0] == mpq_class(5, 2));
  CHECK(q[1] == 1);
  CHECK(q[2] == mpq_class(5, 2));
  CHECK(q[3] == 1);
  CHECK(q[4] == mpq_class(-17, 6));
}

TEST_CASE("variation of parameters") {
  // the particular solution differs from h_{3/2} by a homogeneous one
  for (double u : {0.5, 2.0}) {
    double r = ode_residual([](double v) { return h_vp_numeric(1.5, 12, v); }, 1.5, 12, u);
    CHECK(std::abs(r) < 1e-6);
  }
  CHECK_THROWS_AS(h_vp_numeric(1.5, 11, 0.5), UnsupportedError);
}
