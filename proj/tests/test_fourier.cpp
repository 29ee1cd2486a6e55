#include <doctest.h>

#include <cmath>

#include "poincare/fourier/fourier.hpp"
#include "poincare/hsolver/hclosed.hpp"

using namespace poincare;
using namespace poincare::fourier;

constexpr double kZeta3 = 1.2020569031595942854;

TEST_CASE("transform of h_{3/2}") {
  // int h du = 1/6 and the t = 0.7 value, both from mpmath quadrature
  CHECK(h_hat(0).value == doctest::Approx(1.0 / 6).epsilon(1e-10));
  CHECK(h_hat(0.7).value == doctest::Approx(0.00329481173464491827).epsilon(1e-9));
  CHECK(h_hat(-0.7).value == h_hat(0.7).value);
  CHECK(h_hat(0.7).err < 1e-10);
}

TEST_CASE("weights and Sigma^{0,1}") {
  CHECK(default_scale() == doctest::Approx(4 * kZeta3 * kZeta3).epsilon(1e-15));
  CHECK(ramanujan_weight(2) == doctest::Approx(1.25 / kZeta3).epsilon(1e-15));
  CHECK(ramanujan_weight(0) == doctest::Approx(pi * pi / 6 / kZeta3).epsilon(1e-15));
  CHECK(sigma01_mode(2, 1) == doctest::Approx(sigma01_direct(2, 1, 200)).epsilon(1e-6));
  CHECK(sigma00_identity(1.3) == doctest::Approx(hsolver::h32_c_inf() * std::pow(1.3, 3)));
}

TEST_CASE("degenerating family tends to the diagonal term") {
  UpperHalfPoint z{0.3, 1.1};
  const double target = hsolver::h32_c_inf() * std::pow(z.y / (z.x * z.x + z.y * z.y), 3);
  CHECK(degenerating_family(1, 0, z, 1e-4) == doctest::Approx(target).epsilon(1e-3));
  CHECK(std::abs(degenerating_family(1, 0, z, 1e-4) - target) < std::abs(degenerating_family(1, 0, z, 1e-3) - target));
}

TEST_CASE("per-pair PDE with one scale") {
  const double s = calibrate_scale(1, 2, 1);
  CHECK(s == doctest::Approx(default_scale()).epsilon(1e-12));
  for (auto [n1, n2, y] : {std::tuple{2, -3, 0.5}, {1, 1, 2.0}, {-3, 1, 1.0}}) {
    CHECK(pde_mode_residual(n1, n2, y, s).relative < 1e-10);
    CHECK(pde_mode_residual_fd(n1, n2, y, s).relative < 1e-6);
    CHECK(homogeneous_residual(n1, n2, y) < 1e-12);
  }
  CHECK_THROWS_AS(pde_mode_residual(1, -1, 1, s), DegenerateError);
}

TEST_CASE("assembly") {
  auto a = assemble_mode(3, 1.1, 8, Exec::serial), b = assemble_mode(3, 1.1, 8, Exec::parallel);
  CHECK(a.total == b.total);
  CHECK(a.sigma00 == 0);
  CHECK(a.total == doctest::Approx(a.sigma00 + a.sigma01 + a.pairs));
  auto m0 = assemble_mode(0, 1.1, 8);
  CHECK(m0.sigma00 == doctest::Approx(default_scale() * sigma00_identity(1.1)));
  auto f1 = assemble_f({0.2, 1.0}, 6), f2 = assemble_f({-0.2, 1.0}, 6);
  CHECK(f1.value == doctest::Approx(f2.value).epsilon(1e-14));
  CHECK(f1.modes.size() == 13);
  CHECK_THROWS_AS(assemble_f({0, 0.3}, 6), DomainError);
}
