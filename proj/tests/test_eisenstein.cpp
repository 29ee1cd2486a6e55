#include <doctest.h>

#include <cmath>

#include "poincare/common.hpp"
#include "poincare/eisenstein/eisenstein.hpp"

using namespace poincare;
using namespace poincare::eisenstein;

// E_{3/2}(i) = 2 zeta(3/2) beta(3/2) / zeta(3) (Dirichlet beta), mpmath
constexpr double kEi = 3.757568239638309980088712;

TEST_CASE("lattice evaluator") {
  CHECK(eisenstein_lattice(1.5, {0, 1}, 1000) == doctest::Approx(kEi).epsilon(1e-7));
  CHECK(eisenstein_lattice(1.5, {0, 1}, 300, Exec::serial) ==
        doctest::Approx(eisenstein_lattice(1.5, {0, 1}, 300, Exec::parallel)).epsilon(1e-14));
  // x -> x + 1 and z -> -1/z
  UpperHalfPoint z{0.3, 0.8};
  const double r = z.x * z.x + z.y * z.y;
  const double e = eisenstein_lattice(1.5, z, 800);
  CHECK(eisenstein_lattice(1.5, {z.x + 1, z.y}, 800) == doctest::Approx(e).epsilon(1e-12));
  CHECK(eisenstein_lattice(1.5, {-z.x / r, z.y / r}, 800) == doctest::Approx(e).epsilon(1e-7));
  CHECK_THROWS_AS(eisenstein_lattice(1.0, z, 10), DomainError);
}

TEST_CASE("Fourier modes") {
  auto c = constant_mode_closed();
  CHECK(c.c_main == 1);
  CHECK(c.c_sec == doctest::Approx(pi * pi / (3 * 1.2020569031595942)).epsilon(1e-14));
  // first mode at y = 1: 2 pi^{3/2} sqrt(y) K_1(2 pi y) / (Gamma(3/2) zeta(3)) (mpmath)
  CHECK(eisenstein_mode(1.5, 1, 1) == doctest::Approx(0.01031811241475373394).epsilon(1e-12));
  CHECK(eisenstein_mode(1.5, -2, 1.3) == eisenstein_mode(1.5, 2, 1.3));
  CHECK(eisenstein_fourier({0, 1}, 30) == doctest::Approx(kEi).epsilon(1e-12));
  CHECK(rhs_pair_mode(1, 2, 0.7) == doctest::Approx(eisenstein_mode(1.5, 1, 0.7) * eisenstein_mode(1.5, 2, 0.7)));
  CHECK(lattice_mode(1.5, 1, 1, 600) == doctest::Approx(eisenstein_mode(1.5, 1, 1)).epsilon(1e-5));
  auto cal = calibrate_constant_mode(1, 2, 600);
  CHECK(cal.c_main == doctest::Approx(1).epsilon(1e-6));
  CHECK(cal.c_sec == doctest::Approx(c.c_sec).epsilon(1e-6));
}

TEST_CASE("unfolding identities") {
  CHECK(unfold_identity_check(2, 1, 3, 5, {0.2, 0.9}) < 1e-12);
  CHECK(unfold_identity_check(-4, 7, 1, 2, {-0.4, 1.7}) < 1e-12);
  CHECK_THROWS_AS(unfold_identity_check(1, 2, 2, 4, {0, 1}), DegenerateError);
}
