#include <doctest.h>

#include <cmath>

#include "poincare/numkit/arith.hpp"
#include "poincare/numkit/legendre.hpp"
#include "poincare/numkit/mp.hpp"
#include "poincare/numkit/parallel.hpp"
#include "poincare/numkit/quadrature.hpp"
#include "poincare/numkit/special.hpp"

using namespace poincare;
using namespace poincare::numkit;

TEST_CASE("divisor sums and arithmetic functions") {
  CHECK(divisor_sigma(2, 6) == 50);
  CHECK(divisor_sigma(0, 12) == 6);
  CHECK(sigma2(9999) == divisor_sigma(2, 9999).get_si());
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(euler_phi(36) == 12);
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(12) == 0);
  // brute-force Ramanujan sums
  for (i64 q = 1; q <= 12; ++q)
    for (i64 n = -5; n <= 13; ++n) {
      double s = 0;
      for (i64 j = 1; j <= q; ++j)
        if (gcd(j, q) == 1) s += std::cos(2 * pi * double(j * n) / double(q));
      CHECK(ramanujan_sum(q, n) == std::llround(s));
    }
  auto e = ext_gcd(240, 46);
  CHECK(e.g == 2);
  CHECK(240 * e.x + 46 * e.y == 2);
}

TEST_CASE("Bernoulli and Hurwitz values are exact") {
  CHECK(bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_number(4) == mpq_class(-1, 30));
  CHECK(bernoulli_poly(3, mpq_class(1, 2)) == 0);
  // zeta(-3, 1/3) = -13/3240 (mpmath)
  CHECK(hurwitz_zeta_nonpos(-3, mpq_class(1, 3)) == mpq_class(-13, 3240));
  CHECK(hurwitz_zeta_nonpos(0, 1) == mpq_class(-1, 2));
  CHECK(hurwitz_zeta_nonpos(-2, 1) == 0);
  CHECK(hurwitz_zeta_nonpos(-1, 1) == mpq_class(-1, 12));
}

TEST_CASE("zeta constants") {
  const auto& z = zeta_constants();
  CHECK(z.zeta3 == doctest::Approx(1.20205690315959428539).epsilon(1e-15));
  CHECK(zeta3_series() == doctest::Approx(1.20205690315959428539).epsilon(1e-15));
  CHECK(z.zeta2 == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  // zeta'(-2) from mpmath
  CHECK(z.zeta_prime_minus2 == doctest::Approx(-0.0304484570583932707802515).epsilon(1e-14));
}

TEST_CASE("special functions against mpmath") {
  CHECK(clausen_im_li2(1.0 / 6) == doctest::Approx(1.01494160640965362502).epsilon(1e-14));
  CHECK(clausen_im_li2(0.3) == doctest::Approx(0.784815780197750852546).epsilon(1e-14));
  CHECK(clausen_im_li2(0.5) == 0);
  CHECK(clausen_im_li2(0.7) == doctest::Approx(-0.784815780197750852546).epsilon(1e-14));
  CHECK(bessel_k(3.5, 1.7) == doctest::Approx(2.24296546708962731954).epsilon(1e-13));
  CHECK(bessel_k72(1.7) == doctest::Approx(2.24296546708962731954).epsilon(1e-13));
  CHECK(bessel_k(2, 0.9) == doctest::Approx(2.07902714988738723594).epsilon(1e-13));
}

TEST_CASE("Legendre polynomials and the Wronskian") {
  CHECK(legendre_p(3, mpq_class(1, 2)) == mpq_class(-7, 16));
  for (int n = 1; n <= 6; ++n) {
    auto w = legendre_wronskian(n);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == mpq_class(1, n));
  }
  // Q_n from the real formula against the closed form of Q_1
  const double x = 0.4;
  CHECK(legendre_q(1, x) == doctest::Approx(x / 2 * std::log((1 + x) / (1 - x)) - 1).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre and threads") {
  CHECK(gl_fixed([](double t) { return std::exp(t); }, 0, 1, 20) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
  auto sq = map_indices<int>(100, [](int i) { return i * i; }, Exec::parallel);
  CHECK(sq[99] == 9801);
  set_threads(1);
  CHECK(thread_count() >= 1);
}
