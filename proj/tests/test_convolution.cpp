#include <doctest.h>

#include <cmath>

#include "poincare/convolution/convolution.hpp"
#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/special.hpp"

using namespace poincare;
using namespace poincare::convolution;

TEST_CASE("g and its reflection") {
  CHECK(g_eval(1) == doctest::Approx(-32).epsilon(1e-15));
  CHECK(g2() == doctest::Approx(60 * std::log(2.0) - 47).epsilon(1e-15));
  CHECK(g_eval(2) == doctest::Approx(g2()).epsilon(1e-15));
  for (double x : {0.3, 1.7, 5.0}) CHECK(std::abs(g_reflection_defect(x)) < 1e-12);
  CHECK_THROWS_AS(g_eval(0), PoleError);
}

TEST_CASE("alpha~ in both normalizations") {
  CHECK(alpha_tilde(1, 1) == doctest::Approx(-64).epsilon(1e-14));
  CHECK(alpha_tilde(1, 2) == doctest::Approx(icoeff::alpha_tilde(1, 2)).epsilon(1e-10));
  CHECK(alpha_tilde(-5, 2) == doctest::Approx(icoeff::alpha_tilde(-5, 2)).epsilon(1e-10));
  const auto& z = numkit::zeta_constants();
  CHECK(alpha_tilde_axis(1) == doctest::Approx(z.zeta2 + 60 * z.zeta_prime_minus2).epsilon(1e-14));
  // alpha~_{r,0} is also the boundary value of the scaled axis alpha
  CHECK(alpha_tilde_axis(3) ==
        doctest::Approx(45 * std::pow(3, 2.5) * icoeff::alpha_pair(3, 0) / (128 * pi)).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_tilde(2, -2), DomainError);
}

TEST_CASE("minimal solutions and case tags") {
  auto s = minimal_solution(1, 1, 1);
  CHECK(s.b_star == 0);
  CHECK(s.a_star == 1);
  for (auto [c, d, r] : {std::tuple{3L, 2L, 1L}, {4L, 6L, 10L}, {5L, 3L, -7L}, {12L, 5L, 1L}}) {
    auto m = minimal_solution(c, d, r);
    CHECK(m.a_star * d - m.b_star * c == r);
    const i64 step = d / m.g_cd;
    CHECK(std::abs(m.b_star) <= std::abs(m.b_star + step));
    CHECK(std::abs(m.b_star) <= std::abs(m.b_star - step));
  }
  CHECK_THROWS_AS(minimal_solution(2, 4, 1), NoSolutionError);
  CHECK(classify(1, 1, 1).tag == CaseTag::both_divide);
  CHECK(classify(2, 1, 3).tag == CaseTag::d_only);
  CHECK(classify(1, 3, 1).tag == CaseTag::c_only);
  CHECK(classify(2, 3, 1).tag == CaseTag::neither);
  auto k = classify(1, 3, 1);
  CHECK(k.x_cd >= 0);
  CHECK(k.x_cd < 1);
  CHECK(k.y_cd == mpq_class(6));
}

TEST_CASE("T_r(c,d)") {
  const double v = 60 * std::log(1 / pi) + 60 + pi * pi / 3 - g2();
  CHECK(t_r_closed(1, 1, 1).value == doctest::Approx(v).epsilon(1e-13));
  auto t = t_r_closed(1, 3, 1);
  CHECK(std::abs(t.imag) < 1e-12);
  CHECK(!t_r_closed(2, 4, 1).has_terms);
}

TEST_CASE("L_{d,r}(-2)") {
  const auto& z = numkit::zeta_constants();
  auto L11 = l_dr_minus2(1, 1);
  CHECK(L11.d_divides_r);
  CHECK(L11.value.value() == doctest::Approx(-60 * z.zeta_prime_minus2 - z.zeta2 - g2()).epsilon(1e-14));
  auto L31 = l_dr_minus2(3, 1);
  CHECK(!L31.d_divides_r);
  CHECK(L31.value.value() == doctest::Approx(-g2()).epsilon(1e-14));
  auto L52 = l_dr_minus2(5, 2);
  REQUIRE(L52.pairs.size() == 2);
  for (auto& p : L52.pairs) {
    CHECK(p.exact_zero);
    CHECK(std::abs(p.sum) < 1e-10);
  }
  CHECK(L52.value.remainder == 0);
  CHECK(lemma_product_minus2(12) == 144);
}

TEST_CASE("L_{d,r}(s) at s > 2: Hurwitz form against the direct sum") {
  for (auto [d, r] : {std::pair{3L, 1L}, {5L, 2L}, {2L, 6L}, {1L, 1L}}) {
    Estimate direct = l_dr_direct(d, r, 5, 20000);
    CHECK(std::abs(l_dr_at(d, r, 5) - direct.value) < 10 * direct.err + 1e-10);
  }
}

TEST_CASE("vanishing identity") {
  for (i64 r : {1L, 6L, -1L, 100L}) {
    auto rec = a_r_identity(r);
    CHECK(rec.exact);
    CHECK(rec.relative < 1e-12);
  }
  CHECK(a_r_identity(1).rhs == a_r_identity(-1).rhs);
  CHECK_THROWS_AS(a_r_identity(0), DomainError);
}

TEST_CASE("Dirichlet lemma") {
  CHECK(lemma_dirichlet(1, 3, LemmaVariant::log_gcd) == 0);
  CHECK(lemma_dirichlet(1, 3, LemmaVariant::gcd_power, 2) == doctest::Approx(1.0369277551433699263));  // zeta(5)
  // d = 12, s = 4: zeta(4) (log2/16 + log2/256 + log3/81)
  const double z4 = std::pow(pi, 4) / 90;
  const double closed = z4 * (std::log(2.0) / 16 + std::log(2.0) / 256 + std::log(3.0) / 81);
  CHECK(lemma_dirichlet(12, 4, LemmaVariant::log_gcd) == doctest::Approx(closed).epsilon(1e-14));
  auto t = lemma_dirichlet_truncated(12, 4, LemmaVariant::log_gcd, 2, 100000);
  CHECK(std::abs(t.value - closed) < 1e-8);
  auto t8 = lemma_dirichlet_truncated(8, 3, LemmaVariant::gcd_power, 2, 100000);
  CHECK(std::abs(t8.value - lemma_dirichlet(8, 3, LemmaVariant::gcd_power, 2)) < 1e-8);
  CHECK(parse_variant("gcd-power") == LemmaVariant::gcd_power);
  CHECK_THROWS_AS(parse_variant("x"), DomainError);
}

TEST_CASE("partial sums are exploratory but consistent") {
  auto p = smoothed_partial_sum(1, 200);
  CHECK(p.difference == doctest::Approx(p.at_2N - p.at_N));
  // m and r - m give the same term
  CHECK(alpha_tilde(3, -2) == doctest::Approx(alpha_tilde(-2, 3)));
  CHECK(std::isfinite(raw_partial_sum(1, 200)));
}
