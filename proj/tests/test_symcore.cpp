#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "poincare/symcore/split.hpp"

using namespace poincare::symcore;

TEST_CASE("bivariate polynomials") {
  BiPoly a = BiPoly::r1() + BiPoly::r2(), b = BiPoly::r1() - BiPoly::r2();
  BiPoly p = a * b;
  CHECK(p == BiPoly::mono(2, 0) - BiPoly::mono(0, 2));
  auto q = p.divide_exact(b);
  REQUIRE(q);
  CHECK(*q == a);
  CHECK(!factor_p1().divide_exact(factor_v()));
  CHECK(p.d1() == BiPoly::mono(1, 0, 2));
  CHECK(p.swapped() == -p);
}

TEST_CASE("normal form evaluates H") {
  NormalForm H = normalize(build_H());
  for (auto [r1, r2] : {std::pair{0.0, 1.0}, {1.0, 2.0}, {-0.7, 0.2}})
    CHECK(H.eval(r1, r2) == doctest::Approx(H_direct(r1, r2)).epsilon(1e-12));
  CHECK(normalize(H) == H);
}

TEST_CASE("derivative rules") {
  Expr r1 = Expr::r1(), r2 = Expr::r2();
  CHECK(apply_D(normalize(r1 * r2), 1) == normalize(r1 + r2));
  // D arctan r1 = 1/(1+r1^2)
  NormalForm d = apply_D(normalize(Expr::atom(Atom::t1)), 1);
  CHECK(d == normalize(Expr::pow(1 + r1 * r1, -1)));
  // D sqrt(1+r2^2) = r2 / sqrt(1+r2^2)
  CHECK(apply_D(normalize(Expr::atom(Atom::s2)), 1).eval(0.3, 0.8) ==
        doctest::Approx(0.8 / std::sqrt(1.64)).epsilon(1e-14));
  // D v = 0
  CHECK(apply_D(normalize(r2 - r1), 1).is_zero());
}

TEST_CASE("D^7 H splits into the smooth and arctan pieces") {
  const SplitResult& s = d7_split();
  CHECK(s.residual.is_zero());
  CHECK(s.denominator == 1);
  CHECK(s.p1_symmetric);
  CHECK(s.p2_symmetric);
  CHECK(s.p1.total_degree() == 13);
  CHECK(s.p2.total_degree() == 17);
  // central difference of the exact D^6 H
  NormalForm d6 = apply_D(normalize(build_H()), 6);
  for (auto [r1, r2] : {std::pair{0.3, 1.7}, {-1.1, 0.4}}) {
    const double h = 1e-4;
    double fd = (d6.eval(r1 + h, r2 + h) - d6.eval(r1 - h, r2 - h)) / (2 * h);
    CHECK(T1_eval(s, r1, r2) + T2_eval(s, r1, r2) == doctest::Approx(fd).epsilon(1e-6));
  }
  // the swap chart r2 < r1 uses the same polynomials
  CHECK(T1_eval(s, 1.7, 0.3) + T2_eval(s, 1.7, 0.3) ==
        doctest::Approx(T1_eval(s, 0.3, 1.7) + T2_eval(s, 0.3, 1.7)).epsilon(1e-14));
}

TEST_CASE("golden dump of p1, p2") {
  std::ifstream in(POINCARE_TEST_DATA "/d7_split.golden");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(dump_golden(d7_split()) == ss.str());
}
