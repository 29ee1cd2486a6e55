#pragma once
#include <cmath>

#include "poincare/common.hpp"
#include "poincare/numkit/mp.hpp"
#include "poincare/numkit/parallel.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::icoeff {

struct PairIndex {
  int n1 = 0, n2 = 0;
  bool n1_zero = false, n2_zero = false, sum_zero = false;
  PairIndex(int a, int b) : n1(a), n2(b), n1_zero(a == 0), n2_zero(b == 0), sum_zero(a + b == 0) {}
  bool degenerate() const { return n1_zero || n2_zero || sum_zero; }
};

struct PairCoefficients {
  double alpha = 0, I1 = 0, I2 = 0, fhatP = 0, y = 0;
};

// alpha_{n1,n2}; y only enters the n2 = -n1 case
double alpha_pair(int n1, int n2, double y = 1);
// alpha~ = 45 |X|^{5/2} alpha / (128 pi) for X = n1+n2 != 0
double alpha_tilde(int n1, int n2);

// explicit closed forms, generic in the scalar type (double, Real50, Taylor jets)
// (n1+n2)^7 I1 and (n1+n2)^7 I2 (finite as n1+n2 -> 0)
template <class X>
X i1_x7_t(const X& n1, const X& n2, const X& y);
template <class X>
X i2_x7_t(const X& n1, const X& n2, const X& y);
template <class X>
X x7_of(const X& n1, const X& n2) {
  X s = n1 + n2, s2 = s * s;
  return s2 * s2 * s2 * s;
}
template <class X>
X i1_closed_t(const X& n1, const X& n2, const X& y) {
  return i1_x7_t(n1, n2, y) / x7_of(n1, n2);
}
template <class X>
X i2_closed_t(const X& n1, const X& n2, const X& y) {
  return i2_x7_t(n1, n2, y) / x7_of(n1, n2);
}

// PoleError for n1+n2 = 0; DegenerateError for n1 n2 = 0
double i1_closed(int n1, int n2, double y);
double i2_closed(int n1, int n2, double y);
// I2 from the p2 coefficients d(a,b) and the derivatives of K(xi); also valid at n2 = 0
double i2_generic(int n1, int n2, double y);
// (4/(y n1^2 n2^2)) sigma2 sigma2 I2
double fhatP_pair(int n1, int n2, double y);
PairCoefficients pair_coefficients(int n1, int n2, double y);

// limits for degenerate pairs
struct LimitResult {
  double value = 0;
  double lower_orders = 0;  // largest |coefficient| that must vanish, relative
};
LimitResult i_limit_opposite(int n, double y);  // I(n, -n; y), n != 0
double i_axis(int n, double y);                 // I(n, 0; y) = I(0, n; y), n != 0

// 2-D quadrature of int H(r1,r2) e(-y(n1 r1 + n2 r2)); AccuracyError if tol is not met
struct QuadOptions {
  double R1 = 40, R2 = 30;
  int order = 20;
  Exec exec = Exec::parallel;
};
Estimate i_quadrature(int n1, int n2, double y, double tol = 1e-4, QuadOptions opt = {});

// the full I for any pair (closed forms, limits, or quadrature at (0,0))
double i_total(int n1, int n2, double y);

// ---- implementation of the templates ----

template <class X>
X i1_x7_t(const X& n1, const X& n2, const X& y) {
  using S = scalar_of_t<X>;
  using std::abs;
  using std::exp;
  using std::log;
  const S PI = pi_as<S>();
  X s = n1 + n2;
  X as = value_of(s) < S(0) ? -s : s;
  X py = as * PI * y;
  X N = S(15) + S(2) * py * (S(15) + S(4) * py * (S(3) + py));
  X a = n1, b = n2;
  X poly = s * (S(-94) * a * a * b * b + S(14) * a * a * a * b + a * a * a * a +
                S(14) * a * b * b * b + b * b * b * b);
  X logt = X(S(0));
  if (value_of(n1) != value_of(n2) && value_of(n1) != S(0) && value_of(n2) != S(0)) {
    X r = n1 / n2;
    if (value_of(r) < S(0)) r = -r;
    logt = S(60) * a * a * b * b * (a - b) * log(r);
  }
  return S(2) * exp(S(-2) * PI * y * as) / (S(45) * PI * PI * y * y) * N * (poly + logt);
}

template <class X>
X i2_x7_t(const X& n1, const X& n2, const X& y) {
  using S = scalar_of_t<X>;
  const S PI = pi_as<S>(), P2 = PI * PI;
  auto sg = [](const X& v) { return value_of(v) < S(0) ? S(-1) : S(1); };
  X z1 = S(2) * PI * n1 * y, z2 = S(2) * PI * n2 * y;
  if (value_of(z1) < S(0)) z1 = -z1;
  if (value_of(z2) < S(0)) z2 = -z2;
  X K01 = numkit::bessel_k01(0, z1), K11 = numkit::bessel_k01(1, z1);
  X K02 = numkit::bessel_k01(0, z2), K12 = numkit::bessel_k01(1, z2);
  X a = n1, b = n2, s = n1 + n2;
  X a2 = a * a, b2 = b * b, y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y5 = y4 * y;
  X t1 = (-(a2 * a2) * (S(1) - S(16) * P2 * b2 * y2) - a2 * a * (S(14) * b - S(40) * P2 * b2 * b * y2) +
          S(2) * a2 * b2 * (S(8) * P2 * b2 * y2 + S(47)) - S(4) * P2 * a2 * a2 * a * b * y2 -
          S(2) * a * b2 * b * (S(2) * P2 * b2 * y2 + S(7)) - b2 * b2) *
         y5 * s * (sg(n1 * y) * sg(n2 * y)) * K11 * K12;
  X t2 = (-(a2 * a) * (S(30) - S(98) * P2 * b2 * y2) + S(2) * a2 * b * (S(19) * P2 * b2 * y2 + S(15)) +
          S(27) * P2 * a2 * a2 * b * y2 - S(19) * P2 * a2 * a2 * a * y2 - S(15) * P2 * a * b2 * b2 * y2 -
          P2 * b2 * b2 * b * y2) *
         b * y4 / PI * sg(n1 * y) * K11 * K02;
  X t3 = (-(P2 * P2) * y5 * s * s * (S(13) * a2 * b + a2 * a - S(65) * a * b2 + S(19) * b2 * b) -
          S(30) * P2 * b2 * y3 * (b - a)) *
         a * y / (P2 * PI) * sg(n2 * y) * K01 * K12;
  X t4 = (S(5) * a2 * (S(4) * P2 * b2 * y2 - S(3)) + S(8) * P2 * a2 * a * b * y2 - S(2) * P2 * a2 * a2 * y2 +
          S(2) * a * b * (S(4) * P2 * b2 * y2 + S(15)) - b2 * (S(2) * P2 * b2 * y2 + S(15))) *
         S(2) * a * b * y5 * s * K01 * K02;
  return S(8) * a * b / (S(3) * y5) * (t1 + t2 + t3 + t4);
}

}  // namespace poincare::icoeff
