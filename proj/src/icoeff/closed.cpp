#include <cmath>
#include <mutex>

#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/arith.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::icoeff {

namespace {
double s2(int n) { return static_cast<double>(numkit::sigma2(std::abs(n))); }
}  // namespace

double alpha_pair(int n1, int n2, double y) {
  if (n1 == 0 && n2 == 0) return 0;
  const double z3 = numkit::zeta_constants().zeta3;
  if (n1 + n2 == 0) {
    double n6 = std::pow(double(n1), 6);
    return 8 * s2(n1) * s2(n1) / (21 * n6 * pi * pi * y * y * y);
  }
  if (n1 == 0 || n2 == 0) {
    int n = n1 + n2;
    double an = std::abs(double(n));
    return 64 * s2(n) * (an * an * std::pow(pi, 4) - 90 * z3) / (135 * std::pow(an, 2.5) * pi);
  }
  // Real50: the bracket cancels for opposite signs
  const Real50 a = n1, b = n2, X = a + b, P = pi_as<Real50>();
  Real50 poly = pow(a, 5) + pow(b, 5) + 15 * pow(a, 4) * b + 15 * a * pow(b, 4) - 80 * a * a * a * b * b -
                80 * a * a * b * b * b + 60 * a * a * b * b * (a - b) * log(abs(a / b));
  Real50 v = 128 * P * s2(n1) * s2(n2) / (45 * a * a * b * b * pow(abs(X), Real50(3.5))) * poly;
  return static_cast<double>(X > 0 ? v : Real50(-v));
}

double alpha_tilde(int n1, int n2) {
  int X = n1 + n2;
  if (X == 0) throw PoleError("alpha_tilde: n1 + n2 = 0");
  return 45 * std::pow(std::abs(double(X)), 2.5) * alpha_pair(n1, n2) / (128 * pi);
}

double i1_closed(int n1, int n2, double y) {
  if (n1 + n2 == 0) throw PoleError("i1_closed: n1 + n2 = 0");
  if (n1 == 0 || n2 == 0) throw DegenerateError("i1_closed: n1 n2 = 0");
  return static_cast<double>(i1_closed_t<Real50>(n1, n2, y));
}

double i2_closed(int n1, int n2, double y) {
  if (n1 + n2 == 0) throw DegenerateError("i2_closed: n1 + n2 = 0");
  if (n1 == 0 || n2 == 0) throw DegenerateError("i2_closed: n1 n2 = 0");
  // Real50: opposite-sign pairs cancel several digits in binary64
  return static_cast<double>(i2_closed_t<Real50>(n1, n2, y));
}

double fhatP_pair(int n1, int n2, double y) {
  double I2 = i2_closed(n1, n2, y);
  return 4 / (y * double(n1) * n1 * double(n2) * n2) * s2(n1) * s2(n2) * I2;
}

PairCoefficients pair_coefficients(int n1, int n2, double y) {
  PairCoefficients c;
  c.y = y;
  c.alpha = alpha_pair(n1, n2, y);
  c.I1 = i1_closed(n1, n2, y);
  c.I2 = i2_closed(n1, n2, y);
  c.fhatP = 4 / (y * double(n1) * n1 * double(n2) * n2) * s2(n1) * s2(n2) * c.I2;
  return c;
}

LimitResult i_limit_opposite(int n, double y) {
  if (n == 0) throw DomainError("i_limit_opposite: n = 0");
  // X^7 (I1 + I2) along n2 = -n + d, expanded to order d^7
  using T = Taylor<Real50, 8>;
  T d = T::var(Real50(0));
  T n1 = T(Real50(n)), n2 = T(Real50(-n)) + d, yy = T(Real50(y));
  T f = i1_x7_t(n1, n2, yy) + i2_x7_t(n1, n2, yy);
  LimitResult r;
  r.value = static_cast<double>(f.c[7]);
  Real50 worst = 0;
  for (int k = 0; k < 7; ++k) worst = std::max(worst, Real50(abs(f.c[k])));
  r.lower_orders = static_cast<double>(worst / abs(f.c[7]));
  return r;
}

double i_axis(int n, double y) {
  if (n == 0) throw DomainError("i_axis: n = 0");
  return static_cast<double>(i1_closed_t<Real50>(n, 0, y)) + i2_generic(n, 0, y);
}

double i_total(int n1, int n2, double y) {
  PairIndex p(n1, n2);
  if (p.n1_zero && p.n2_zero) {
    // y-independent (phase is 1)
    static std::once_flag once;
    static double v00 = 0;
    std::call_once(once, [] { v00 = i_quadrature(0, 0, 1.0, 1e-6).value; });
    return v00;
  }
  if (p.sum_zero) return i_limit_opposite(n1, y).value;
  if (p.n2_zero) return i_axis(n1, y);
  if (p.n1_zero) return i_axis(n2, y);
  return i1_closed(n1, n2, y) + i2_closed(n1, n2, y);
}

}  // namespace poincare::icoeff
