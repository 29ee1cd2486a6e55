#include <cmath>

#include "poincare/common.hpp"
#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/numkit/arith.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::eisenstein {

ConstantMode constant_mode_closed() {
  return {1.0, pi * pi / (3 * numkit::zeta_constants().zeta3)};
}

double eisenstein_mode(double s, int n, double y) {
  if (std::abs(s - 1.5) > 1e-15) throw UnsupportedError("eisenstein_mode: only s = 3/2");
  if (!(y > 0)) throw DomainError("eisenstein_mode: y must be positive");
  if (n == 0) {
    ConstantMode c = constant_mode_closed();
    return c.c_main * y * std::sqrt(y) + c.c_sec / std::sqrt(y);
  }
  const long k = std::labs(n);
  return 4 * pi / numkit::zeta_constants().zeta3 * double(numkit::sigma2(k)) / double(k) *
         std::sqrt(y) * numkit::bessel_k(1, 2 * pi * k * y);
}

double lattice_mode(double s, int n, double y, int cutoff, int points) {
  // trapezoid on a periodic function: exact up to aliased modes |n +- points|
  double acc = 0;
  for (int j = 0; j < points; ++j) {
    double x = (j + 0.5) / points;
    acc += eisenstein_lattice(s, {x, y}, cutoff) * std::cos(2 * pi * n * x);
  }
  return acc / points;
}

ConstantMode calibrate_constant_mode(double y1, double y2, int cutoff) {
  // a0(y) = c_main y^{3/2} + c_sec y^{-1/2}: two equations
  double a1 = lattice_mode(1.5, 0, y1, cutoff), a2 = lattice_mode(1.5, 0, y2, cutoff);
  double p1 = std::pow(y1, 1.5), q1 = std::pow(y1, -0.5);
  double p2 = std::pow(y2, 1.5), q2 = std::pow(y2, -0.5);
  double det = p1 * q2 - p2 * q1;
  return {(a1 * q2 - a2 * q1) / det, (p1 * a2 - p2 * a1) / det};
}

double eisenstein_fourier(UpperHalfPoint z, int N) {
  double s = eisenstein_mode(1.5, 0, z.y);
  for (int n = 1; n <= N; ++n) s += 2 * eisenstein_mode(1.5, n, z.y) * std::cos(2 * pi * n * z.x);
  return s;
}

double rhs_pair_mode(int n1, int n2, double y) {
  return eisenstein_mode(1.5, n1, y) * eisenstein_mode(1.5, n2, y);
}

}  // namespace poincare::eisenstein
