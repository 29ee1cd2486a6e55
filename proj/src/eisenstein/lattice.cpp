#include <cmath>
#include <complex>

#include "poincare/common.hpp"
#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/numkit/quadrature.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::eisenstein {

namespace {
// 1/2 * integral of y^s |mz+n|^{-2s} over the exterior of the square of half-width R
double exterior(double s, UpperHalfPoint z, double R) {
  auto f = [&](double t) {
    double c = std::cos(t), sn = std::sin(t);
    double Q = (c * z.x + sn) * (c * z.x + sn) + c * c * z.y * z.y;
    double mx = std::max(std::abs(c), std::abs(sn));
    return std::pow(mx, 2 * s - 2) / std::pow(Q, s);
  };
  double I = 0;
  // the max(|cos|,|sin|) kinks sit at multiples of pi/4
  for (int k = 0; k < 8; ++k) I += numkit::gl_fixed(f, k * pi / 4, (k + 1) * pi / 4, 30);
  return 0.5 * std::pow(z.y, s) / (2 * s - 2) * std::pow(R, 2 - 2 * s) * I;
}
}  // namespace

double eisenstein_lattice(double s, UpperHalfPoint z, int N, Exec exec) {
  if (!(s > 1)) throw DomainError("eisenstein_lattice: divergent for s <= 1");
  if (!(z.y > 0)) throw DomainError("eisenstein_lattice: y must be positive");
  if (N < 1) throw DomainError("eisenstein_lattice: cutoff must be >= 1");
  // x -> x + 1 permutes the lattice; reducing first makes the truncation shift-invariant
  z.x -= std::round(z.x);
  const bool half_int = std::abs(s - 1.5) < 1e-15;
  auto term = [&](double m, double n) {
    double a = m * z.x + n, b = m * z.y;
    double q = a * a + b * b;
    return half_int ? 1 / (q * std::sqrt(q)) : std::pow(q, -s);
  };
  // half lattice: m = 0, n >= 1 and m >= 1, all n
  auto rows = map_indices<double>(
      N + 1,
      [&](int m) {
        double acc = 0;
        if (m == 0) {
          for (int n = N; n >= 1; --n) acc += term(0, n);
        } else {
          for (int n = -N; n <= N; ++n) acc += term(m, n);
        }
        return acc;
      },
      exec);
  double sum = 0;
  for (int m = N; m >= 0; --m) sum += rows[m];
  sum = sum * std::pow(z.y, s) + exterior(s, z, N + 0.5);
  return sum / numkit::zeta(2 * s);
}

double unfold_identity_check(long m1, long n1, long m2, long n2, UpperHalfPoint z) {
  const long det = m1 * n2 - n1 * m2;
  if (det == 0) throw DegenerateError("unfold_identity_check: det = 0");
  const double x = z.x, y = z.y;
  std::complex<double> w(x, y);
  std::complex<double> g = (double(m1) * w + double(n1)) / (double(m2) * w + double(n2));
  const double num = n1 * n2 + m2 * n1 * x + m1 * n2 * x + m1 * m2 * (x * x + y * y);
  const double lhs1 = g.real() / g.imag(), rhs1 = num / (y * det);
  const double lhs2 = num * num + (y * det) * (y * det);
  const double rhs2 = std::norm(double(m1) * w + double(n1)) * std::norm(double(m2) * w + double(n2));
  return std::max(std::abs(lhs1 - rhs1) / std::max(1.0, std::abs(rhs1)),
                  std::abs(lhs2 - rhs2) / std::max(1.0, std::abs(rhs2)));
}

}  // namespace poincare::eisenstein
