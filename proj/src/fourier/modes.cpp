#include <algorithm>
#include <cmath>
#include <numeric>

#include "poincare/fourier/fourier.hpp"
#include "poincare/hsolver/hclosed.hpp"
#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/arith.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::fourier {

namespace {
double z3() { return numkit::zeta_constants().zeta3; }

void require_nondegenerate(int n1, int n2, const char* who) {
  if (icoeff::PairIndex(n1, n2).degenerate()) throw DegenerateError(std::string(who) + ": degenerate pair");
}

// (f, f', f'') of the pair mode in y, 50-digit jets through the closed forms
std::array<double, 3> mode_jet(int n1, int n2, double y) {
  using T = Taylor<Real50, 3>;
  T a = T(Real50(n1)), b = T(Real50(n2)), yy = T::var(Real50(y));
  T I = icoeff::i1_closed_t(a, b, yy) + icoeff::i2_closed_t(a, b, yy);
  Real50 pref = Real50(4) * numkit::sigma2(std::abs(n1)) * numkit::sigma2(std::abs(n2)) /
                (Real50(n1) * n1 * Real50(n2) * n2);
  T f = T(pref) * I / yy;
  return {static_cast<double>(f.c[0]), static_cast<double>(f.deriv(1)), static_cast<double>(f.deriv(2))};
}

ModeResidual finish(int n1, int n2, double y, double s, double f, double f2) {
  const double X = n1 + n2;
  ModeResidual r;
  double a = y * y * f2, b = (4 * pi * pi * X * X * y * y + 12) * f;
  r.lhs = a - b;
  r.rhs = eisenstein::rhs_pair_mode(n1, n2, y);
  r.residual = std::abs(r.lhs + s * r.rhs);
  r.relative = r.residual / std::max({std::abs(a), std::abs(b), std::abs(s * r.rhs)});
  return r;
}
}  // namespace

double default_scale() { return 4 * z3() * z3(); }

double ramanujan_weight(int n) {
  if (n == 0) return numkit::zeta_constants().zeta2 / z3();
  long k = std::abs(n);
  return double(numkit::sigma2(k)) / (double(k) * k) / z3();
}

double sigma01_mode(int n, double y) {
  if (!(y > 0)) throw DomainError("sigma01_mode: y must be positive");
  return ramanujan_weight(n) * y * h_hat(n * y).value;
}

double sigma01_direct(int n, double y, int m_max) {
  double acc = 0;
  for (int m = 1; m <= m_max; ++m) {
    double c = 0;
    for (int j = 0; j < m; ++j)
      if (std::gcd(j, m) == 1) c += std::cos(2 * pi * double(n) * j / m);
    acc += c / (double(m) * m * m);
  }
  return acc * y * h_hat(n * y).value;
}

double sigma00_term(UpperHalfPoint z, int cutoff) {
  return hsolver::h32_c_inf() * eisenstein::eisenstein_lattice(3.0, z, cutoff);
}

double sigma00_identity(double y) { return hsolver::h32_c_inf() * y * y * y; }

double degenerating_family(long m, long n, UpperHalfPoint z, double det) {
  // gamma = [[m, n], [m, n + det]]: P = n(n+det) + m(2n+det) x + m^2 |z|^2
  const double x = z.x, y = z.y, n2 = n + det;
  double P = n * n2 + (m * n2 + m * n) * x + double(m) * m * (x * x + y * y);
  double u = P / (y * det);
  return hsolver::h_closed_32(u) / std::pow(std::abs(det), 3);
}

double mode_pair(int n1, int n2, double y) {
  return default_scale() * ramanujan_weight(n1) * ramanujan_weight(n2) / y * icoeff::i_total(n1, n2, y);
}

double mode_pair_homogeneous(int n1, int n2, double y) {
  require_nondegenerate(n1, n2, "mode_pair_homogeneous");
  return icoeff::alpha_pair(n1, n2) * std::sqrt(y) * numkit::bessel_k(3.5, 2 * pi * std::abs(n1 + n2) * y);
}

ModeResidual pde_mode_residual(int n1, int n2, double y, double s) {
  require_nondegenerate(n1, n2, "pde_mode_residual");
  auto j = mode_jet(n1, n2, y);
  return finish(n1, n2, y, s, j[0], j[2]);
}

ModeResidual pde_mode_residual_fd(int n1, int n2, double y, double s, double h) {
  require_nondegenerate(n1, n2, "pde_mode_residual_fd");
  auto f = [&](double t) { return mode_jet(n1, n2, t)[0]; };
  double f0 = f(y);
  double f2 = (-f(y - 2 * h) + 16 * f(y - h) - 30 * f0 + 16 * f(y + h) - f(y + 2 * h)) / (12 * h * h);
  return finish(n1, n2, y, s, f0, f2);
}

double calibrate_scale(int n1, int n2, double y) {
  ModeResidual r = pde_mode_residual(n1, n2, y, 0);
  return -r.lhs / r.rhs;
}

double homogeneous_residual(int n1, int n2, double y) {
  require_nondegenerate(n1, n2, "homogeneous_residual");
  using T = Taylor<double, 3>;
  const double X = std::abs(n1 + n2), al = icoeff::alpha_pair(n1, n2);
  T yy = T::var(y);
  T f = al * sqrt(yy) * numkit::bessel_k72(T(2 * pi * X) * yy);
  double b = (4 * pi * pi * X * X * y * y + 12) * f.c[0];
  return std::abs(y * y * f.deriv(2) - b) / std::abs(b);
}

}  // namespace poincare::fourier
