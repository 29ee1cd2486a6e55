#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "poincare/hsolver/hclosed.hpp"
#include "poincare/icoeff/icoeff.hpp"
#include "poincare/numkit/quadrature.hpp"

namespace poincare::icoeff {

namespace {
using cd = std::complex<double>;
using numkit::gauss_rule;

// H(r1, r2) with r1 a scalar or jet
template <class X>
X H_of(const X& r1, double r2) {
  X v = X(r2) - r1;
  X u = (r1 * r2 + X(1.0)) / v;
  X av = value_of(v) < 0 ? -v : v;
  return hsolver::h_closed_32(u) / (av * av * av);
}

// H(+-1/t, r2)/t^2 for the substitution r1 = +-1/t (sign s)
double H_inverted(double t, double r2, double s) {
  // s = +1: u = (r2+t)/(r2 t-1); s = -1: u = (t-r2)/(r2 t+1)
  double u = s > 0 ? (r2 + t) / (r2 * t - 1) : (t - r2) / (r2 * t + 1);
  double d = std::abs(1 - s * r2 * t);
  return hsolver::h_closed_32(u) * t / (d * d * d);
}

struct Pair {
  cd hi, lo;  // order-p rule and the order-16 companion
};

// int_a^b f e^{i w x} dx on equal panels of width <= hmax
template <class F>
Pair osc_panels(F&& f, double a, double b, double w, double hmax, int order) {
  Pair r{};
  if (b <= a) return r;
  int n = std::max(1, static_cast<int>(std::ceil((b - a) / hmax - 1e-12)));
  double h = (b - a) / n;
  const auto& gh = gauss_rule(order);
  const auto& gl = gauss_rule(16);
  for (int i = 0; i < n; ++i) {
    double lo = a + i * h, m = lo + 0.5 * h, s = 0.5 * h;
    for (size_t k = 0; k < gh.x.size(); ++k) {
      double x = m + s * gh.x[k];
      r.hi += gh.w[k] * s * f(x) * std::exp(cd(0, w * x));
    }
    for (size_t k = 0; k < gl.x.size(); ++k) {
      double x = m + s * gl.x[k];
      r.lo += gl.w[k] * s * f(x) * std::exp(cd(0, w * x));
    }
  }
  return r;
}

double panel_width(double w) { return w == 0 ? 1.0 : std::min(1.0, 0.25 * 2 * pi / std::abs(w)); }

// F(r2) = int H(r1, r2) e^{i w1 r1} dr1
Pair inner(double r2, double w1, double R1min, int order) {
  const double R1 = std::max(R1min, std::abs(r2) + 10);
  const double hmax = panel_width(w1);
  auto f = [r2](double r1) { return H_of(r1, r2); };
  Pair a = osc_panels(f, -R1, r2, w1, hmax, order);
  Pair b = osc_panels(f, r2, R1, w1, hmax, order);
  Pair r{a.hi + b.hi, a.lo + b.lo};
  cd tail = 0;
  if (w1 != 0) {
    using J = Taylor<double, 8>;
    std::vector<double> dU(8), dL(8);
    J ju = H_of(J::var(R1), r2), jl = H_of(J::var(-R1), r2);
    for (int k = 0; k < 8; ++k) {
      dU[k] = ju.deriv(k);
      dL[k] = jl.deriv(k);
    }
    tail = numkit::ibp_tail_upper(dU, w1, R1) + numkit::ibp_tail_lower(dL, w1, -R1);
  } else {
    auto up = [r2](double t) { return H_inverted(t, r2, 1); };
    auto dn = [r2](double t) { return H_inverted(t, r2, -1); };
    tail = numkit::gl_panels(up, 0, 1 / R1, 0.25 / R1, 20) + numkit::gl_panels(dn, 0, 1 / R1, 0.25 / R1, 20);
  }
  r.hi += tail;
  r.lo += tail;
  return r;
}
}  // namespace

Estimate i_quadrature(int n1, int n2, double y, double tol, QuadOptions opt) {
  if (!(y > 0)) throw DomainError("i_quadrature: y <= 0");
  // phase e(-y(n1 r1 + n2 r2))
  const double w1 = -2 * pi * n1 * y, w2 = -2 * pi * n2 * y;
  const double R2 = opt.R2;
  const double wmax = std::max({std::abs(w1), std::abs(w2), std::abs(w1 + w2)});
  const double hmax = panel_width(wmax);

  // outer nodes: order-p rule, order-16 rule, then tail probes
  std::vector<double> xs, wh, wl;
  int n = std::max(1, static_cast<int>(std::ceil(2 * R2 / hmax - 1e-12)));
  double h = 2 * R2 / n;
  const auto& gh = gauss_rule(opt.order);
  const auto& gl = gauss_rule(16);
  for (int i = 0; i < n; ++i) {
    double m = -R2 + (i + 0.5) * h, s = 0.5 * h;
    for (size_t k = 0; k < gh.x.size(); ++k) {
      xs.push_back(m + s * gh.x[k]);
      wh.push_back(gh.w[k] * s);
      wl.push_back(0);
    }
    for (size_t k = 0; k < gl.x.size(); ++k) {
      xs.push_back(m + s * gl.x[k]);
      wh.push_back(0);
      wl.push_back(gl.w[k] * s);
    }
  }
  const size_t n_main = xs.size();
  const double fd = 0.1;
  std::vector<double> probes;
  if (w2 != 0) {
    for (double e : {-R2, R2})
      for (int j = -2; j <= 2; ++j) probes.push_back(e + j * fd);
  } else {
    for (double e : {-1.0, 1.0})
      for (double k : {1.0, 1.5, 2.0}) probes.push_back(e * k * R2);
  }
  xs.insert(xs.end(), probes.begin(), probes.end());

  auto F = map_indices<Pair>(
      static_cast<int>(xs.size()), [&](int i) { return inner(xs[i], w1, opt.R1, opt.order); }, opt.exec);

  cd hi = 0, lo = 0;
  double inner_err = 0;
  for (size_t i = 0; i < n_main; ++i) {
    cd ph = std::exp(cd(0, w2 * xs[i]));
    if (wh[i] != 0) {
      hi += wh[i] * F[i].hi * ph;
      inner_err += wh[i] * std::abs(F[i].hi - F[i].lo);
    } else {
      lo += wl[i] * F[i].hi * ph;
    }
  }
  auto P = [&](int j) { return F[n_main + j].hi; };
  cd tail = 0;
  if (w2 != 0) {
    // five-point derivatives at -R2 (probes 0..4) and R2 (probes 5..9)
    for (int side = 0; side < 2; ++side) {
      int o = 5 * side;
      cd f0 = P(o + 2);
      cd f1 = (P(o) - 8. * P(o + 1) + 8. * P(o + 3) - P(o + 4)) / (12 * fd);
      cd f2 = (-P(o) + 16. * P(o + 1) - 30. * P(o + 2) + 16. * P(o + 3) - P(o + 4)) / (12 * fd * fd);
      // ibp on real and imaginary parts separately (the helpers take real data)
      std::vector<double> dr{f0.real(), f1.real(), f2.real()}, di{f0.imag(), f1.imag(), f2.imag()};
      if (side == 0)
        tail += numkit::ibp_tail_lower(dr, w2, -R2) + cd(0, 1) * numkit::ibp_tail_lower(di, w2, -R2);
      else
        tail += numkit::ibp_tail_upper(dr, w2, R2) + cd(0, 1) * numkit::ibp_tail_upper(di, w2, R2);
    }
  } else {
    // a r^-3 + b r^-4 + c r^-5 through the three probes on each side
    for (int side = 0; side < 2; ++side) {
      cd a[3][4];
      for (int j = 0; j < 3; ++j) {
        double r = std::abs(probes[3 * side + j]);
        a[j][0] = std::pow(r, -3);
        a[j][1] = std::pow(r, -4);
        a[j][2] = std::pow(r, -5);
        a[j][3] = P(3 * side + j);
      }
      // Gaussian elimination, 3x3
      for (int c = 0; c < 3; ++c)
        for (int r = c + 1; r < 3; ++r) {
          cd f = a[r][c] / a[c][c];
          for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
        }
      cd co[3];
      for (int r = 2; r >= 0; --r) {
        cd s = a[r][3];
        for (int k = r + 1; k < 3; ++k) s -= a[r][k] * co[k];
        co[r] = s / a[r][r];
      }
      tail += co[0] / (2 * R2 * R2) + co[1] / (3 * R2 * R2 * R2) + co[2] / (4 * std::pow(R2, 4));
    }
  }
  hi += tail;
  lo += tail;
  Estimate e;
  e.value = hi.real();
  // the outer difference, the inner differences, and a share of the tail model
  e.err = std::abs(hi.real() - lo.real()) + inner_err + 1e-3 * std::abs(tail);
  if (e.err > tol * std::max(std::abs(e.value), 1e-12))
    throw AccuracyError("i_quadrature: tolerance not met", e);
  return e;
}

}  // namespace poincare::icoeff
