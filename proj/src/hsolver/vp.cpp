#include "poincare/hsolver/vp.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "poincare/common.hpp"
#include "poincare/numkit/legendre.hpp"
#include "poincare/numkit/quadrature.hpp"

namespace poincare::hsolver {

// extended precision keeps the cancellation in P I1 + Q I2 below finite-difference noise
using ld = long double;
using cl = std::complex<ld>;

namespace {
struct LegendreLD {
  std::vector<ld> p, w;
  cl P(cl x) const { return horner(p, x); }
  // principal-branch log, as in numkit::legendre_q
  cl Q(cl x) const { return P(x) * std::log((ld(1) + x) / (ld(1) - x)) / ld(2) - horner(w, x); }
  static cl horner(const std::vector<ld>& c, cl x) {
    cl r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
};

LegendreLD make(int n) {
  LegendreLD L;
  for (auto& q : numkit::legendre_p_coeffs(n))
    L.p.push_back(static_cast<ld>(q.get_num().get_d()) / static_cast<ld>(q.get_den().get_d()));
  for (auto& q : numkit::legendre_w_coeffs(n))
    L.w.push_back(static_cast<ld>(q.get_num().get_d()) / static_cast<ld>(q.get_den().get_d()));
  return L;
}
}  // namespace

double h_vp_numeric(double a, double b, double u) {
  if (!(b > 0)) throw DomainError("h_vp_numeric: b must be positive");
  const double root = std::sqrt(4 * b + 1);
  const long r = std::lround(root);
  if (std::abs(4 * b + 1 - static_cast<double>(r * r)) > 1e-12 || r % 2 == 0)
    throw UnsupportedError("h_vp_numeric: non-integer Legendre degree");
  const int nm = static_cast<int>((r - 1) / 2), np = nm + 1;
  const LegendreLD Lm = make(nm), Lp = make(np);
  const cl pre = cl(0, 1) * static_cast<ld>(1 - root) / static_cast<ld>(2 * b);

  auto f1 = [&](ld k) {
    cl x(0, k);
    cl W = Lp.P(x) * Lm.Q(x) - Lm.P(x) * Lp.Q(x);
    return pre * std::pow(k * k + 1, static_cast<ld>(-a)) * Lm.Q(x) / W;
  };
  auto f2 = [&](ld k) {
    cl x(0, k);
    cl W = Lm.P(x) * Lp.Q(x) - Lp.P(x) * Lm.Q(x);
    return pre * std::pow(k * k + 1, static_cast<ld>(-a)) * Lm.P(x) / W;
  };
  // fixed panels over [1, u]: the result is a smooth function of u
  auto integ = [&](auto& f, int order) {
    const auto& g = numkit::gauss_rule(order);
    cl s = 0;
    const int panels = 8;
    for (int i = 0; i < panels; ++i) {
      ld lo = 1 + (ld(u) - 1) * i / panels, hi = 1 + (ld(u) - 1) * (i + 1) / panels;
      ld h = (hi - lo) / 2, m = (hi + lo) / 2;
      for (size_t j = 0; j < g.x.size(); ++j) s += static_cast<ld>(g.w[j]) * h * f(m + h * ld(g.x[j]));
    }
    return s;
  };
  cl x(0, u);
  cl h = Lm.P(x) * integ(f1, 30) + Lm.Q(x) * integ(f2, 30);
  cl g = Lm.P(x) * integ(f1, 20) + Lm.Q(x) * integ(f2, 20);
  double err = static_cast<double>(std::abs(h - g));
  if (err > 1e-10 * std::max(1.0, static_cast<double>(std::abs(h))))
    throw AccuracyError("h_vp_numeric: quadrature did not converge",
                        Estimate{static_cast<double>(h.real()), err});
  return static_cast<double>(h.real());
}

}  // namespace poincare::hsolver
