#pragma once
#include <cmath>
#include <complex>
#include <vector>

namespace poincare::numkit {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1,1]
  std::vector<double> w;
};
// Gauss-Legendre rule; order in {8, 10, 16, 20, 30}
const GaussRule& gauss_rule(int order);

template <class F>
auto gl_fixed(F&& f, double a, double b, int order = 20) {
  const GaussRule& g = gauss_rule(order);
  double h = 0.5 * (b - a), m = 0.5 * (a + b);
  decltype(f(m)) s{};
  for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(m + h * g.x[i]);
  return s * h;
}

// equal panels of width <= hmax
template <class F>
auto gl_panels(F&& f, double a, double b, double hmax, int order = 20) {
  int n = std::max(1, static_cast<int>(std::ceil((b - a) / hmax - 1e-12)));
  double w = (b - a) / n;
  decltype(f(a)) s{};
  for (int i = 0; i < n; ++i) s += gl_fixed(f, a + i * w, a + (i + 1) * w, order);
  return s;
}

// int_R^inf f(t) e^{i w t} dt from derivatives d[k] = f^(k)(R) (integration by parts)
std::complex<double> ibp_tail_upper(const std::vector<double>& d, double w, double R);
// int_{-inf}^{L} f(t) e^{i w t} dt from derivatives d[k] = f^(k)(L)
std::complex<double> ibp_tail_lower(const std::vector<double>& d, double w, double L);

}  // namespace poincare::numkit
