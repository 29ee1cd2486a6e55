#include "poincare/hsolver/hclosed.hpp"

#include <numbers>

namespace poincare::hsolver {

namespace detail {

// h = P1(w) - 16/(3 pi) P2(w) with
//   P1 = [(40 + 44 w^2 + 7 w^4)(1+w^2)^{-1/2} - 40 - 24 w^2] / (3 w^3)
//   P2 = 4/3 + 5/w^2 - (5 + 3 w^2) w^{-3} arctan w
// (arctan u = pi/2 - arctan w; the pi/2 part cancels the growth of the first term)
static std::vector<mpq_class> series(int terms, bool second) {
  std::vector<mpq_class> c(terms, 0);
  if (!second) {
    // binom(-1/2, j)
    std::vector<mpq_class> bj(terms + 3);
    bj[0] = 1;
    for (int j = 1; j < static_cast<int>(bj.size()); ++j)
      bj[j] = bj[j - 1] * mpq_class(-(2 * j - 1), 2 * j);
    for (int j = 3; 2 * j - 3 < terms; ++j) {
      mpq_class n = 40 * bj[j] + 44 * bj[j - 1] + 7 * bj[j - 2];
      c[2 * j - 3] = n / 3;
    }
  } else {
    // P2 = -sum_{m>=2} [5(-1)^m/(2m+1) + 3(-1)^{m-1}/(2m-1)] w^{2m-2}
    for (int m = 2; 2 * m - 2 < terms; ++m) {
      int s = m % 2 ? -1 : 1;
      c[2 * m - 2] = -(mpq_class(5 * s, 2 * m + 1) + mpq_class(-3 * s, 2 * m - 1));
    }
  }
  return c;
}

const std::vector<mpq_class>& h32_w_series(bool pi_part) {
  // w <= 1/2, so 190 terms reach ~1e-57
  static const std::vector<mpq_class> a = series(190, false), b = series(190, true);
  return pi_part ? b : a;
}

}  // namespace detail

double h32_c_inf() { return detail::h32_w_series(false)[3].get_d(); }

double ode_residual_exact(double h0, double h1, double h2, double a, double b, double u) {
  return (1 + u * u) * h2 + 2 * u * h1 - b * h0 + std::pow(1 + u * u, -a);
}

double ode_residual(const std::function<double(double)>& h, double a, double b, double u,
                    double hs) {
  auto d12 = [&](double s, double& d1, double& d2) {
    double fp2 = h(u + 2 * s), fp1 = h(u + s), f0 = h(u), fm1 = h(u - s), fm2 = h(u - 2 * s);
    d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * s);
    d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * s * s);
  };
  double a1, a2, b1, b2;
  d12(hs, a1, a2);
  d12(2 * hs, b1, b2);
  double d1 = (16 * a1 - b1) / 15, d2 = (16 * a2 - b2) / 15;
  return ode_residual_exact(h(u), d1, d2, a, b, u);
}

}  // namespace poincare::hsolver
