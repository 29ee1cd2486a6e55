#pragma once
#include <cmath>
#include <algorithm>
#include <functional>
#include <vector>

#include "poincare/numkit/mp.hpp"

namespace poincare::hsolver {

namespace detail {
// h_{3/2} = sum_k (a[k] - 16/(3 pi) b[k]) w^k with w = 1/|u|; a, b exact
const std::vector<mpq_class>& h32_w_series(bool pi_part);

template <class S>
const std::vector<S>& h32_w_series_as() {
  static const std::vector<S> c = [] {
    std::vector<S> r;
    const auto &a = h32_w_series(false), &b = h32_w_series(true);
    const S f = S(16) / (S(3) * pi_as<S>());
    for (size_t k = 0; k < a.size(); ++k) r.push_back(q_to<S>(a[k]) - f * q_to<S>(b[k]));
    return r;
  }();
  return c;
}
}  // namespace detail

// h(u) = (7+44u^2+40u^4)/(3 sqrt(1+u^2)) - 16/(3 pi) (4/3 + 5u^2 + u(3+5u^2) arctan u).
// Works for double, Real50 and Taylor jets of either. For |u| > 2 the convergent
// 1/|u| expansion is used (the direct form cancels ~u^4 terms down to u^-3).
template <class X>
X h_closed_32(const X& u) {
  using S = scalar_of_t<X>;
  using std::abs;
  using std::atan;
  using std::sqrt;
  const S u0 = value_of(u);
  if (abs(u0) <= S(2)) {
    if constexpr (std::is_same_v<X, double>) {
      // the u^4 and u^3 arctan terms cancel to ~1e-2; long double keeps finite differences clean
      long double v = u, v2 = v * v;
      return static_cast<double>((7 + 44 * v2 + 40 * v2 * v2) / (3 * std::sqrt(1 + v2)) -
                                 16 / (3 * 3.14159265358979323846264338327950288L) *
                                     (4.0L / 3 + 5 * v2 + v * (3 + 5 * v2) * std::atan(v)));
    }
    X u2 = u * u;
    return (S(7) + S(44) * u2 + S(40) * u2 * u2) / (S(3) * sqrt(S(1) + u2)) -
           S(16) / (S(3) * pi_as<S>()) * (S(4) / S(3) + S(5) * u2 + u * (S(3) + S(5) * u2) * atan(u));
  }
  X w = S(1) / (u0 < S(0) ? -u : u);
  const auto& c = detail::h32_w_series_as<S>();
  size_t len = c.size();
  if constexpr (std::is_same_v<S, double>) {
    // w^len below 1e-19 is enough in binary64
    const double w0 = 1 / std::abs(u0);
    len = std::min(len, static_cast<size_t>(std::ceil(-19 / std::log10(w0))) + 2);
  }
  X r = X(c[len - 1]);
  for (size_t k = len - 1; k-- > 0;) r = r * w + X(c[k]);
  return r;
}

// the first term alone, which also solves the ODE
template <class X>
X h_closed_32_first(const X& u) {
  using S = scalar_of_t<X>;
  using std::sqrt;
  X u2 = u * u;
  return (S(7) + S(44) * u2 + S(40) * u2 * u2) / (S(3) * sqrt(S(1) + u2));
}

// lim u^3 h(u)
double h32_c_inf();

// (1+u^2) h'' + 2u h' - b h + (1+u^2)^{-a}, derivatives by Richardson-extrapolated
// 5-point central differences (step hstep)
double ode_residual(const std::function<double(double)>& h, double a, double b, double u,
                    double hstep = 1e-4);

// same with exact derivatives h, h', h''
double ode_residual_exact(double h0, double h1, double h2, double a, double b, double u);

// exact derivatives from a generic callable accepting Taylor<double,3>
template <class F>
double ode_residual_jet(F&& h, double a, double b, double u) {
  auto t = h(Taylor<double, 3>::var(u));
  return ode_residual_exact(t.c[0], t.c[1], 2 * t.c[2], a, b, u);
}

}  // namespace poincare::hsolver
