#pragma once
#include <optional>
#include <string>
#include <vector>

#include "poincare/numkit/mp.hpp"

namespace poincare::hsolver {

// a = n + 1/2, b = (2n+1)(2n+2), p(u) = -i P_{2n+1}(iu), q(u) = Q_{2n+1}(iu) = -p arctan u - w(u):
//   h = c1 p + c2 q + q sum A_k ((1+u^2)^{1/2-k} - 2^{1/2-k})
//       + p sum B_k (arctan u (1+u^2)^{1/2-k} - pi 2^{-k-3/2})
//       + p sum C_k ((u/sqrt(1+u^2))^{2k+1} - 2^{-k-1/2})
struct HalfIntAnsatz {
  int n = 0;
  double a = 0, b = 0;
  double b_minus = 0, b_plus = 0;
  std::vector<Real100> A, B, C;
  Real100 c1 = 0, c2 = 0;
  // exact values when every coefficient snapped to a small rational
  std::optional<std::vector<mpq_class>> exact_ABC;
  double residual_bound = 0;  // max |ode residual| on 101 points of [-20, 20]
  double c_inf = 0;           // lim |u|^{2n+1} h(u)
  double decay_ratio = 0;     // |u|^{2n+1} h at 1e4 over the same at 1e3
  std::string singular_values;

  template <class X>
  X eval(const X& u) const;
  double operator()(double u) const;  // evaluated at 100 digits
  double residual(double u) const;    // exact-derivative ode residual
};

// throws FitDegenerate if the collocation matrix is rank deficient
HalfIntAnsatz fit_halfint(int n);

// helpers shared with icoeff/fourier
const numkit::LegendreIU& legendre_iu_cached(int m);

template <class X>
X HalfIntAnsatz::eval(const X& u) const {
  using S = scalar_of_t<X>;
  using std::atan;
  using std::sqrt;
  using std::pow;
  const int m = 2 * n + 1;
  const auto& L = legendre_iu_cached(m);
  const X p = qpoly_eval(L.p, u), w = qpoly_eval(L.w, u), at = atan(u);
  const X q = -p * at - w;
  const X s = sqrt(S(1) + u * u), si = S(1) / s;
  const S PI = pi_as<S>();
  const S rt2 = sqrt(S(2));
  X sa = X(S(0)), sb = X(S(0)), sc = X(S(0));
  X sk = s;  // (1+u^2)^{1/2-k}
  S two_k = rt2;  // 2^{1/2-k}
  for (int k = 0; k <= n; ++k) {
    sa = sa + X(S(A[k])) * (sk - X(two_k));
    sb = sb + X(S(B[k])) * (at * sk - X(PI * two_k / S(4)));
    sk = sk * si * si;
    two_k = two_k / S(2);
  }
  const X r = u * si, r2 = r * r;
  X rk = r;
  S tk = S(1) / rt2;  // 2^{-k-1/2}
  for (int k = 0; k <= 2 * n + 1; ++k) {
    sc = sc + X(S(C[k])) * (rk - X(tk));
    rk = rk * r2;
    tk = tk / S(2);
  }
  return X(S(c1)) * p + X(S(c2)) * q + q * sa + p * (sb + sc);
}

}  // namespace poincare::hsolver
