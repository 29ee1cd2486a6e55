#pragma once
#include <array>
#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <gmpxx.h>

#include "poincare/common.hpp"
#include "poincare/numkit/taylor.hpp"

namespace poincare::numkit {

// K_nu(x) for nu in {0, 1/2, 1, ..., 7}; integer orders by upward recurrence
// from K0, K1, half-integer orders from K_{1/2} = sqrt(pi/2x) e^{-x}.
double bessel_k(double nu, double x);
// K_nu'(x) = -(K_{nu-1} + K_{nu+1})/2
double bessel_k_prime(double nu, double x);

// K_{7/2}(z) closed form, generic scalar
template <class T>
T bessel_k72(const T& z) {
  using std::exp;
  using std::sqrt;
  T iz = T(1) / z;
  return sqrt(T(pi) / 2 * iz) * exp(-z) * (T(1) + iz * (T(6) + iz * (T(15) + T(15) * iz)));
}

// Taylor coefficients of K_nu about z0 from the Bessel ODE
// z^2 w'' + z w' - (z^2 + nu^2) w = 0, given w(z0), w'(z0).
template <class T, int N>
std::array<T, N> bessel_k_coeffs(int nu, const T& z0, const T& w0, const T& w1) {
  std::array<T, N> w{};
  w[0] = w0;
  if constexpr (N > 1) w[1] = w1;
  T nu2 = T(nu * nu);
  for (int k = 0; k + 2 < N; ++k) {
    // coefficient of t^k with z = z0 + t
    T rhs = T(2 * (k + 1) * k) * z0 * w[k + 1] + T(k * (k - 1)) * w[k] + z0 * T(k + 1) * w[k + 1] +
            T(k) * w[k] - z0 * z0 * w[k] - nu2 * w[k];
    if (k >= 1) rhs -= T(2) * z0 * w[k - 1];
    if (k >= 2) rhs -= w[k - 2];
    w[k + 2] = -rhs / (z0 * z0 * T((k + 2) * (k + 1)));
  }
  return w;
}

// K0, K1 for plain scalars or Taylor series (argument > 0)
template <class X>
X bessel_k01(int nu, const X& z) {
  using boost::math::cyl_bessel_k;
  if constexpr (is_taylor_v<X>) {
    using T = scalar_of_t<X>;
    constexpr int N = sizeof(z.c) / sizeof(T);
    T z0 = z.c[0];
    T k0 = cyl_bessel_k(0, z0), k1 = cyl_bessel_k(1, z0);
    T w0 = nu == 0 ? k0 : k1;
    T w1 = nu == 0 ? -k1 : -k0 - k1 / z0;
    return compose<T, N>(bessel_k_coeffs<T, N>(nu, z0, w0, w1), z);
  } else {
    return cyl_bessel_k(nu, z);
  }
}

// Im Li2(e^{2 pi i x}) = Cl2(2 pi x)
double clausen_im_li2(double x);

// exact Bernoulli numbers B_n (B_1 = -1/2) and polynomials B_n(x)
mpq_class bernoulli_number(int n);
mpq_class bernoulli_poly(int n, const mpq_class& x);

// zeta(s, x) = -B_{1-s}(x)/(1-s) for s in {-3,-2,-1,0}, 0 < x <= 1
mpq_class hurwitz_zeta_nonpos(int s, const mpq_class& x);

struct ZetaConstants {
  double zeta2;
  double zeta3;
  double zeta_prime_minus2;
};
const ZetaConstants& zeta_constants();

// zeta(s) for real s > 1
double zeta(double s);

// zeta(3) from the central binomial series (5/2) sum (-1)^{k+1} / (k^3 C(2k,k))
double zeta3_series();

}  // namespace poincare::numkit
