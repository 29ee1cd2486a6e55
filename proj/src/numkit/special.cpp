#include "poincare/numkit/special.hpp"

#include <map>
#include <mutex>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>
#include <gsl/gsl_sf_clausen.h>

namespace poincare::numkit {

namespace {
int twice_order(double nu) {
  double t = 2 * nu;
  int k = static_cast<int>(std::lround(t));
  if (std::abs(t - k) > 1e-12 || k < 0 || k > 14)
    throw UnsupportedError("bessel_k: order must be in {0, 1/2, ..., 7}");
  return k;
}
}  // namespace

double bessel_k(double nu, double x) {
  int k2 = twice_order(nu);
  if (!(x > 0)) throw DomainError("bessel_k: argument must be positive");
  double a, b;  // K_{m-1}, K_m lifted by K_{m+1} = K_{m-1} + (2m/x) K_m
  int steps;
  double start;
  if (k2 % 2 == 0) {
    a = boost::math::cyl_bessel_k(0, x);
    if (k2 == 0) return a;
    b = boost::math::cyl_bessel_k(1, x);
    start = 1;
    steps = k2 / 2 - 1;
  } else {
    a = std::sqrt(pi / (2 * x)) * std::exp(-x);
    if (k2 == 1) return a;
    b = a * (1 + 1 / x);
    start = 1.5;
    steps = (k2 - 3) / 2;
  }
  double m = start;
  for (int i = 0; i < steps; ++i) {
    double c = a + 2 * m / x * b;
    a = b;
    b = c;
    m += 1;
  }
  return b;
}

double bessel_k_prime(double nu, double x) {
  twice_order(nu);
  // K_{-nu} = K_nu
  double lo = nu >= 1 ? bessel_k(nu - 1, x) : bessel_k(std::abs(nu - 1), x);
  double hi;
  if (nu + 1 <= 7) {
    hi = bessel_k(nu + 1, x);
  } else {
    hi = bessel_k(nu - 1, x) + 2 * nu / x * bessel_k(nu, x);
  }
  return -0.5 * (lo + hi);
}

double clausen_im_li2(double x) {
  double r = x - std::floor(x);
  if (r == 0.0 || r == 0.5) return 0.0;
  return gsl_sf_clausen(2 * pi * r);
}

mpq_class bernoulli_number(int n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};
  if (n < 0) throw DomainError("bernoulli_number: n must be nonnegative");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    mpq_class s = 0;
    mpz_class binom = 1;
    for (int k = 0; k < m; ++k) {
      s += binom * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -s / mpq_class(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[n];
}

mpq_class bernoulli_poly(int n, const mpq_class& x) {
  mpq_class s = 0, xp = 1;
  mpz_class binom = 1;
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  for (int k = 0; k <= n; ++k) {
    s += binom * bernoulli_number(n - k) * xp;
    xp *= x;
    binom = binom * (n - k) / (k + 1);
  }
  s.canonicalize();
  return s;
}

mpq_class hurwitz_zeta_nonpos(int s, const mpq_class& x) {
  if (s < -3 || s > 0) throw UnsupportedError("hurwitz_zeta_nonpos: s must be in {-3,-2,-1,0}");
  if (x <= 0 || x > 1) throw DomainError("hurwitz_zeta_nonpos: x must lie in (0,1]");
  mpq_class r = -bernoulli_poly(1 - s, x) / mpq_class(1 - s);
  r.canonicalize();
  return r;
}

double zeta3_series() {
  double s = 0, binom = 1;  // C(2k,k)
  for (int k = 1; k <= 40; ++k) {
    binom = binom * (2.0 * (2 * k - 1)) / k;
    double term = 1.0 / (double(k) * k * k * binom);
    s += (k % 2 ? term : -term);
  }
  return 2.5 * s;
}

const ZetaConstants& zeta_constants() {
  static const ZetaConstants z = [] {
    ZetaConstants c;
    c.zeta2 = pi * pi / 6;
    c.zeta3 = zeta3_series();
    c.zeta_prime_minus2 = -c.zeta3 / (4 * pi * pi);
    return c;
  }();
  return z;
}

double zeta(double s) {
  if (!(s > 1)) throw DomainError("zeta: s must exceed 1");
  return boost::math::zeta(s);
}

}  // namespace poincare::numkit
