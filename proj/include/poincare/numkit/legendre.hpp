#pragma once
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace poincare::numkit {

using QPoly = std::vector<mpq_class>;  // coefficient of x^j at index j

// P_n from the explicit binomial sum
QPoly legendre_p_coeffs(int n);
// W_n = sum_{k=1}^n P_{k-1} P_{n-k} / k, so Q_n = P_n log((1+x)/(1-x))/2 - W_n
QPoly legendre_w_coeffs(int n);

template <class T>
T to_scalar(const mpq_class& q) {
  if constexpr (std::is_same_v<T, mpq_class>) {
    return q;
  } else if constexpr (std::is_same_v<T, double>) {
    return q.get_d();
  } else {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
      return T(q.get_num().get_si()) / T(q.get_den().get_si());
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

template <class T>
T poly_eval(const QPoly& c, const T& x) {
  using S = std::conditional_t<std::is_same_v<T, std::complex<double>>, double, T>;
  T r = T(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + T(to_scalar<S>(*it));
  return r;
}

template <class T>
T legendre_p(int n, const T& x) {
  return poly_eval(legendre_p_coeffs(n), x);
}

// real x with |x| != 1 (log of |(1+x)/(1-x)|)
double legendre_q(int n, double x);
// complex argument, principal-branch log; x = i u gives Q_n(iu)
std::complex<double> legendre_q(int n, std::complex<double> x);

// exact Wronskian P_n Q_{n-1} - P_{n-1} Q_n as a polynomial (the log parts
// cancel identically); returns the rational polynomial
QPoly legendre_wronskian(int n);

// for odd m: p(u) = -i P_m(iu) and w(u) = W_m(iu), both real polynomials in u,
// so Q_m(iu) = -p(u) arctan(u) - w(u)
struct LegendreIU {
  QPoly p;
  QPoly w;
};
LegendreIU legendre_iu(int m);

QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_add(const QPoly& a, const QPoly& b, const mpq_class& s = 1);
std::string poly_str(const QPoly& a);

}  // namespace poincare::numkit
