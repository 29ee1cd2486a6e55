#include "poincare/numkit/legendre.hpp"

#include <cmath>
#include <sstream>

#include "poincare/common.hpp"

namespace poincare::numkit {

namespace {
mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
void trim(QPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}
}  // namespace

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly poly_add(const QPoly& a, const QPoly& b, const mpq_class& s) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += s * b[i];
  trim(r);
  return r;
}

std::string poly_str(const QPoly& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (!first) os << " + ";
    os << a[j].get_str() << "*x^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QPoly legendre_p_coeffs(int n) {
  if (n < 0) throw DomainError("legendre_p: n must be nonnegative");
  QPoly c(n + 1, mpq_class(0));
  mpz_class two_n = 1;
  two_n <<= n;
  for (int l = 0; l <= n / 2; ++l) {
    mpq_class t(binom(n, l) * binom(2 * n - 2 * l, n), two_n);
    t.canonicalize();
    c[n - 2 * l] = (l % 2 ? -t : t);
  }
  return c;
}

QPoly legendre_w_coeffs(int n) {
  if (n < 0) throw DomainError("legendre_q: n must be nonnegative");
  QPoly w{mpq_class(0)};
  for (int k = 1; k <= n; ++k)
    w = poly_add(w, poly_mul(legendre_p_coeffs(k - 1), legendre_p_coeffs(n - k)), mpq_class(1, k));
  return w;
}

double legendre_q(int n, double x) {
  if (x == 1.0 || x == -1.0) throw PoleError("legendre_q: x = +-1");
  double l = std::log(std::abs((1 + x) / (1 - x)));
  return 0.5 * legendre_p(n, x) * l - poly_eval(legendre_w_coeffs(n), x);
}

std::complex<double> legendre_q(int n, std::complex<double> x) {
  if (x == std::complex<double>(1, 0) || x == std::complex<double>(-1, 0)) throw PoleError("legendre_q: x = +-1");
  std::complex<double> l = std::log((1.0 + x) / (1.0 - x));
  return 0.5 * legendre_p(n, x) * l - poly_eval(legendre_w_coeffs(n), x);
}

QPoly legendre_wronskian(int n) {
  if (n < 1) throw DomainError("legendre_wronskian: n must be positive");
  // P_n Q_{n-1} - P_{n-1} Q_n = -P_n W_{n-1} + P_{n-1} W_n (log parts cancel)
  QPoly pn = legendre_p_coeffs(n), pm = legendre_p_coeffs(n - 1);
  QPoly logpart = poly_add(poly_mul(pn, pm), poly_mul(pm, pn), -1);
  QPoly r = poly_add(poly_mul(pm, legendre_w_coeffs(n)), poly_mul(pn, legendre_w_coeffs(n - 1)), -1);
  for (auto& c : logpart)
    if (c != 0) throw std::logic_error("legendre_wronskian: log parts do not cancel");
  return r;
}

LegendreIU legendre_iu(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("legendre_iu: m must be odd and positive");
  QPoly P = legendre_p_coeffs(m), W = legendre_w_coeffs(m);
  LegendreIU r;
  r.p.assign(P.size(), mpq_class(0));
  for (size_t j = 1; j < P.size(); j += 2) r.p[j] = ((j - 1) / 2) % 2 ? -P[j] : P[j];
  r.w.assign(W.size(), mpq_class(0));
  for (size_t j = 0; j < W.size(); j += 2) r.w[j] = (j / 2) % 2 ? -W[j] : W[j];
  for (size_t j = 1; j < W.size(); j += 2)
    if (W[j] != 0) throw std::logic_error("legendre_iu: W_m has odd terms");
  return r;
}

}  // namespace poincare::numkit
