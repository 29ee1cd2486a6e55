#include "poincare/numkit/arith.hpp"

#include <cmath>
#include <cstdlib>

#include "poincare/common.hpp"

namespace poincare::numkit {

i64 gcd(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  return {r0, s0, t0};
}

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> f;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    f.push_back({p, v});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

std::vector<i64> divisors(i64 n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

mpz_class divisor_sigma(unsigned k, i64 n) {
  if (n < 1) throw DomainError("divisor_sigma: n must be positive");
  mpz_class s = 0;
  for (i64 d : divisors(n)) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += t;
  }
  return s;
}

i64 sigma2(i64 n) {
  if (n < 1) throw DomainError("sigma2: n must be positive");
  i64 s = 1;
  for (auto [p, v] : factorize(n)) {
    i64 t = 1, pk = 1;
    for (int j = 0; j < v; ++j) { pk *= p * p; t += pk; }
    s *= t;
  }
  return s;
}

int mobius(i64 n) {
  if (n < 1) throw DomainError("mobius: n must be positive");
  int m = 1;
  for (auto [p, v] : factorize(n)) {
    if (v > 1) return 0;
    m = -m;
  }
  return m;
}

double von_mangoldt(i64 n) {
  if (n < 2) return 0.0;
  auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f[0].p)) : 0.0;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto [p, v] : factorize(n)) r = r / p * (p - 1);
  return r;
}

i64 ramanujan_sum(i64 q, i64 n) {
  if (q < 1) throw DomainError("ramanujan_sum: q must be positive");
  i64 g = n == 0 ? q : gcd(q, n);
  i64 s = 0;
  for (i64 d : divisors(g)) s += mobius(q / d) * d;
  return s;
}

ArithCache::ArithCache(i64 bound) : bound_(bound), spf_(bound + 1, 0), sigma2_(bound + 1, 0), lambda_(bound + 1, 0.0) {
  if (bound < 1) throw DomainError("ArithCache: bound must be positive");
  for (i64 i = 2; i <= bound; ++i) {
    if (spf_[i]) continue;
    for (i64 j = i; j <= bound; j += i)
      if (!spf_[j]) spf_[j] = i;
  }
  sigma2_[1] = 1;
  for (i64 n = 2; n <= bound; ++n) {
    i64 p = spf_[n], m = n, pk = 1, t = 1;
    while (m % p == 0) { m /= p; pk *= p * p; t += pk; }
    sigma2_[n] = sigma2_[m] * t;
    lambda_[n] = m == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
}

}  // namespace poincare::numkit
