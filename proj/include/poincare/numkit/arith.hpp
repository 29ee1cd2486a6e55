#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace poincare::numkit {

using i64 = std::int64_t;

i64 gcd(i64 a, i64 b);

struct ExtGcd {
  i64 g, x, y;  // a*x + b*y = g >= 0
};
ExtGcd ext_gcd(i64 a, i64 b);

// sum of d^k over d | n; n >= 1
mpz_class divisor_sigma(unsigned k, i64 n);
// fast sigma_2 for n up to ~2e6
i64 sigma2(i64 n);

int mobius(i64 n);
double von_mangoldt(i64 n);
i64 euler_phi(i64 n);

// c_q(n) via sum_{d | (q,n)} mu(q/d) d
i64 ramanujan_sum(i64 q, i64 n);

std::vector<i64> divisors(i64 n);

struct PrimePower {
  i64 p;
  int v;
};
std::vector<PrimePower> factorize(i64 n);

// sieve tables up to bound: smallest prime factor, sigma_2, Lambda
class ArithCache {
 public:
  explicit ArithCache(i64 bound);
  i64 bound() const { return bound_; }
  i64 spf(i64 n) const { return spf_[n]; }
  i64 sigma2(i64 n) const { return sigma2_[n]; }
  double lambda(i64 n) const { return lambda_[n]; }

 private:
  i64 bound_;
  std::vector<i64> spf_;
  std::vector<i64> sigma2_;
  std::vector<double> lambda_;
};

}  // namespace poincare::numkit
