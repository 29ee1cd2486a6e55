#include <cmath>
#include <complex>
#include <map>

#include <boost/math/special_functions/zeta.hpp>
#include <gsl/gsl_sf_zeta.h>

#include "poincare/convolution/convolution.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::convolution {

namespace {
using cd_t = std::complex<double>;

mpq_class sigma_k_exact(unsigned k, i64 r) { return mpq_class(numkit::divisor_sigma(k, std::llabs(r))); }

double sigma_minus_s(i64 r, double s) {
  double acc = 0;
  for (i64 c : numkit::divisors(std::llabs(r))) acc += std::pow(double(c), -s);
  return acc;
}

// zeta'(s) = -sum log n / n^s, Euler-Maclaurin after 1000 terms
double zeta_prime(double s) {
  const int N = 1000;
  double acc = 0;
  for (int n = 2; n < N; ++n) acc += std::log(double(n)) * std::pow(double(n), -s);
  const double L = std::log(double(N)), fN = L * std::pow(double(N), -s);
  const double fpN = std::pow(double(N), -s - 1) * (1 - s * L);
  acc += fN / 2 + std::pow(double(N), 1 - s) * (L / (s - 1) + 1 / ((s - 1) * (s - 1))) - fpN / 12;
  return -acc;
}

double lambda_sum(i64 d, double s) {
  double acc = 0;
  for (i64 l : numkit::divisors(d)) acc += numkit::von_mangoldt(l) * std::pow(double(l), -s);
  return acc;
}

double gcd_power_product(i64 d, double s, int k) {
  double prod = 1;
  for (auto [p, v] : numkit::factorize(d)) {
    double geo = 0;
    for (int j = 1; j <= v; ++j) geo += std::pow(double(p), -j * s);
    prod *= 1 + (1 - std::pow(double(p), -k)) * geo;
  }
  return prod;
}

mpq_class frac(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

// the four grouped kinds of transcendental factor in L_{d,r}(-2), d not dividing r
enum Kind { kClausen, kLog, kCot, kInvSin2 };
bool odd_kind(int k) { return k == kClausen || k == kCot; }

double kind_value(int kind, double x) {
  const cd_t e = std::exp(cd_t(0, 2 * pi * x));
  switch (kind) {
    case kClausen: return numkit::clausen_im_li2(x) / pi;
    case kLog: return std::log(std::abs(1.0 - e));
    // (1+e)/(1-e) = i cot(pi x); e/(e-1)^2 = -1/(4 sin^2(pi x)); evaluated from e directly
    case kCot: return (pi * (-cd_t(0, 1)) * (1.0 + e) / (1.0 - e)).real();
    default: return (pi * pi * (-4.0) * e / ((e - 1.0) * (e - 1.0))).real();
  }
}

struct Bracket {
  std::map<std::pair<int, mpq_class>, mpq_class> groups;  // (kind, canonical x) -> coefficient
  double value = 0;
  void add(int kind, const mpq_class& x, const mpq_class& coeff) {
    mpq_class xc = x;
    mpq_class sgn = 1;
    if (x > mpq_class(1, 2)) {
      xc = 1 - x;
      if (odd_kind(kind)) sgn = -1;
    }
    // Im Li2 and cot are odd about 1/2, hence zero there
    if (odd_kind(kind) && xc == mpq_class(1, 2)) return;
    auto& slot = groups[{kind, xc}];
    slot += sgn * coeff;
    value += coeff.get_d() * kind_value(kind, x.get_d());
  }
  bool all_zero() const {
    for (auto& [k, v] : groups)
      if (v != 0) return false;
    return true;
  }
};

// the bracket for one c at s = -2 (d not dividing r)
void bracket_minus2(i64 c, i64 d, i64 r, Bracket& b) {
  const i64 g = numkit::gcd(c, d);
  const ConvolutionCase k = classify(c, d, r);
  const mpq_class a = frac(c, d);
  const mpq_class h3 = numkit::hurwitz_zeta_nonpos(-3, a), h2 = numkit::hurwitz_zeta_nonpos(-2, a),
                  h1 = numkit::hurwitz_zeta_nonpos(-1, a), h0 = numkit::hurwitz_zeta_nonpos(0, a);
  const mpz_class D = d, R = r, G = g;
  b.add(kClausen, k.x_cd, frac(-60 * D * D * D * D, R * G) * h3);
  b.add(kLog, k.x_cd, -60 * D * D * h2);
  // -(12 r g pi i) (1+e)/(1-e) = 12 r g [pi cot]; the kind carries pi cot as -i pi (1+e)/(1-e)
  b.add(kCot, k.x_cd, mpq_class(-12 * R * G) * h1 * -1);
  // -(4 r^2 g^2 pi^2 / d^2) e/(e-1)^2: the kind carries -4 pi^2 e/(e-1)^2
  b.add(kInvSin2, k.x_cd, frac(R * R * G * G, D * D) * h0);
}
}  // namespace

double RegValue::value() const {
  const auto& z = numkit::zeta_constants();
  return c_zeta2.get_d() * z.zeta2 + c_zetap2.get_d() * z.zeta_prime_minus2 + c_g2.get_d() * g2() + remainder;
}

RegValue& RegValue::operator+=(const RegValue& o) {
  c_zeta2 += o.c_zeta2;
  c_zetap2 += o.c_zetap2;
  c_g2 += o.c_g2;
  remainder += o.remainder;
  return *this;
}

RegValue RegValue::scaled(const mpq_class& k) const {
  RegValue r = *this;
  r.c_zeta2 *= k;
  r.c_zetap2 *= k;
  r.c_g2 *= k;
  r.remainder *= k.get_d();
  return r;
}

mpq_class lemma_product_minus2(i64 d) {
  // prod_p (1 + (1 - p^{-2})(p^2 + ... + p^{2 v}))
  mpq_class prod = 1;
  for (auto [p, v] : numkit::factorize(d)) {
    mpq_class geo = 0, pp = 1;
    for (int j = 1; j <= v; ++j) {
      pp *= p * p;
      geo += pp;
    }
    prod *= 1 + (1 - frac(1, p * p)) * geo;
  }
  return prod;
}

LdrResult l_dr_minus2(i64 d, i64 r) {
  if (d < 1 || r == 0) throw DomainError("l_dr_minus2: need d >= 1, r != 0");
  LdrResult res;
  res.d = d;
  res.r = r;
  res.d_divides_r = r % d == 0;
  const auto& z = numkit::zeta_constants();
  const mpq_class sig2 = sigma_k_exact(2, r);
  const mpq_class zeta0 = numkit::hurwitz_zeta_nonpos(0, 1), zeta_m2 = numkit::hurwitz_zeta_nonpos(-2, 1);
  // -g(2) sum_{c | r} c^{-s} at s = -2
  res.value.c_g2 = -sig2;
  if (res.d_divides_r) {
    // sum_c c^{-s} T_r(c,d) term by term:
    //   60 log c                      -> -60 zeta'(s)
    //   60 log(d/(|r| pi)) + 60       -> zeta(s) (...)
    //   -60 log (c,d)                 -> -60 zeta(s) sum_{l|d} Lambda(l) l^{-s}
    //   r^2 pi^2 (c,d)^2 / (3 c^2 d^2) -> r^2 pi^2 / (3 d^2) zeta(s+2) prod_p(...)
    res.value.c_zetap2 = -60;
    const mpq_class R2 = mpq_class(r) * r;
    // pi^2 = 6 zeta(2)
    res.value.c_zeta2 = 2 * R2 * zeta0 * lemma_product_minus2(d) / (mpq_class(d) * d);
    const double log_part = 60 * std::log(double(d) / (std::abs(double(r)) * pi)) + 60 - 60 * lambda_sum(d, -2);
    res.value.remainder = zeta_m2.get_d() * log_part;
    res.closed_form = -60 * z.zeta_prime_minus2 - double(r) * double(r) * z.zeta2 - g2() * sig2.get_d();
    return res;
  }
  Bracket total;
  std::vector<Bracket> per_c(d);
  for (i64 c = 1; c < d; ++c) {
    if (r % numkit::gcd(c, d) != 0) continue;
    bracket_minus2(c, d, r, per_c[c]);
  }
  for (i64 c = 1; 2 * c <= d; ++c) {
    if (r % numkit::gcd(c, d) != 0) continue;
    Bracket pair = per_c[c];
    if (2 * c != d)
      for (auto& [key, v] : per_c[d - c].groups) pair.groups[key] += v;
    PairedTerm t;
    t.c = c;
    t.sum = per_c[c].value + (2 * c != d ? per_c[d - c].value : 0.0);
    t.exact_zero = pair.all_zero();
    res.pairs.push_back(t);
    for (auto& [key, v] : pair.groups) total.groups[key] += v;
  }
  // groups that survive contribute their floating values
  for (auto& [key, v] : total.groups)
    if (v != 0) res.value.remainder += v.get_d() * kind_value(key.first, key.second.get_d());
  res.closed_form = -g2() * sig2.get_d();
  return res;
}

double l_dr_at(i64 d, i64 r, double s) {
  if (!(s > 2)) throw DomainError("l_dr_at: need s > 2");
  const double sig = sigma_minus_s(r, s);
  if (r % d == 0) {
    const double zs = boost::math::zeta(s);
    return -60 * zeta_prime(s) + (60 * std::log(double(d) / (std::abs(double(r)) * pi)) + 60) * zs -
           60 * zs * lambda_sum(d, s) +
           double(r) * double(r) * pi * pi / (3 * double(d) * d) * boost::math::zeta(s + 2) *
               gcd_power_product(d, s, 2) -
           g2() * sig;
  }
  cd_t acc = 0;
  for (i64 c = 1; c < d; ++c) {
    const i64 g = numkit::gcd(c, d);
    if (r % g != 0) continue;
    const double x = classify(c, d, r).x_cd.get_d(), a = double(c) / double(d);
    const cd_t e = std::exp(cd_t(0, 2 * pi * x));
    const double rg = double(r) * g, D = double(d);
    acc += -60 * numkit::clausen_im_li2(x) / (rg * std::pow(D, s - 2) * pi) * gsl_sf_hzeta(s - 1, a) -
           60 * std::log(std::abs(1.0 - e)) / std::pow(D, s) * gsl_sf_hzeta(s, a) -
           cd_t(0, 12 * rg * pi) / std::pow(D, s + 2) * (1.0 + e) / (1.0 - e) * gsl_sf_hzeta(s + 1, a) -
           4 * rg * rg * pi * pi / std::pow(D, s + 4) * e / ((e - 1.0) * (e - 1.0)) * gsl_sf_hzeta(s + 2, a);
  }
  return acc.real() - g2() * sig;
}

Estimate l_dr_direct(i64 d, i64 r, double s, i64 N) {
  double acc = 0, growth = 0;
  for (i64 c = 1; c <= N; ++c) {
    TrValue t = t_r_closed(c, d, r);
    if (!t.has_terms) continue;
    acc += t.value * std::pow(double(c), -s);
    growth = std::max(growth, std::abs(t.value) / double(c));
  }
  // |T_r(c,d)| <= growth * c beyond N
  return {acc, growth * std::pow(double(N), 2 - s) / (s - 2)};
}

LemmaVariant parse_variant(const std::string& v) {
  if (v == "log-gcd") return LemmaVariant::log_gcd;
  if (v == "gcd-power") return LemmaVariant::gcd_power;
  throw DomainError("unknown lemma variant: " + v);
}

double lemma_dirichlet(i64 d, double s, LemmaVariant v, int k) {
  if (d < 1 || !(s > 1)) throw DomainError("lemma_dirichlet: need d >= 1, s > 1");
  if (v == LemmaVariant::log_gcd) return boost::math::zeta(s) * lambda_sum(d, s);
  return boost::math::zeta(s + k) * gcd_power_product(d, s, k);
}

Estimate lemma_dirichlet_truncated(i64 d, double s, LemmaVariant v, int k, i64 N) {
  double acc = 0;
  // summed from the small end; terms decrease
  for (i64 c = N; c >= 1; --c) {
    const double g = double(numkit::gcd(c, d));
    acc += v == LemmaVariant::log_gcd ? std::log(g) * std::pow(double(c), -s)
                                      : std::pow(g, k) * std::pow(double(c), -s - k);
  }
  const double tail = v == LemmaVariant::log_gcd ? std::log(double(d)) * std::pow(double(N), 1 - s) / (s - 1)
                                                  : std::pow(double(d), k) * std::pow(double(N), 1 - s - k) / (s + k - 1);
  return {acc, tail};
}

IdentityRecord a_r_identity(i64 r) {
  if (r == 0 || std::llabs(r) > 10000) throw DomainError("a_r_identity: need 0 < |r| <= 1e4");
  IdentityRecord rec;
  rec.r = r;
  // L_{d,r}(-2) = K for every d not dividing r; K zeta(w) at w = -2 plus the finitely many d | r
  i64 d0 = 2;
  while (r % d0 == 0) ++d0;
  const RegValue K = l_dr_minus2(d0, r).value;
  const mpq_class zeta_m2 = numkit::hurwitz_zeta_nonpos(-2, 1);
  RegValue half = K.scaled(zeta_m2);
  for (i64 d : numkit::divisors(std::llabs(r))) {
    RegValue L = l_dr_minus2(d, r).value;
    L += K.scaled(-1);
    half += L.scaled(mpq_class(d) * d);
  }
  rec.lhs = half.scaled(2);
  const mpq_class sig2 = sigma_k_exact(2, r), R2 = mpq_class(r) * r;
  RegValue rhs;
  rhs.c_zeta2 = -2 * sig2 * R2;
  rhs.c_zetap2 = -120 * sig2;
  rec.rhs = rhs.value();
  rec.lhs_value = rec.lhs.value();
  rec.discrepancy = std::abs(rec.lhs_value - rec.rhs);
  rec.relative = rec.discrepancy / std::abs(rec.rhs);
  rec.exact = rec.lhs.c_zeta2 == rhs.c_zeta2 && rec.lhs.c_zetap2 == rhs.c_zetap2 && rec.lhs.c_g2 == 0 &&
              rec.lhs.remainder == 0;
  return rec;
}

}  // namespace poincare::convolution
