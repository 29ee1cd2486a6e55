#include <cmath>
#include <complex>
#include <cstdlib>

#include "poincare/convolution/convolution.hpp"
#include "poincare/numkit/special.hpp"

namespace poincare::convolution {

namespace {
using cd_t = std::complex<double>;
cd_t e_of(double x) { return std::exp(cd_t(0, 2 * pi * x)); }
bool divides(i64 a, i64 b) { return b % a == 0; }
}  // namespace

MinimalSolution minimal_solution(i64 c, i64 d, i64 r) {
  if (c < 1 || d < 1) throw DomainError("minimal_solution: c, d must be positive");
  if (r == 0) throw DomainError("minimal_solution: r = 0");
  const i64 g = numkit::gcd(c, d);
  if (r % g != 0) throw NoSolutionError("minimal_solution: (c,d) does not divide r");
  // d x + c y = g  =>  a0 = x r/g, b0 = -y r/g
  auto e = numkit::ext_gcd(d, c);
  const i64 q = r / g, D = d / g, C = c / g;
  const i64 a0 = e.x * q, b0 = -e.y * q;
  i64 b = ((b0 % D) + D) % D;
  if (2 * b > D) b -= D;
  const i64 m = (b - b0) / D;
  MinimalSolution s;
  s.r = r;
  s.c = c;
  s.d = d;
  s.g_cd = g;
  s.b_star = b;
  s.a_star = a0 + m * C;
  return s;
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::both_divide: return "both-divide";
    case CaseTag::d_only: return "d-only";
    case CaseTag::c_only: return "c-only";
    case CaseTag::neither: return "neither";
  }
  return "?";
}

ConvolutionCase classify(i64 c, i64 d, i64 r) {
  ConvolutionCase k;
  k.sol = minimal_solution(c, d, r);
  const bool cr = divides(c, r), dr = divides(d, r);
  k.tag = cr && dr ? CaseTag::both_divide : dr ? CaseTag::d_only : cr ? CaseTag::c_only : CaseTag::neither;
  const i64 g = k.sol.g_cd, C = c / g;
  // b = 0 happens only at m = 0 with b* = 0; a = 0 where a* + m C = 0
  if (k.sol.b_star == 0) k.excluded_m.push_back(0);
  if (k.sol.a_star % C == 0) k.excluded_m.push_back(-k.sol.a_star / C);
  mpq_class x(mpz_class(-k.sol.b_star * g), mpz_class(d));
  x.canonicalize();
  // reduce into [0,1)
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  k.x_cd = x - mpq_class(fl);
  k.y_cd = mpq_class(mpz_class(2 * c * d), mpz_class(r * g));
  k.y_cd.canonicalize();
  return k;
}

namespace {
cd_t sumg_complex(double y, double x) {
  const cd_t e = e_of(x);
  return -30 * y / pi * numkit::clausen_im_li2(x) - 60 * std::log(std::abs(1.0 - e)) -
         cd_t(0, 24 * pi / y) * (1.0 + e) / (1.0 - e) - 16 * pi * pi / (y * y) * e / ((e - 1.0) * (e - 1.0));
}
}  // namespace

double sumg_generic(double y, double x) { return sumg_complex(y, x).real(); }
double sumg_generic_imag(double y, double x) { return sumg_complex(y, x).imag(); }

double sumg_integer(double y) {
  return 60 * std::log(std::abs(y / (2 * pi))) + 60 + 4 * pi * pi / (3 * y * y);
}

TrValue t_r_closed(i64 c, i64 d, i64 r) {
  TrValue t;
  const i64 g = numkit::gcd(c, d);
  if (r % g != 0) {
    t.has_terms = false;
    return t;
  }
  const double delta = divides(c, r) ? g2() : 0.0;
  const double cdv = double(c) * double(d), rg = double(r) * double(g);
  if (divides(d, r)) {
    t.value = 60 * std::log(std::abs(cdv / (rg * pi))) + 60 + rg * rg * pi * pi / (3 * cdv * cdv) - delta;
    return t;
  }
  const ConvolutionCase k = classify(c, d, r);
  const double x = k.x_cd.get_d();
  const cd_t e = e_of(x);
  cd_t v = -delta - 60 * cdv / (rg * pi) * numkit::clausen_im_li2(x) - 60 * std::log(std::abs(1.0 - e)) -
           cd_t(0, 12 * rg * pi / cdv) * (1.0 + e) / (1.0 - e) -
           4 * rg * rg * pi * pi / (cdv * cdv) * e / ((e - 1.0) * (e - 1.0));
  t.value = v.real();
  t.imag = v.imag();
  return t;
}

}  // namespace poincare::convolution
