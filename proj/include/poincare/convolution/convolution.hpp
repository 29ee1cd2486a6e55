#pragma once
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "poincare/common.hpp"
#include "poincare/numkit/arith.hpp"

namespace poincare::convolution {

using numkit::i64;

// g(x) = 60 x log|x| - 60 log|x| - 60 + 24/x + 4/x^2; PoleError at 0
double g_eval(double x);
// g(x) + g(-x) - 8(-15 log|x| + 1/x^2 - 15)
double g_reflection_defect(double x);
double g2();  // g(2) = 60 log 2 - 47

// sigma2(|m|) sigma2(|n|) (g(2m/(m+n)) + g(2n/(m+n))); DomainError if m n (m+n) = 0
double alpha_tilde(i64 m, i64 n);
// sigma2(|r|) (r^2 zeta(2) + 60 zeta'(-2))
double alpha_tilde_axis(i64 r);

struct MinimalSolution {
  i64 r = 0, c = 0, d = 0;
  i64 a_star = 0, b_star = 0;
  i64 g_cd = 1;
};
// a d - b c = r with |b| minimal (ties toward b >= 0); NoSolutionError if (c,d) does not divide r
MinimalSolution minimal_solution(i64 c, i64 d, i64 r);

enum class CaseTag { both_divide, d_only, c_only, neither };
std::string to_string(CaseTag t);

struct ConvolutionCase {
  CaseTag tag = CaseTag::neither;
  std::vector<i64> excluded_m;  // in the parametrization a = a* + m c/(c,d), b = b* + m d/(c,d)
  mpq_class x_cd;               // -b (c,d)/d reduced into [0,1)
  mpq_class y_cd;               // 2 c d / (r (c,d))
  MinimalSolution sol;
};
ConvolutionCase classify(i64 c, i64 d, i64 r);

// the Poisson-summed sum over n of g(y (n + x)), x not an integer
double sumg_generic(double y, double x);
// its imaginary part before simplification (should be 0)
double sumg_generic_imag(double y, double x);
// sum over n != 0 of g(n y)
double sumg_integer(double y);

struct TrValue {
  double value = 0;
  double imag = 0;       // imaginary part left by the complex form (d not dividing r)
  bool has_terms = true;  // false when (c,d) does not divide r
};
TrValue t_r_closed(i64 c, i64 d, i64 r);

// regularized value: exact coefficients over zeta(2), zeta'(-2), g(2), plus a floating remainder
struct RegValue {
  mpq_class c_zeta2, c_zetap2, c_g2;
  double remainder = 0;  // transcendental groups (Clausen, logs, trig) after pairing
  double value() const;
  RegValue& operator+=(const RegValue& o);
  RegValue scaled(const mpq_class& k) const;
};

struct PairedTerm {
  i64 c = 0;        // paired with d - c (c <= d - c)
  double sum = 0;   // floating value of the two Hurwitz/Clausen brackets together
  bool exact_zero = false;  // all grouped rational coefficients cancel
};

struct LdrResult {
  i64 d = 0, r = 0;
  bool d_divides_r = false;
  RegValue value;
  std::vector<PairedTerm> pairs;  // d not dividing r only
  double closed_form = 0;         // the closed value for comparison
};
LdrResult l_dr_minus2(i64 d, i64 r);

// L_{d,r}(s) at real s > 2 from the Hurwitz / Lemma form, and the direct truncated sum
double l_dr_at(i64 d, i64 r, double s);
Estimate l_dr_direct(i64 d, i64 r, double s, i64 N);

enum class LemmaVariant { log_gcd, gcd_power };
LemmaVariant parse_variant(const std::string& v);
double lemma_dirichlet(i64 d, double s, LemmaVariant v, int k = 2);
Estimate lemma_dirichlet_truncated(i64 d, double s, LemmaVariant v, int k, i64 N);
// the lemma product at s = -2, k = 2 in exact arithmetic (equals d^2)
mpq_class lemma_product_minus2(i64 d);

struct IdentityRecord {
  i64 r = 0;
  RegValue lhs;
  double lhs_value = 0, rhs = 0, discrepancy = 0, relative = 0;
  bool exact = false;  // coefficients of lhs and rhs agree exactly
};
IdentityRecord a_r_identity(i64 r);

struct PartialSums {
  double at_N = 0, at_2N = 0, difference = 0;
};
// Gaussian-smoothed partial sums of alpha~_{m, r-m} (exploratory)
PartialSums smoothed_partial_sum(i64 r, i64 N);
// same with weight 1 on |m| <= N
double raw_partial_sum(i64 r, i64 N);

}  // namespace poincare::convolution
