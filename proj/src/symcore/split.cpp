#include "poincare/symcore/split.hpp"

#include <cmath>
#include <mutex>

#include "poincare/common.hpp"

namespace poincare::symcore {

namespace {
// num * P1^b P2^c / v^a exactly, or SplitFailure
BiPoly rescale(const RatTerm& t, int want_p1, int want_p2, int extra_v) {
  if (t.dp1 > want_p1 || t.dp2 > want_p2) throw SplitFailure("split: denominator exceeds prefactor");
  BiPoly n = t.num * factor_p1().pow(want_p1 - t.dp1) * factor_p2().pow(want_p2 - t.dp2);
  for (int i = 0; i < t.dv + extra_v; ++i) {
    auto q = n.divide_exact(factor_v());
    if (!q) throw SplitFailure("split: numerator not divisible by r2-r1");
    n = std::move(*q);
  }
  return n;
}

mpz_class denom_lcm(const BiPoly& p, mpz_class acc) {
  for (auto& [m, c] : p.terms()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}
}  // namespace

SplitResult split_T1_T2(const NormalForm& e) {
  const MonoKey k1{0, 0, 0, 0, 0, 1}, k2{1, 1, 0, 0, 0, 0};
  SplitResult s;
  for (auto& [k, t] : e.terms()) {
    if (k == k1)
      s.p1 = rescale(t, 7, 7, 1);
    else if (k == k2)
      s.p2 = rescale(t, 8, 8, 0);
    else
      throw SplitFailure("split: unexpected monomial (arctan or other atom survives)");
  }
  // rebuild and subtract
  NormalForm rebuilt;
  rebuilt.add(k1, RatTerm{s.p1 * factor_v(), 0, 7, 7});
  rebuilt.add(k2, RatTerm{s.p2, 0, 8, 8});
  s.residual = e + rebuilt.scaled(-1);
  if (!s.residual.is_zero()) throw SplitFailure("split: nonzero residual");
  s.denominator = denom_lcm(s.p2, denom_lcm(s.p1, 1));
  s.p1_symmetric = s.p1 == s.p1.swapped();
  s.p2_symmetric = s.p2 == s.p2.swapped();
  return s;
}

double T1_eval(const SplitResult& s, double r1, double r2) {
  double P = (1 + r1 * r1) * (1 + r2 * r2);
  return std::abs(r2 - r1) * s.p1.eval(r1, r2) / (pi * std::pow(P, 7));
}
double T2_eval(const SplitResult& s, double r1, double r2) {
  double P = (1 + r1 * r1) * (1 + r2 * r2);
  return s.p2.eval(r1, r2) / std::pow(P, 7.5);
}

const SplitResult& d7_split() {
  static const SplitResult s = split_T1_T2(apply_D(normalize(build_H()), 7));
  return s;
}

std::string dump_golden(const SplitResult& s) {
  return "# p1\n" + s.p1.dump() + "# p2\n" + s.p2.dump() + "# denominator " +
         s.denominator.get_str() + "\n";
}

}  // namespace poincare::symcore
