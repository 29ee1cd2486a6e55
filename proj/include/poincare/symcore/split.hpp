#pragma once
#include "poincare/symcore/expr.hpp"

namespace poincare::symcore {

// D^7 H = (1/pi) |r2-r1| p1 / (P1 P2)^7 + p2 / (P1 P2)^{15/2}
struct SplitResult {
  BiPoly p1, p2;
  mpz_class denominator = 1;  // p1, p2 integer after multiplying by this
  NormalForm residual;
  bool p1_symmetric = false, p2_symmetric = false;  // invariance under r1 <-> r2
};

// e must be D^7 H on the chart r2 > r1; throws SplitFailure
SplitResult split_T1_T2(const NormalForm& e);

// the two pieces evaluated (either chart, via |r2-r1| and the swap symmetry)
double T1_eval(const SplitResult& s, double r1, double r2);
double T2_eval(const SplitResult& s, double r1, double r2);

// cached D^7 H split (computed once)
const SplitResult& d7_split();

// stable text dump of p1, p2
std::string dump_golden(const SplitResult& s);

}  // namespace poincare::symcore
