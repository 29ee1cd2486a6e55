#pragma once
#include "poincare/numkit/parallel.hpp"

namespace poincare::eisenstein {

struct UpperHalfPoint {
  double x = 0;
  double y = 1;
};

// E_s(z) = sum over coprime (m,n), m > 0 or (0,1), of y^s / |mz+n|^{2s}.
// Evaluated as (1/2 sum over nonzero lattice points with max(|m|,|n|) <= cutoff + exterior
// integral of the same density) / zeta(2s). Throws DomainError for s <= 1.
double eisenstein_lattice(double s, UpperHalfPoint z, int cutoff, Exec exec = Exec::parallel);

// constant-term coefficients a0(y) = c_main y^{3/2} + c_sec y^{-1/2}
struct ConstantMode {
  double c_main;
  double c_sec;
};
ConstantMode constant_mode_closed();  // (1, pi^2 / (3 zeta(3)))
// fitted from x-averages of the lattice evaluator at two heights
ConstantMode calibrate_constant_mode(double y1, double y2, int cutoff);

// n-th x-Fourier mode of E_{3/2}(x+iy); UnsupportedError for s != 3/2
double eisenstein_mode(double s, int n, double y);
// same mode from an equispaced x-average of the lattice evaluator
double lattice_mode(double s, int n, double y, int cutoff, int points = 32);

// sum_{|n| <= N} eisenstein_mode(3/2, n, y) e(n x)
double eisenstein_fourier(UpperHalfPoint z, int N);

// a_{n1}(y) a_{n2}(y)
double rhs_pair_mode(int n1, int n2, double y);

// largest discrepancy of the two unfolding identities for gamma = [[m1, n1], [m2, n2]]
// (the norm identity is compared relative to its right side); DegenerateError if det = 0
double unfold_identity_check(long m1, long n1, long m2, long n2, UpperHalfPoint z);

}  // namespace poincare::eisenstein
