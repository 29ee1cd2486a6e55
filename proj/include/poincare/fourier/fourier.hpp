#pragma once
#include <vector>

#include "poincare/common.hpp"
#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/numkit/parallel.hpp"

namespace poincare::fourier {

using eisenstein::UpperHalfPoint;

// 4 zeta(3)^2: (2 zeta(3) E)^2 = scale * E^2
double default_scale();

// hhat(t) = int h_{3/2}(u) e(-t u) du (real and even); |err| <= 1e-10
Estimate h_hat(double t);

// weight of index n in the Ramanujan-summed series: sigma_{-2}(|n|)/zeta(3), zeta(2)/zeta(3) at 0
double ramanujan_weight(int n);

// n-th mode of Sigma^{0,1}: weight(n) y hhat(n y)
double sigma01_mode(int n, double y);
// same, from the truncated double sum over m2 <= m_max and n2 coprime to m2
double sigma01_direct(int n, double y, int m_max);

// c_inf E_3(z) from the lattice evaluator (the diagonal pairs summed over all of S)
double sigma00_term(UpperHalfPoint z, int cutoff);
// the (0,1),(0,1) limit alone, c_inf y^3; this is the Sigma^{0,0} used in assembly
double sigma00_identity(double y);
// |det|^{-3} h(P/(y det)) along gamma = [[m, n], [m, n + det]] perturbed off the diagonal
// by a real det, P the numerator of Re/Im; tends to c_inf (y/|mz+n|^2)^3
double degenerating_family(long m, long n, UpperHalfPoint z, double det);

// unnormalized pair mode: scale * C(n1) C(n2) / y * I(n1, n2; y), C = ramanujan_weight;
// equals (4/(y n1^2 n2^2)) sigma2 sigma2 I for n1 n2 != 0
double mode_pair(int n1, int n2, double y);
// alpha_{n1,n2} sqrt(y) K_{7/2}(2 pi |n1+n2| y), nondegenerate pairs
double mode_pair_homogeneous(int n1, int n2, double y);

struct ModeResidual {
  double lhs = 0;  // y^2 f'' - (4 pi^2 X^2 y^2 + 12) f
  double rhs = 0;  // a_{n1} a_{n2}
  double residual = 0;  // |lhs + s rhs|
  double relative = 0;  // residual / max(|y^2 f''|, |(..) f|, |s rhs|)
};
// exact y-derivatives of the closed forms; DegenerateError for degenerate pairs
ModeResidual pde_mode_residual(int n1, int n2, double y, double s);
// 5-point central differences with step h (independent check)
ModeResidual pde_mode_residual_fd(int n1, int n2, double y, double s, double h = 1e-3);
// -lhs/rhs at one point
double calibrate_scale(int n1, int n2, double y);
// the same operator on the homogeneous part alone, relative to |(..) f|
double homogeneous_residual(int n1, int n2, double y);

struct ModeAssembly {
  int n = 0;
  double y = 0;
  int window = 0;
  double sigma00 = 0;  // n = 0 only, already times scale
  double sigma01 = 0;  // 2 scale Sigma01_n
  double pairs = 0;    // sum of mode_pair over n1+n2 = n, |n1|,|n2| <= W
  double degenerate = 0;  // the part of pairs from n1 n2 (n1+n2) = 0
  double tail = 0;     // largest |mode_pair| among the outermost pairs
  double total = 0;
};
ModeAssembly assemble_mode(int n, double y, int W, Exec exec = Exec::parallel);

struct FieldValue {
  double value = 0;
  double tail = 0;
  std::vector<ModeAssembly> modes;  // n = 0..2W
};
// f(z) truncated at |n1|,|n2| <= W (modes |n| <= 2W); f is even in x
FieldValue assemble_f(UpperHalfPoint z, int W, Exec exec = Exec::parallel);

struct FieldResidual {
  double laplace_minus_12 = 0;  // (Delta - 12) f by finite differences
  double source = 0;            // scale * E_{3/2}^2 (Fourier evaluator)
  double residual = 0;          // |(Delta-12) f + source|
};
FieldResidual field_pde_residual(UpperHalfPoint z, int W, double step = 1e-2,
                                 double scale = default_scale(), Exec exec = Exec::parallel);

}  // namespace poincare::fourier
