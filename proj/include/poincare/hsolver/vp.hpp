#pragma once

namespace poincare::hsolver {

// variation-of-parameters particular solution (c1 = c2 = 0), integrals from 1 to u.
// Needs integer Legendre degrees (4b+1 a perfect square); returns the real part.
// Throws UnsupportedError otherwise, AccuracyError if the two quadrature orders disagree.
double h_vp_numeric(double a, double b, double u);

}  // namespace poincare::hsolver
