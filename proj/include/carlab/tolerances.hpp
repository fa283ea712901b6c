#pragma once

namespace carlab {

struct Tolerances {
  double algebraic = 1e-12;    // matrix identities
  double quadrature = 1e-10;   // quadrature vs. Fourier comparisons
  double rank_zero = 1e-7;     // singular values at or below count as zero
  double rank_nonzero = 1e-3;  // singular values at or above count as nonzero
  double convergence = 1e-8;   // window-enlargement stability
  double subspace = 1e-9;      // subspace containment residual
  double loop_tail = 1e-14;    // truncation of exp(i h) coefficients
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace carlab
