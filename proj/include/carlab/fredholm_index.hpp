#pragma once

// Charge index q(U) = dim coker - dim ker of the compression P U P on ran P.
//
// The compression of a band-limited U to P H_0 is represented exactly by a
// tall section: domain modes whose columns are complete inside the window,
// codomain all modes of ran P inside the exact block. Kernel dimensions are
// read off the singular values of that section (for the cokernel, of the
// section of U*), requiring a clean gap between the zero cluster (<= 1e-7)
// and the rest (>= 1e-3).

#include <vector>

#include "carlab/mode_space.hpp"

namespace carlab {

enum class Half { nonnegative, negative };

struct CompressionRank {
  int kernel_dim = 0;
  int cokernel_dim = 0;
  int q() const { return cokernel_dim - kernel_dim; }
  std::vector<double> kernel_singular_values;    // section of U
  std::vector<double> cokernel_singular_values;  // section of U*
};

/// Kernel/cokernel of the compression of u to one spectral half, one window.
CompressionRank compression_rank(const OneParticleOperator& u, Half half,
                                 const Tolerances& tol = default_tolerances());

struct IndexReport {
  int kernel_dim = 0;
  int cokernel_dim = 0;
  int q = 0;
  bool stable = false;
  std::vector<double> singular_values;
  std::vector<int> windows;
};

/// q at n_max, n_max + 4, n_max + 8; throws NotStabilized if they differ.
IndexReport charge_index(const OperatorFamily& u, const ModeWindow& w, Half half = Half::nonnegative,
                         const Tolerances& tol = default_tolerances());
IndexReport charge_index(const LoopFunction& f, const Tolerances& tol = default_tolerances());

/// Window large enough for a stable index of an operator of this bandwidth.
ModeWindow index_window(int bandwidth);

/// q(U_f U_g) == q(U_f) + q(U_g), the product taken as window matrices.
bool verify_additivity(const LoopFunction& f, const LoopFunction& g,
                       const Tolerances& tol = default_tolerances());

/// charge_index(U_f).q == winding_number(f).
bool index_winding_agreement(const LoopFunction& f, const Tolerances& tol = default_tolerances());

OperatorFamily product_family(OperatorFamily a, OperatorFamily b);

}  // namespace carlab
