#pragma once

// Doubled space H = H0 (+) H0 with conjugation Gamma(f, g) = (gamma g, gamma f).
// Every doubled operator used here is block diagonal, so it is stored as two
// window-sized blocks.

#include "carlab/fredholm_index.hpp"
#include "carlab/mode_space.hpp"

namespace carlab {

struct DoubledVector {
  Eigen::VectorXcd top;
  Eigen::VectorXcd bottom;

  double squared_norm() const { return top.squaredNorm() + bottom.squaredNorm(); }
  cplx inner(const DoubledVector& o) const { return top.dot(o.top) + bottom.dot(o.bottom); }
  DoubledVector operator+(const DoubledVector& o) const { return {top + o.top, bottom + o.bottom}; }
  DoubledVector operator-(const DoubledVector& o) const { return {top - o.top, bottom - o.bottom}; }
  DoubledVector operator*(cplx s) const { return {top * s, bottom * s}; }
};

/// Gamma(f, g) = (gamma g, gamma f); antilinear.
DoubledVector doubled_conjugation(const DoubledVector& h);

struct DoubledOperator {
  OneParticleOperator top;
  OneParticleOperator bottom;

  DoubledVector apply(const DoubledVector& h) const {
    return {top.matrix() * h.top, bottom.matrix() * h.bottom};
  }
  DoubledOperator operator*(const DoubledOperator& o) const { return {top * o.top, bottom * o.bottom}; }
  DoubledOperator operator-(const DoubledOperator& o) const { return {top - o.top, bottom - o.bottom}; }
  double max_abs() const {
    return std::max(top.matrix().cwiseAbs().maxCoeff(), bottom.matrix().cwiseAbs().maxCoeff());
  }
};

/// Gamma X Gamma for a block-diagonal X = diag(A, B): diag(gamma B gamma, gamma A gamma).
DoubledOperator gamma_conjugated(const DoubledOperator& x);

/// Pi(f, g) = (P f, gamma P^perp gamma g).
struct BasisProjection {
  OneParticleOperator p;
  DoubledOperator pi;
};

BasisProjection basis_projection(const OneParticleOperator& p, double tol = 1e-12);
BasisProjection standard_basis_projection(const ModeWindow& w);

/// || Pi + Gamma Pi Gamma - 1 ||_max
double basis_projection_defect(const BasisProjection& bp);

/// phi(U) = diag(U, gamma U gamma). Requires U unitary on the interior.
DoubledOperator bogoljubov_double(const OneParticleOperator& u, double tol = 1e-12);
/// phi(A) = diag(A, -A). Requires A = A* and gamma A gamma = A.
DoubledOperator antisym_double(const OneParticleOperator& a, double tol = 1e-12);

/// exp(i t A) for selfadjoint A on the window (spectral calculus).
OneParticleOperator unitary_exp(const OneParticleOperator& a, double t);
DoubledOperator unitary_exp(const DoubledOperator& a, double t);

bool commutes_with_basis_projection(const DoubledOperator& x, const BasisProjection& bp, double tol = 1e-12);

struct ImplementabilityReport {
  HsReport hs;
  int index_p = 0;       // ind P U P | P H0 (coker - ker)
  int index_p_perp = 0;  // ind P^perp U P^perp | P^perp H0
  int index_sum = 0;
  bool implementable = false;  // both HS norms converged
};

/// HS off-diagonal norms plus the two compression indices; asserts the
/// index sum vanishes whenever the norms converged.
ImplementabilityReport implementability_check(const OperatorFamily& u, const ModeWindow& w,
                                              const Tolerances& tol = default_tolerances());
ImplementabilityReport implementability_check(const LoopFunction& f,
                                              const Tolerances& tol = default_tolerances());

}  // namespace carlab
