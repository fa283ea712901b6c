#include "carlab/selfdual_car.hpp"

#include <Eigen/Eigenvalues>

#include "carlab/errors.hpp"

namespace carlab {

DoubledVector doubled_conjugation(const DoubledVector& h) {
  return {conjugate_vector(h.bottom), conjugate_vector(h.top)};
}

DoubledOperator gamma_conjugated(const DoubledOperator& x) {
  return {conjugated(x.bottom), conjugated(x.top)};
}

BasisProjection basis_projection(const OneParticleOperator& p, double tol) {
  if (!is_projection(p, tol)) throw PreconditionError("basis_projection: P is not an orthoprojection");
  const OneParticleOperator p_perp = identity_operator(p.window()) - p;
  return {p, DoubledOperator{p, conjugated(p_perp)}};
}

BasisProjection standard_basis_projection(const ModeWindow& w) {
  return basis_projection(nonnegative_projection(w));
}

double basis_projection_defect(const BasisProjection& bp) {
  const DoubledOperator g = gamma_conjugated(bp.pi);
  const ModeWindow& w = bp.p.window();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(w.dim(), w.dim());
  return std::max((bp.pi.top.matrix() + g.top.matrix() - id).cwiseAbs().maxCoeff(),
                  (bp.pi.bottom.matrix() + g.bottom.matrix() - id).cwiseAbs().maxCoeff());
}

DoubledOperator bogoljubov_double(const OneParticleOperator& u, double tol) {
  if (!u.is_unitary_on_interior(tol)) throw PreconditionError("bogoljubov_double: U is not unitary");
  DoubledOperator phi{u, conjugated(u)};
  if ((gamma_conjugated(phi) - phi).max_abs() > tol) {
    throw ConsistencyError("bogoljubov_double: Gamma phi Gamma != phi");
  }
  return phi;
}

DoubledOperator antisym_double(const OneParticleOperator& a, double tol) {
  if (!a.is_hermitian(tol)) throw PreconditionError("antisym_double: A is not selfadjoint");
  if (!commutes_with_conjugation(a, tol)) throw PreconditionError("antisym_double: gamma A gamma != A");
  DoubledOperator phi{a, a * cplx(-1.0)};
  const DoubledOperator g = gamma_conjugated(phi);
  if (std::max((g.top.matrix() + phi.top.matrix()).cwiseAbs().maxCoeff(),
               (g.bottom.matrix() + phi.bottom.matrix()).cwiseAbs().maxCoeff()) > tol) {
    throw ConsistencyError("antisym_double: Gamma phi(A) Gamma != -phi(A)");
  }
  return phi;
}

OneParticleOperator unitary_exp(const OneParticleOperator& a, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.matrix());
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<cplx>() * cplx(0.0, t)).array().exp().matrix();
  Eigen::MatrixXcd m = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  // The window exponential is dense and carries truncation error everywhere.
  return OneParticleOperator(a.window(), std::move(m), -1);
}

DoubledOperator unitary_exp(const DoubledOperator& a, double t) {
  return {unitary_exp(a.top, t), unitary_exp(a.bottom, t)};
}

bool commutes_with_basis_projection(const DoubledOperator& x, const BasisProjection& bp, double tol) {
  return ((x * bp.pi) - (bp.pi * x)).max_abs() <= tol;
}

ImplementabilityReport implementability_check(const OperatorFamily& u, const ModeWindow& w,
                                              const Tolerances& tol) {
  ImplementabilityReport r;
  r.hs = hs_offdiag_norms(u, w, tol);
  r.implementable = r.hs.converged;
  r.index_p = charge_index(u, w, Half::nonnegative, tol).q;
  r.index_p_perp = charge_index(u, w, Half::negative, tol).q;
  r.index_sum = r.index_p + r.index_p_perp;
  if (r.implementable && r.index_sum != 0) {
    throw ConsistencyError("implementability_check: ind PUP + ind P^perp U P^perp = " +
                           std::to_string(r.index_sum) + " != 0");
  }
  return r;
}

ImplementabilityReport implementability_check(const LoopFunction& f, const Tolerances& tol) {
  return implementability_check(loop_family(f), index_window(f.bandwidth()), tol);
}

}  // namespace carlab
