#pragma once

// Finite-dimensional matrix algebras: generated *-algebras, commutants,
// centers, relative commutants and spectral averaging in clock-shift models.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace carlab {

using cplx = std::complex<double>;

/// Linear span of d x d matrices, stored as an HS-orthonormal basis.
class MatrixSubspace {
 public:
  MatrixSubspace(int d, std::vector<Eigen::MatrixXcd> spanning, double tol = 1e-9);

  int ambient() const noexcept { return d_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Eigen::MatrixXcd>& basis() const noexcept { return basis_; }
  // HS distance from x to the subspace
  double residual(const Eigen::MatrixXcd& x) const;
  bool contains(const MatrixSubspace& o, double tol = 1e-9) const;
  bool equals(const MatrixSubspace& o, double tol = 1e-9) const { return contains(o, tol) && o.contains(*this, tol); }

 private:
  int d_;
  std::vector<Eigen::MatrixXcd> basis_;
};

struct MatrixAlgebra {
  std::vector<Eigen::MatrixXcd> generators;
  MatrixSubspace span;

  int dim() const { return span.dim(); }
  // max over basis pairs of the distance of b_i b_j to the span
  double closure_defect() const;
};

/// Smallest unital *-algebra containing gens.
MatrixAlgebra generated_algebra(const std::vector<Eigen::MatrixXcd>& gens, int d, double tol = 1e-9);

/// Null space of X -> ([X, G_1], ..., [X, G_k]) inside `within`
/// (the full matrix algebra when within is null).
MatrixSubspace commuting_subspace(const std::vector<Eigen::MatrixXcd>& gens, int d,
                                  const MatrixSubspace* within = nullptr, double tol = 1e-9);

MatrixAlgebra commutant(const MatrixAlgebra& alg, double tol = 1e-9);
/// A intersect A'
MatrixSubspace center(const MatrixAlgebra& alg, double tol = 1e-9);
/// A' intersect F
MatrixSubspace relative_commutant(const MatrixAlgebra& a, const MatrixAlgebra& f, double tol = 1e-9);

struct CenterReport {
  int dim_a = 0;
  int dim_f = 0;
  int dim_center = 0;
  int dim_relative_commutant = 0;
  bool center_equals_relative_commutant = false;
  bool a_is_abelian = false;  // A = Z
  bool containment = true;    // C*(extra) inside Z, when extra generators are supplied
};

CenterReport verify_center_identity(const std::vector<Eigen::MatrixXcd>& a_gens,
                                    const std::vector<Eigen::MatrixXcd>& f_gens, int d,
                                    const std::vector<Eigen::MatrixXcd>& contained_in_center = {},
                                    double tol = 1e-9);

/// U = diag(omega^n) (x) 1_K, V = cyclic shift (x) 1_K with U V U^-1 = omega V.
class ClockShiftModel {
 public:
  ClockShiftModel(int m, int k = 1);

  int modulus() const noexcept { return m_; }
  int multiplicity() const noexcept { return k_; }
  int dim() const noexcept { return m_ * k_; }
  cplx omega() const;
  const Eigen::MatrixXcd& u() const noexcept { return u_; }
  const Eigen::MatrixXcd& v() const noexcept { return v_; }
  Eigen::MatrixXcd u_power(int k) const;
  Eigen::MatrixXcd v_power(int n) const;
  // E_n (x) 1_K
  Eigen::MatrixXcd block_projection(int n) const;
  // Generators of the full matrix algebra M_M (x) M_K
  std::vector<Eigen::MatrixXcd> full_generators() const;
  // Generators of the fixed-point algebra of Ad U^k: block diagonal M_K pieces
  std::vector<Eigen::MatrixXcd> fixed_point_generators() const;

 private:
  int m_;
  int k_;
  Eigen::MatrixXcd u_;
  Eigen::MatrixXcd v_;
};

/// (1/M) sum_k omega^{-nk} U^k F U^{-k}; n in [-M/2, M/2).
Eigen::MatrixXcd spectral_component(const Eigen::MatrixXcd& f, int n, const ClockShiftModel& model);

struct GradingReport {
  double reconstruction = 0.0;  // || sum_n Pi_n(F) - F ||
  double fixed_point = 0.0;     // max_n || [Pi_n(F) V^-n, U] ||
  double idempotence = 0.0;     // max_{n,m} || Pi_n Pi_m F - delta_nm Pi_n F ||
};

GradingReport check_grading(const Eigen::MatrixXcd& f, const ClockShiftModel& model);

}  // namespace carlab
