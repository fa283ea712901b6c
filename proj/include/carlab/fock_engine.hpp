#pragma once

// Second quantization over a finite mode window. The vacuum is the Dirac sea;
// see fock_basis.hpp for the sign convention.

#include <memory>
#include <optional>
#include <vector>

#include "carlab/fock_basis.hpp"
#include "carlab/fredholm_index.hpp"
#include "carlab/kernels/fock_kernels.hpp"
#include "carlab/selfdual_car.hpp"

namespace carlab {

using BasisPtr = std::shared_ptr<const FockBasis>;
using kernels::SparseMatrix;

inline constexpr std::size_t kDefaultSectorCap = std::size_t{1} << 16;

/// Sparse operator from `source` to `target`. Columns outside the domain
/// (states too close to the window edge) must not be fed to apply().
class FockOperator {
 public:
  FockOperator(BasisPtr source, BasisPtr target, SparseMatrix m,
               std::shared_ptr<const std::vector<char>> domain = nullptr);

  const FockBasis& source() const noexcept { return *source_; }
  const FockBasis& target() const noexcept { return *target_; }
  const BasisPtr& source_ptr() const noexcept { return source_; }
  const BasisPtr& target_ptr() const noexcept { return target_; }
  const SparseMatrix& matrix() const noexcept { return m_; }
  std::optional<int> charge_shift() const noexcept { return charge_shift_; }
  bool in_domain(std::size_t column) const { return !domain_ || (*domain_)[column]; }
  std::size_t domain_size() const;

  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator*(cplx s) const;
  FockOperator adjoint() const;

  /// Throws MarginExhausted if x has weight outside the domain.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  Eigen::MatrixXcd dense() const;
  double max_abs() const;

 private:
  BasisPtr source_;
  BasisPtr target_;
  SparseMatrix m_;
  std::shared_ptr<const std::vector<char>> domain_;
  std::optional<int> charge_shift_;
};

FockOperator identity(const BasisPtr& basis);
FockOperator creation(int mode, const BasisPtr& full);
FockOperator annihilation(int mode, const BasisPtr& full);
Eigen::VectorXcd basis_vector(const FockBasis& basis, FockState s);
Eigen::VectorXcd vacuum_vector(const FockBasis& basis);

/// pi(B(h)) = sum_n f_n c*_n + sum_n g_{-n} c_n for h = (f, g), on the full basis.
FockOperator car_field(const DoubledVector& h, int n_max);

/// Normal-ordered sum A_pq :c*_p c_q: on `basis`. Requires A = A* and
/// n_max >= 2 bandwidth.
FockOperator dgamma(const OneParticleOperator& a, const BasisPtr& basis, bool parallel = true);
FockOperator dgamma(const OneParticleOperator& a);  // charge-0 sector

struct SchwingerCommutator {
  cplx value;           // [dG(A2), dG(A1)] = value * 1 on the safe sector
  cplx expected;        // i s(A1, A2)
  double residual = 0;  // max over safe states
  std::size_t safe_states = 0;
  int n_max = 0;
};

/// Requires A1, A2 to commute on their exact block and n_max >= 2 (b1 + b2).
/// Throws ConsistencyError if the commutator is not scalar on the safe sector
/// or the scalar differs from i s(A1, A2).
SchwingerCommutator schwinger_commutator(const OneParticleOperator& a1, const OneParticleOperator& a2,
                                         const Tolerances& tol = default_tolerances());

/// lambda^{charge}, diagonal.
FockOperator gauge_implementer(cplx lambda, const BasisPtr& basis, double tol = 1e-12);

/// Phi(V1) on the full basis; defined on states whose top mode is empty.
FockOperator shift_implementer(int n_max);

struct CovarianceReport {
  int q = 0;              // exponent recovered from the 16 roots of unity
  int index_q = 0;        // charge_index(U).q
  double residual = 0.0;  // max_lambda ||Phi(l) X Phi(l)^-1 - l^q X||_max
};

/// Recovers q from Phi(lambda) X Phi(lambda)^-1 = lambda^q X and asserts it
/// equals the charge index of u.
CovarianceReport gauge_covariance(const OperatorFamily& u, const ModeWindow& w, const FockOperator& phi,
                                  const Tolerances& tol = default_tolerances());
/// Exponent only; throws ConsistencyError if no single exponent fits.
int covariance_exponent(const FockOperator& phi, double* residual = nullptr, double tol = 1e-10);

/// exp(i dG(A)) on the charge-0 sector.
FockOperator weyl_exponential(const OneParticleOperator& a, std::size_t cap = kDefaultSectorCap);
/// exp(M) for a square sparse matrix; scaling and squaring.
SparseMatrix sparse_expm(const SparseMatrix& m, std::size_t dense_limit = 8192);

/// <Omega| exp(i dG(A)) |Omega> via the action on the vacuum only.
cplx vacuum_expectation(const OneParticleOperator& a, std::size_t cap = kDefaultSectorCap);

struct WeylPhase {
  cplx phase;        // <Omega|W(A)W(B)|Omega> / <Omega|W(A+B)|Omega>
  double s = 0.0;    // s(A, B)
  int sign = 0;      // +1 if arg(phase) = s/2, -1 if -s/2
  double error = 0.0;         // |phase - exp(sign i s / 2)|
  double state_defect = 0.0;  // || W(A)W(B) Omega - phase W(A+B) Omega ||, includes edge leakage
};

WeylPhase weyl_phase(const OneParticleOperator& a, const OneParticleOperator& b,
                     std::size_t cap = kDefaultSectorCap);

struct PositivityReport {
  int n_max = 0;
  double min_eigenvalue = 0.0;
  double second_eigenvalue = 0.0;         // lowest eigenvalue above 0
  std::size_t zero_multiplicity = 0;      // full space
  std::vector<FockState> zero_states;
  std::size_t charge0_zero_multiplicity = 0;
  bool vacuum_unique_in_charge0 = false;
  double diagonal_defect = 0.0;  // || dG(diag(n)) - diag(energy) ||_max
};

/// Generator of the implemented rotation, dG(diag(n)), on the full space.
PositivityReport spectrum_positivity(int n_max, double tol = 1e-12);

struct ImplementerSolution {
  int q = 0;
  Eigen::VectorXcd vacuum_image;  // Phi(U) Omega on the full basis
  FockOperator phi;               // on safe states of charge `source_charge`
  double residual = 0.0;          // sqrt of the smallest Gram eigenvalue
  int null_dim = 0;
};

/// Least-squares implementer: Phi(U) Omega is the unit vector annihilated by
/// the transported annihilators, Phi(U) on excited states follows from the
/// intertwining relation.
ImplementerSolution solve_implementer(const OperatorFamily& u, const ModeWindow& w, int source_charge = 0,
                                      const Tolerances& tol = default_tolerances());

}  // namespace carlab
