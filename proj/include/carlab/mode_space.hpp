#pragma once

// One-particle layer: a symmetric window of Fourier modes of L^2(S^1),
// loop multiplication operators, projections and the symplectic pairing.

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "carlab/fourier.hpp"
#include "carlab/tolerances.hpp"

namespace carlab {

/// Modes n in [-n_max, n_max], stored at index n + n_max.
class ModeWindow {
 public:
  explicit ModeWindow(int n_max);
  int n_max() const noexcept { return n_max_; }
  int dim() const noexcept { return 2 * n_max_ + 1; }
  int index(int mode) const;
  int mode(int index) const noexcept { return index - n_max_; }
  bool contains(int mode) const noexcept { return mode >= -n_max_ && mode <= n_max_; }
  ModeWindow enlarged(int by) const { return ModeWindow(n_max_ + by); }
  friend bool operator==(const ModeWindow&, const ModeWindow&) = default;

 private:
  int n_max_;
};

/// Real-valued trigonometric polynomial; enforces c_{-k} = conj(c_k).
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(FourierSeries coeffs, double tol = 1e-12);

  static TrigPolynomial cosine(int k, double amplitude);
  static TrigPolynomial sine(int k, double amplitude);
  static TrigPolynomial constant(double c);

  const FourierSeries& coeffs() const noexcept { return c_; }
  int bandwidth() const { return c_.bandwidth(); }
  bool zero_mean(double tol = 1e-12) const { return std::abs(c_[0]) <= tol; }
  double operator()(double alpha) const { return c_(alpha).real(); }
  double derivative(double alpha) const { return c_.derivative()(alpha).real(); }

  TrigPolynomial operator+(const TrigPolynomial& o) const { return TrigPolynomial(c_ + o.c_); }
  TrigPolynomial operator-(const TrigPolynomial& o) const { return TrigPolynomial(c_ - o.c_); }
  TrigPolynomial operator*(double s) const { return TrigPolynomial(c_ * cplx(s)); }
  TrigPolynomial operator-() const { return *this * -1.0; }

 private:
  FourierSeries c_;
};

/// Loop f(e^{i alpha}) = e^{i w alpha} e^{i h(alpha)} with integer winding w
/// and real phase function h.
class LoopFunction {
 public:
  LoopFunction() : LoopFunction(0, TrigPolynomial{}) {}
  LoopFunction(int winding, TrigPolynomial phase, double tail_tol = 1e-14);

  static LoopFunction power(int w) { return LoopFunction(w, TrigPolynomial{}); }

  int winding() const noexcept { return winding_; }
  const TrigPolynomial& phase() const noexcept { return phase_; }
  // Fourier coefficients of the full loop, truncated at the tail tolerance.
  const FourierSeries& fourier() const noexcept { return fourier_; }
  int bandwidth() const { return fourier_.bandwidth(); }
  cplx operator()(double alpha) const;

  LoopFunction operator*(const LoopFunction& o) const;
  LoopFunction inverse() const;

  // max_j ||f(alpha_j)| - 1| on an n-point grid
  double unimodularity_defect(int grid = 1024) const;

 private:
  int winding_;
  TrigPolynomial phase_;
  FourierSeries fourier_;
};

/// Window block of a bounded operator on L^2(S^1). Entries (m, n) with
/// |m|, |n| <= exact_radius are the exact matrix elements of the infinite
/// operator; entries outside that block may carry truncation error.
class OneParticleOperator {
 public:
  OneParticleOperator(ModeWindow window, Eigen::MatrixXcd matrix, int exact_radius);

  const ModeWindow& window() const noexcept { return window_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  int bandwidth() const noexcept { return bandwidth_; }
  int exact_radius() const noexcept { return exact_radius_; }
  // Columns |n| <= complete_radius() have their full support inside the exact block.
  int complete_radius() const noexcept { return exact_radius_ - bandwidth_; }
  cplx entry(int row_mode, int col_mode) const;

  OneParticleOperator adjoint() const;
  OneParticleOperator operator*(const OneParticleOperator& o) const;
  OneParticleOperator operator+(const OneParticleOperator& o) const;
  OneParticleOperator operator-(const OneParticleOperator& o) const;
  OneParticleOperator operator*(cplx s) const;

  bool is_hermitian(double tol) const;
  // U U* = 1 and U* U = 1 on the rows/columns that are complete.
  bool is_unitary_on_interior(double tol) const;
  // Symbol of a Toeplitz matrix (constant diagonals), if it is one.
  std::optional<FourierSeries> toeplitz_symbol(double tol) const;

 private:
  ModeWindow window_;
  Eigen::MatrixXcd m_;
  int bandwidth_;
  int exact_radius_;
};

/// Rebuilds an operator on any requested window; used for convergence checks.
using OperatorFamily = std::function<OneParticleOperator(const ModeWindow&)>;

OneParticleOperator toeplitz_operator(const FourierSeries& symbol, const ModeWindow& w);
OneParticleOperator identity_operator(const ModeWindow& w);
OneParticleOperator scalar_operator(cplx lambda, const ModeWindow& w);
OneParticleOperator diagonal_operator(const std::function<cplx(int)>& value, const ModeWindow& w);
// Mode-number operator diag(n), generator of the regular representation.
OneParticleOperator mode_number_operator(const ModeWindow& w);
OneParticleOperator shift_operator(const ModeWindow& w);

/// U_f as a windowed Toeplitz matrix, entry (m, n) = f_{m-n}.
/// Throws InsufficientWindow when n_max < bandwidth(f).
OneParticleOperator multiplication_operator(const LoopFunction& f, const ModeWindow& w);
/// Multiplication by a real trig polynomial (a selfadjoint generator).
OneParticleOperator multiplication_operator(const TrigPolynomial& a, const ModeWindow& w);

/// U_zeta = sum_n zeta^n E_n. Requires |zeta| = 1.
OneParticleOperator regular_rep(cplx zeta, const ModeWindow& w, double tol = 1e-12);

OneParticleOperator nonnegative_projection(const ModeWindow& w);  // P = P_{>=0}
OneParticleOperator negative_projection(const ModeWindow& w);     // P^perp = P_{<0}
OneParticleOperator mode_projection(int n, const ModeWindow& w);  // E_n

/// gamma: (gamma x)_n = conj(x_{-n}).
Eigen::VectorXcd conjugate_vector(const Eigen::VectorXcd& x);
/// gamma A gamma, entry (m, n) = conj(A(-m, -n)).
OneParticleOperator conjugated(const OneParticleOperator& a);
bool commutes_with_conjugation(const OneParticleOperator& a, double tol);
bool is_projection(const OneParticleOperator& p, double tol);

/// tr(P A P^perp B P) over the window; for Toeplitz inputs also checks the
/// Fourier value sum_{k>=1} k A_k B_{-k}. Requires n_max >= 2 max bandwidth
/// and gamma A gamma = A, gamma B gamma = B.
cplx pairing(const OneParticleOperator& a, const OneParticleOperator& b,
             const Tolerances& tol = default_tolerances());
cplx pairing(const TrigPolynomial& a, const TrigPolynomial& b,
             const Tolerances& tol = default_tolerances());
/// sum_{k>=1} k a_k b_{-k}, straight from coefficients.
cplx pairing_fourier(const FourierSeries& a, const FourierSeries& b);

struct SchwingerRoutes {
  double trace;       // 2 Im tr(P A P^perp B P)
  double quadrature;  // (1/2pi) int A B' on a 512-point grid
  double fourier;     // 2 Im sum_{k>=1} k A_k B_{-k}
};

SchwingerRoutes schwinger_routes(const OneParticleOperator& a, const OneParticleOperator& b,
                                 const Tolerances& tol = default_tolerances());
/// s(A, B) = 2 Im tr(P A P^perp B P) after asserting the three routes agree.
double schwinger_form(const OneParticleOperator& a, const OneParticleOperator& b,
                      const Tolerances& tol = default_tolerances());
double schwinger_form(const TrigPolynomial& a, const TrigPolynomial& b,
                      const Tolerances& tol = default_tolerances());

/// Smallest window on which pairing/schwinger_form are margin-safe.
ModeWindow pairing_window(int bandwidth_a, int bandwidth_b);

/// Stored winding, cross-checked by an argument lift on 1024 samples.
int winding_number(const LoopFunction& f);
/// Argument-lift winding of a sampled loop; throws if some |f| < 0.5.
int winding_by_argument_lift(const std::function<cplx(double)>& f, int grid = 1024);

struct HsReport {
  double upper = 0.0;   // ||P U P^perp||_2
  double lower = 0.0;   // ||P^perp U P||_2
  bool converged = false;
  int n_max = 0;
};

/// Hilbert-Schmidt norms of the off-diagonal compressions, one window.
HsReport offdiag_hs(const OneParticleOperator& u, const OneParticleOperator& p,
                    double tol = 1e-12);
/// Same, with the convergence flag obtained by recomputing at n_max + 4.
HsReport hs_offdiag_norms(const OperatorFamily& u, const ModeWindow& w,
                          const Tolerances& tol = default_tolerances());

OperatorFamily loop_family(const LoopFunction& f);
OperatorFamily generator_family(const TrigPolynomial& a);

}  // namespace carlab
