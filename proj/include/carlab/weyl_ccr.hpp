#pragma once

// Symbolic Weyl algebra over zero-mean real trig polynomials with the
// symplectic form s from mode_space. Only exponents and phases are tracked.

#include <vector>

#include "carlab/mode_space.hpp"

namespace carlab {

/// W(A) W(B) = exp(kWeylPhaseSign * i s(A, B) / 2) W(A + B).
/// The sign matches the Fock-space exponentials.
inline constexpr int kWeylPhaseSign = +1;

/// Member of the generator space: real, zero mean.
class Generator {
 public:
  Generator() = default;
  explicit Generator(TrigPolynomial a, double tol = 1e-12);

  const TrigPolynomial& poly() const noexcept { return a_; }
  int bandwidth() const { return a_.bandwidth(); }
  Generator operator+(const Generator& o) const { return Generator(a_ + o.a_); }
  Generator operator*(double c) const { return Generator(a_ * c); }

 private:
  TrigPolynomial a_;
};

/// phase * W(exponent)
struct WeylElement {
  Generator exponent;
  cplx phase = 1.0;
};

WeylElement weyl_product(const WeylElement& x, const WeylElement& y);

struct WeylWord {
  std::vector<Generator> letters;
  cplx phase = 1.0;
};

/// Left-to-right reduction to phase * W(sum A_i).
WeylElement reduce(const WeylWord& word);
/// Right-to-left reduction; equal to reduce() up to rounding.
WeylElement reduce_right(const WeylWord& word);
/// Reduction following a random binary parenthesization.
WeylElement reduce_bracketed(const WeylWord& word, unsigned seed);

/// Phase c with W(A) W(B) = c W(B) W(A).
cplx commutation_phase(const Generator& a, const Generator& b);

/// exp(-<A, A> / 4)
double generating_functional(const Generator& a);
/// <A, A> = sum_{m >= 1} m |A_m|^2, from coefficients.
double norm_sum(const Generator& a);

struct KappaMeasurement {
  std::vector<double> amplitudes;
  std::vector<double> vev;    // Re <Omega| exp(i c dG(A)) |Omega>
  std::vector<double> kappa;  // -log(vev) / (c^2 <A, A>)
  double pairing = 0.0;
  double spread = 0.0;  // max - min of kappa
  int n_max = 0;
};

/// Measures kappa in <W(cA)> = exp(-kappa c^2 <A, A>) in the Fock representation.
KappaMeasurement measure_kappa(const Generator& a, const std::vector<double>& amplitudes, int n_max);

struct RequirementsReport {
  bool hs_convergent = false;      // (1)
  bool commuting = false;          // (2)
  bool positive_definite = false;  // (3)
  bool shift_stable = false;       // (4)
  std::vector<HsReport> hs;
  double commutator_defect = 0.0;
  double gram_min_eigenvalue = 0.0;
  double conjugation_defect = 0.0;
  int q_v1 = 0;
  bool all() const { return hs_convergent && commuting && positive_definite && shift_stable; }
};

/// The four requirements for the generator space span(gens) and the shift loop v1.
/// Generators are taken as plain trig polynomials so that failures (such as a
/// constant) can be reported rather than rejected.
RequirementsReport requirements_checklist(const std::vector<TrigPolynomial>& gens, const LoopFunction& v1,
                                          const Tolerances& tol = default_tolerances());

}  // namespace carlab
