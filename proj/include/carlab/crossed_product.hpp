#pragma once

// Symbolic Z-graded crossed product: finite sums X = sum_n X_n V^n whose
// coefficients are sums of (circle function) (x) (B-word). The automorphism
// kappa = delta (x) nu acts on circles by a rigid rotation and on B-words by
// raising a formal nu-power on every letter.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "carlab/fourier.hpp"
#include "carlab/tolerances.hpp"

namespace carlab {

struct Arc {
  double start = 0.0;  // 0 <= start < end <= 2 pi
  double end = 0.0;
  bool contains(const Arc& o) const { return start <= o.start && o.end <= end; }
  bool closures_disjoint(const Arc& o) const;
};

class CircleFn {
 public:
  CircleFn() = default;
  explicit CircleFn(FourierSeries c, std::optional<Arc> support = std::nullopt)
      : c_(std::move(c)), support_(support) {}

  static CircleFn constant(cplx c) { return CircleFn(FourierSeries::constant(c)); }
  /// lambda mu^w e^{i h(mu)}, h real with the given coefficients
  static CircleFn phase(cplx lambda, int w, const FourierSeries& h, double tail_tol = 1e-14);

  const FourierSeries& coeffs() const noexcept { return c_; }
  const std::optional<Arc>& support() const noexcept { return support_; }
  cplx operator()(double alpha) const { return c_(alpha); }

  CircleFn operator*(const CircleFn& o) const { return CircleFn(c_ * o.c_); }
  CircleFn operator+(const CircleFn& o) const { return CircleFn(c_ + o.c_); }
  CircleFn conjugate() const { return CircleFn(c_.conjugate()); }
  CircleFn rotated(double theta) const { return CircleFn(c_.rotated(theta)); }
  double max_abs_diff(const CircleFn& o) const { return c_.max_abs_diff(o.c_); }
  double unimodularity_defect(int grid = 1024) const;
  bool is_unimodular(double tol = 1e-10) const { return unimodularity_defect() <= tol; }

 private:
  FourierSeries c_;
  std::optional<Arc> support_;
};

/// nu^{nu_power}(b_generator)
struct Letter {
  int generator = 0;
  int nu_power = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using BWord = std::vector<Letter>;

struct Term {
  CircleFn circle;
  BWord word;
};

class GradedElement {
 public:
  explicit GradedElement(double theta0 = 0.0) : theta0_(theta0) {}

  static GradedElement unit(double theta0) { return monomial(theta0, 0, CircleFn::constant(1.0)); }
  /// f (x) w V^n
  static GradedElement monomial(double theta0, int degree, CircleFn f, BWord w = {});

  double theta0() const noexcept { return theta0_; }
  const std::map<int, std::vector<Term>>& components() const noexcept { return parts_; }
  std::vector<int> degrees() const;
  GradedElement degree_part(int n) const;

  void add(int degree, Term t);
  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement operator*(cplx s) const;

  /// max coefficient difference after matching B-words
  double distance(const GradedElement& o) const;

 private:
  double theta0_;
  std::map<int, std::vector<Term>> parts_;
};

/// kappa^j on a coefficient: rotate by j theta0, raise nu-powers by j.
Term kappa(const Term& t, double theta0, int j = 1);

/// beta_f: degree n >= 1 times prod_{j=1..n} f o sigma^j, n <= -1 times
/// prod_{j=0..|n|-1} conj(f o sigma^{-j}).
GradedElement stabilizer_action(const CircleFn& f, const GradedElement& x, double tol = 1e-10);
/// The multiplier applied to degree n.
CircleFn stabilizer_cocycle(const CircleFn& f, int n, double theta0);

/// alpha_zeta: degree n times zeta^n.
GradedElement gauge_action(cplx zeta, const GradedElement& x);

struct StabilizerReport {
  double fixes_degree0 = 0.0;
  double commutes_with_gauge = 0.0;
  double multiplicative = 0.0;
  double implements_kappa = 0.0;
  bool pass(double tol) const {
    return fixes_degree0 <= tol && commutes_with_gauge <= tol && multiplicative <= tol && implements_kappa <= tol;
  }
};

StabilizerReport check_stabilizer_properties(const CircleFn& f, const GradedElement& x, cplx zeta);

/// max distance between beta_f(beta_g(x)) and beta_{fg}(x)
double homomorphism_defect(const CircleFn& f, const CircleFn& g, const GradedElement& x);

/// Generator sampled pointwise, supported on an arc.
struct LocalGenerator {
  Arc support;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// Smooth zero-mean bump on the arc: phi(t) sin(2 pi t) with
/// phi(t) = exp(4 - 1 / (t (1 - t))), t the arc coordinate.
LocalGenerator bump_generator(const Arc& support, double amplitude = 1.0);

/// (1/2 pi) int A B' by the rectangle rule on `grid` points.
double local_schwinger_form(const LocalGenerator& a, const LocalGenerator& b, int grid = 4096);

struct LocalityReport {
  bool disjoint = false;
  bool contained = false;  // support(a) inside support(b)
  double s = 0.0;
  cplx commutation_phase = 1.0;
  bool commute = false;
  bool holds = false;  // disjoint closures imply s = 0
};

LocalityReport net_locality(const LocalGenerator& a, const LocalGenerator& b, double tol = 1e-10);

}  // namespace carlab
