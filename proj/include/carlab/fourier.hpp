#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace carlab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Finite Fourier series sum_k c_k e^{i k alpha} with coefficients stored on
/// the symmetric range [-extent, extent]. Values outside the range are zero.
class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(int extent);

  static FourierSeries constant(cplx c);
  static FourierSeries monomial(int k, cplx c = 1.0);
  static FourierSeries from_pairs(std::span<const std::pair<int, cplx>> pairs);

  int extent() const noexcept { return extent_; }
  // Largest |k| with |c_k| > tol, or 0 for the zero series.
  int bandwidth(double tol = 0.0) const;

  cplx operator[](int k) const noexcept;
  void set(int k, cplx value);

  // Pointwise value at angle alpha.
  cplx operator()(double alpha) const;

  FourierSeries operator+(const FourierSeries& o) const;
  FourierSeries operator-(const FourierSeries& o) const;
  // Pointwise product (coefficient convolution).
  FourierSeries operator*(const FourierSeries& o) const;
  FourierSeries operator*(cplx s) const;
  FourierSeries operator-() const { return *this * cplx(-1.0); }

  // Coefficients of the pointwise complex conjugate: c'_k = conj(c_{-k}).
  FourierSeries conjugate() const;
  // Derivative d/dalpha: c'_k = i k c_k.
  FourierSeries derivative() const;
  // Precomposition with a rigid rotation: alpha -> alpha + theta.
  FourierSeries rotated(double theta) const;
  // Drops outer coefficients with |c_k| <= tol.
  FourierSeries trimmed(double tol) const;

  bool is_real(double tol) const;
  double max_abs_diff(const FourierSeries& o) const;
  double l1_norm() const;

 private:
  int extent_ = 0;
  std::vector<cplx> c_ = {0.0};
};

/// e^{i h} for a (real) Fourier series h, summed as a power series until the
/// l1 norm of the next term drops below tail_tol; outer coefficients at or
/// below tail_tol are trimmed.
FourierSeries exp_i(const FourierSeries& h, double tail_tol = 1e-14);

/// Uniform grid alpha_j = 2 pi j / n on [0, 2 pi).
std::vector<double> circle_grid(int n);

}  // namespace carlab
