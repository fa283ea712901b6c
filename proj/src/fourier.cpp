#include "carlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carlab {

FourierSeries::FourierSeries(int extent) : extent_(extent), c_(2 * extent + 1, 0.0) {
  if (extent < 0) throw std::invalid_argument("FourierSeries: negative extent");
}

FourierSeries FourierSeries::constant(cplx c) {
  FourierSeries f(0);
  f.c_[0] = c;
  return f;
}

FourierSeries FourierSeries::monomial(int k, cplx c) {
  FourierSeries f(std::abs(k));
  f.set(k, c);
  return f;
}

FourierSeries FourierSeries::from_pairs(std::span<const std::pair<int, cplx>> pairs) {
  int extent = 0;
  for (const auto& [k, v] : pairs) extent = std::max(extent, std::abs(k));
  FourierSeries f(extent);
  for (const auto& [k, v] : pairs) f.set(k, f[k] + v);
  return f;
}

int FourierSeries::bandwidth(double tol) const {
  for (int k = extent_; k > 0; --k) {
    if (std::abs(c_[extent_ + k]) > tol || std::abs(c_[extent_ - k]) > tol) return k;
  }
  return 0;
}

cplx FourierSeries::operator[](int k) const noexcept {
  if (k < -extent_ || k > extent_) return 0.0;
  return c_[extent_ + k];
}

void FourierSeries::set(int k, cplx value) {
  if (std::abs(k) > extent_) {
    FourierSeries grown(std::abs(k));
    for (int j = -extent_; j <= extent_; ++j) grown.c_[grown.extent_ + j] = c_[extent_ + j];
    *this = std::move(grown);
  }
  c_[extent_ + k] = value;
}

cplx FourierSeries::operator()(double alpha) const {
  cplx sum = 0.0;
  for (int k = -extent_; k <= extent_; ++k) {
    const cplx ck = c_[extent_ + k];
    if (ck != 0.0) sum += ck * std::polar(1.0, k * alpha);
  }
  return sum;
}

FourierSeries FourierSeries::operator+(const FourierSeries& o) const {
  FourierSeries r(std::max(extent_, o.extent_));
  for (int k = -r.extent_; k <= r.extent_; ++k) r.c_[r.extent_ + k] = (*this)[k] + o[k];
  return r;
}

FourierSeries FourierSeries::operator-(const FourierSeries& o) const { return *this + (-o); }

FourierSeries FourierSeries::operator*(const FourierSeries& o) const {
  FourierSeries r(extent_ + o.extent_);
  for (int j = -extent_; j <= extent_; ++j) {
    const cplx a = c_[extent_ + j];
    if (a == 0.0) continue;
    for (int k = -o.extent_; k <= o.extent_; ++k) {
      const cplx b = o.c_[o.extent_ + k];
      if (b != 0.0) r.c_[r.extent_ + j + k] += a * b;
    }
  }
  return r;
}

FourierSeries FourierSeries::operator*(cplx s) const {
  FourierSeries r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

FourierSeries FourierSeries::conjugate() const {
  FourierSeries r(extent_);
  for (int k = -extent_; k <= extent_; ++k) r.c_[extent_ + k] = std::conj(c_[extent_ - k]);
  return r;
}

FourierSeries FourierSeries::derivative() const {
  FourierSeries r(extent_);
  for (int k = -extent_; k <= extent_; ++k) r.c_[extent_ + k] = cplx(0.0, k) * c_[extent_ + k];
  return r;
}

FourierSeries FourierSeries::rotated(double theta) const {
  FourierSeries r(extent_);
  for (int k = -extent_; k <= extent_; ++k) {
    r.c_[extent_ + k] = c_[extent_ + k] * std::polar(1.0, k * theta);
  }
  return r;
}

FourierSeries FourierSeries::trimmed(double tol) const {
  const int b = bandwidth(tol);
  FourierSeries r(b);
  for (int k = -b; k <= b; ++k) r.c_[b + k] = (*this)[k];
  return r;
}

bool FourierSeries::is_real(double tol) const {
  for (int k = 0; k <= extent_; ++k) {
    if (std::abs((*this)[-k] - std::conj((*this)[k])) > tol) return false;
  }
  return true;
}

double FourierSeries::max_abs_diff(const FourierSeries& o) const {
  const int e = std::max(extent_, o.extent_);
  double d = 0.0;
  for (int k = -e; k <= e; ++k) d = std::max(d, std::abs((*this)[k] - o[k]));
  return d;
}

double FourierSeries::l1_norm() const {
  double s = 0.0;
  for (const auto& v : c_) s += std::abs(v);
  return s;
}

FourierSeries exp_i(const FourierSeries& h, double tail_tol) {
  // Scale so the power series converges quickly, then square back.
  int squarings = 0;
  double norm = h.l1_norm();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const FourierSeries ih = h * cplx(0.0, std::ldexp(1.0, -squarings));
  const double inner_tol = tail_tol * 1e-3;

  FourierSeries sum = FourierSeries::constant(1.0);
  FourierSeries term = FourierSeries::constant(1.0);
  for (int j = 1; j < 200; ++j) {
    term = (term * ih * cplx(1.0 / j)).trimmed(inner_tol * 1e-3);
    sum = sum + term;
    if (term.l1_norm() < inner_tol) break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).trimmed(inner_tol * 1e-3);
  return sum.trimmed(tail_tol);
}

std::vector<double> circle_grid(int n) {
  std::vector<double> g(n);
  for (int j = 0; j < n; ++j) g[j] = kTwoPi * j / n;
  return g;
}

}  // namespace carlab
