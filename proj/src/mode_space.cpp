#include "carlab/mode_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "carlab/errors.hpp"

namespace carlab {

namespace {

int measured_bandwidth(const Eigen::MatrixXcd& m) {
  int b = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != cplx(0.0)) b = std::max<int>(b, static_cast<int>(std::abs(r - c)));
    }
  }
  return b;
}

// max |A(m,n) - B(m,n)| over |m|, |n| <= radius
double block_diff(const OneParticleOperator& a, const OneParticleOperator& b, int radius) {
  const ModeWindow& w = a.window();
  double d = 0.0;
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      d = std::max(d, std::abs(a.matrix()(w.index(m), w.index(n)) -
                               b.matrix()(w.index(m), w.index(n))));
    }
  }
  return d;
}

void require_same_window(const OneParticleOperator& a, const OneParticleOperator& b) {
  if (!(a.window() == b.window())) throw PreconditionError("operators live on different windows");
}

}  // namespace

// ---------------------------------------------------------------- ModeWindow

ModeWindow::ModeWindow(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw PreconditionError("ModeWindow: n_max must be >= 1");
}

int ModeWindow::index(int mode) const {
  if (!contains(mode)) {
    throw PreconditionError("mode " + std::to_string(mode) + " outside window [-" +
                            std::to_string(n_max_) + ", " + std::to_string(n_max_) + "]");
  }
  return mode + n_max_;
}

// ------------------------------------------------------------ TrigPolynomial

TrigPolynomial::TrigPolynomial(FourierSeries coeffs, double tol) : c_(std::move(coeffs)) {
  if (!c_.is_real(tol)) throw PreconditionError("TrigPolynomial: coefficients violate c_{-k} = conj(c_k)");
  // Symmetrize away rounding so the stored function is exactly real.
  FourierSeries sym(c_.extent());
  for (int k = -c_.extent(); k <= c_.extent(); ++k) sym.set(k, 0.5 * (c_[k] + std::conj(c_[-k])));
  c_ = std::move(sym);
}

TrigPolynomial TrigPolynomial::cosine(int k, double amplitude) {
  FourierSeries c(std::abs(k));
  c.set(k, 0.5 * amplitude);
  c.set(-k, c[-k] + 0.5 * amplitude);
  return TrigPolynomial(c);
}

TrigPolynomial TrigPolynomial::sine(int k, double amplitude) {
  FourierSeries c(std::abs(k));
  c.set(k, cplx(0.0, -0.5 * amplitude));
  c.set(-k, c[-k] + cplx(0.0, 0.5 * amplitude));
  return TrigPolynomial(c);
}

TrigPolynomial TrigPolynomial::constant(double v) { return TrigPolynomial(FourierSeries::constant(v)); }

// -------------------------------------------------------------- LoopFunction

LoopFunction::LoopFunction(int winding, TrigPolynomial phase, double tail_tol)
    : winding_(winding), phase_(std::move(phase)) {
  const FourierSeries e = exp_i(phase_.coeffs(), tail_tol);
  FourierSeries shifted(e.extent() + std::abs(winding_));
  for (int k = -e.extent(); k <= e.extent(); ++k) shifted.set(k + winding_, e[k]);
  fourier_ = shifted.trimmed(0.0);
}

cplx LoopFunction::operator()(double alpha) const {
  return std::polar(1.0, winding_ * alpha + phase_(alpha));
}

LoopFunction LoopFunction::operator*(const LoopFunction& o) const {
  return LoopFunction(winding_ + o.winding_, phase_ + o.phase_);
}

LoopFunction LoopFunction::inverse() const { return LoopFunction(-winding_, -phase_); }

double LoopFunction::unimodularity_defect(int grid) const {
  double d = 0.0;
  for (double a : circle_grid(grid)) d = std::max(d, std::abs(std::abs(fourier_(a)) - 1.0));
  return d;
}

// ------------------------------------------------------- OneParticleOperator

OneParticleOperator::OneParticleOperator(ModeWindow window, Eigen::MatrixXcd matrix, int exact_radius)
    : window_(window), m_(std::move(matrix)), exact_radius_(std::min(exact_radius, window.n_max())) {
  if (m_.rows() != window_.dim() || m_.cols() != window_.dim()) {
    throw PreconditionError("OneParticleOperator: matrix size does not match window");
  }
  bandwidth_ = measured_bandwidth(m_);
}

cplx OneParticleOperator::entry(int row_mode, int col_mode) const {
  return m_(window_.index(row_mode), window_.index(col_mode));
}

OneParticleOperator OneParticleOperator::adjoint() const {
  return OneParticleOperator(window_, m_.adjoint(), exact_radius_);
}

OneParticleOperator OneParticleOperator::operator*(const OneParticleOperator& o) const {
  require_same_window(*this, o);
  const int radius = std::min(exact_radius_, o.exact_radius_) - std::min(bandwidth_, o.bandwidth_);
  return OneParticleOperator(window_, m_ * o.m_, radius);
}

OneParticleOperator OneParticleOperator::operator+(const OneParticleOperator& o) const {
  require_same_window(*this, o);
  return OneParticleOperator(window_, m_ + o.m_, std::min(exact_radius_, o.exact_radius_));
}

OneParticleOperator OneParticleOperator::operator-(const OneParticleOperator& o) const {
  require_same_window(*this, o);
  return OneParticleOperator(window_, m_ - o.m_, std::min(exact_radius_, o.exact_radius_));
}

OneParticleOperator OneParticleOperator::operator*(cplx s) const {
  return OneParticleOperator(window_, m_ * s, exact_radius_);
}

bool OneParticleOperator::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool OneParticleOperator::is_unitary_on_interior(double tol) const {
  const int r = complete_radius();
  if (r < 0) return false;
  const Eigen::MatrixXcd uu = m_ * m_.adjoint();
  const Eigen::MatrixXcd uu2 = m_.adjoint() * m_;
  for (int a = -r; a <= r; ++a) {
    for (int b = -r; b <= r; ++b) {
      const cplx delta = (a == b) ? 1.0 : 0.0;
      if (std::abs(uu(window_.index(a), window_.index(b)) - delta) > tol) return false;
      if (std::abs(uu2(window_.index(a), window_.index(b)) - delta) > tol) return false;
    }
  }
  return true;
}

std::optional<FourierSeries> OneParticleOperator::toeplitz_symbol(double tol) const {
  const int r = exact_radius_;
  if (r < bandwidth_) return std::nullopt;
  FourierSeries symbol(bandwidth_);
  for (int d = -bandwidth_; d <= bandwidth_; ++d) {
    // diagonal m - n = d inside the exact block
    const int n0 = std::max(-r, -r - d);
    symbol.set(d, entry(n0 + d, n0));
  }
  for (int m = -r; m <= r; ++m) {
    for (int n = -r; n <= r; ++n) {
      if (std::abs(entry(m, n) - symbol[m - n]) > tol) return std::nullopt;
    }
  }
  return symbol;
}

// ------------------------------------------------------------------ builders

OneParticleOperator toeplitz_operator(const FourierSeries& symbol, const ModeWindow& w) {
  const int b = symbol.bandwidth();
  if (b > w.n_max()) throw InsufficientWindow(b, "symbol bandwidth exceeds window");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
  for (int r = -w.n_max(); r <= w.n_max(); ++r) {
    for (int d = -b; d <= b; ++d) {
      const int c = r - d;
      if (w.contains(c)) m(w.index(r), w.index(c)) = symbol[d];
    }
  }
  return OneParticleOperator(w, std::move(m), w.n_max());
}

OneParticleOperator identity_operator(const ModeWindow& w) {
  return OneParticleOperator(w, Eigen::MatrixXcd::Identity(w.dim(), w.dim()), w.n_max());
}

OneParticleOperator scalar_operator(cplx lambda, const ModeWindow& w) {
  return identity_operator(w) * lambda;
}

OneParticleOperator diagonal_operator(const std::function<cplx(int)>& value, const ModeWindow& w) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
  for (int n = -w.n_max(); n <= w.n_max(); ++n) m(w.index(n), w.index(n)) = value(n);
  return OneParticleOperator(w, std::move(m), w.n_max());
}

OneParticleOperator mode_number_operator(const ModeWindow& w) {
  return diagonal_operator([](int n) { return cplx(n); }, w);
}

OneParticleOperator shift_operator(const ModeWindow& w) {
  return toeplitz_operator(FourierSeries::monomial(1), w);
}

OneParticleOperator multiplication_operator(const LoopFunction& f, const ModeWindow& w) {
  const int b = f.bandwidth();
  if (b > w.n_max()) throw InsufficientWindow(b, "loop bandwidth at 1e-14 coefficient accuracy");
  return toeplitz_operator(f.fourier(), w);
}

OneParticleOperator multiplication_operator(const TrigPolynomial& a, const ModeWindow& w) {
  return toeplitz_operator(a.coeffs(), w);
}

OneParticleOperator regular_rep(cplx zeta, const ModeWindow& w, double tol) {
  if (std::abs(std::abs(zeta) - 1.0) > tol) throw PreconditionError("regular_rep: |zeta| != 1");
  return diagonal_operator([zeta](int n) { return std::pow(zeta, n); }, w);
}

OneParticleOperator nonnegative_projection(const ModeWindow& w) {
  return diagonal_operator([](int n) { return n >= 0 ? cplx(1.0) : cplx(0.0); }, w);
}

OneParticleOperator negative_projection(const ModeWindow& w) {
  return diagonal_operator([](int n) { return n < 0 ? cplx(1.0) : cplx(0.0); }, w);
}

OneParticleOperator mode_projection(int k, const ModeWindow& w) {
  return diagonal_operator([k](int n) { return n == k ? cplx(1.0) : cplx(0.0); }, w);
}

// -------------------------------------------------------------- conjugation

Eigen::VectorXcd conjugate_vector(const Eigen::VectorXcd& x) {
  const Eigen::Index d = x.size();
  Eigen::VectorXcd y(d);
  for (Eigen::Index i = 0; i < d; ++i) y(i) = std::conj(x(d - 1 - i));
  return y;
}

OneParticleOperator conjugated(const OneParticleOperator& a) {
  const Eigen::Index d = a.window().dim();
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = std::conj(a.matrix()(d - 1 - r, d - 1 - c));
  }
  return OneParticleOperator(a.window(), std::move(m), a.exact_radius());
}

bool commutes_with_conjugation(const OneParticleOperator& a, double tol) {
  const int r = std::max(a.exact_radius(), 0);
  return block_diff(a, conjugated(a), r) <= tol;
}

bool is_projection(const OneParticleOperator& p, double tol) {
  const Eigen::MatrixXcd& m = p.matrix();
  return (m * m - m).cwiseAbs().maxCoeff() <= tol && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// ------------------------------------------------------------------ pairing

ModeWindow pairing_window(int bandwidth_a, int bandwidth_b) {
  return ModeWindow(std::max(2 * std::max(bandwidth_a, bandwidth_b), 1));
}

namespace {

void check_pairing_inputs(const OneParticleOperator& a, const OneParticleOperator& b, double tol) {
  require_same_window(a, b);
  const int need = 2 * std::max(a.bandwidth(), b.bandwidth());
  const int radius = std::min(a.exact_radius(), b.exact_radius());
  if (radius < need) {
    throw InsufficientWindow(need + (a.window().n_max() - radius), "pairing needs n_max >= 2 * bandwidth");
  }
  if (!commutes_with_conjugation(a, tol) || !commutes_with_conjugation(b, tol)) {
    throw PreconditionError("pairing: generators must satisfy gamma A gamma = A");
  }
}

cplx windowed_trace(const OneParticleOperator& a, const OneParticleOperator& b) {
  // tr(P A P^perp B P) = tr(A_{+-} B_{-+})
  const int n = a.window().n_max();
  const Eigen::MatrixXcd a_pm = a.matrix().block(n, 0, n + 1, n);
  const Eigen::MatrixXcd b_mp = b.matrix().block(0, n, n, n + 1);
  return (a_pm * b_mp).trace();
}

}  // namespace

cplx pairing_fourier(const FourierSeries& a, const FourierSeries& b) {
  cplx sum = 0.0;
  const int e = std::max(a.extent(), b.extent());
  for (int k = 1; k <= e; ++k) sum += static_cast<double>(k) * a[k] * b[-k];
  return sum;
}

cplx pairing(const OneParticleOperator& a, const OneParticleOperator& b, const Tolerances& tol) {
  check_pairing_inputs(a, b, tol.algebraic);
  const cplx tr = windowed_trace(a, b);
  const auto sa = a.toeplitz_symbol(tol.algebraic);
  const auto sb = b.toeplitz_symbol(tol.algebraic);
  if (sa && sb) {
    const cplx fourier = pairing_fourier(*sa, *sb);
    if (std::abs(fourier - tr) > tol.algebraic * std::max(1.0, std::abs(tr))) {
      throw ConsistencyError("pairing: windowed trace and Fourier sum disagree");
    }
  }
  return tr;
}

cplx pairing(const TrigPolynomial& a, const TrigPolynomial& b, const Tolerances& tol) {
  const ModeWindow w = pairing_window(a.bandwidth(), b.bandwidth());
  return pairing(multiplication_operator(a, w), multiplication_operator(b, w), tol);
}

SchwingerRoutes schwinger_routes(const OneParticleOperator& a, const OneParticleOperator& b,
                                 const Tolerances& tol) {
  SchwingerRoutes r{};
  r.trace = 2.0 * pairing(a, b, tol).imag();
  const auto sa = a.toeplitz_symbol(tol.algebraic);
  const auto sb = b.toeplitz_symbol(tol.algebraic);
  if (!sa || !sb) throw PreconditionError("schwinger_form: inputs must be multiplication operators");
  r.fourier = 2.0 * pairing_fourier(*sa, *sb).imag();

  constexpr int kGrid = 512;
  if (sa->bandwidth() + sb->bandwidth() >= kGrid / 2) {
    throw PreconditionError("schwinger_form: bandwidth too large for the quadrature grid");
  }
  const FourierSeries db = sb->derivative();
  double q = 0.0;
  for (double alpha : circle_grid(kGrid)) q += ((*sa)(alpha) * db(alpha)).real();
  r.quadrature = q / kGrid;

  const double scale = std::max(1.0, std::abs(r.trace));
  if (std::abs(r.trace - r.fourier) > tol.quadrature * scale ||
      std::abs(r.trace - r.quadrature) > tol.quadrature * scale) {
    throw ConsistencyError("schwinger_form: trace, Fourier and quadrature routes disagree");
  }
  return r;
}

double schwinger_form(const OneParticleOperator& a, const OneParticleOperator& b, const Tolerances& tol) {
  return schwinger_routes(a, b, tol).trace;
}

double schwinger_form(const TrigPolynomial& a, const TrigPolynomial& b, const Tolerances& tol) {
  const ModeWindow w = pairing_window(a.bandwidth(), b.bandwidth());
  return schwinger_form(multiplication_operator(a, w), multiplication_operator(b, w), tol);
}

// ------------------------------------------------------------------ winding

int winding_by_argument_lift(const std::function<cplx(double)>& f, int grid) {
  const std::vector<double> alphas = circle_grid(grid);
  std::vector<cplx> v;
  v.reserve(grid + 1);
  for (double a : alphas) v.push_back(f(a));
  v.push_back(v.front());
  double total = 0.0;
  for (int j = 0; j < grid; ++j) {
    if (std::abs(v[j]) < 0.5) throw PreconditionError("argument lift failed: |f| < 0.5 at a sample");
    const double step = std::arg(v[j + 1] / v[j]);
    if (std::abs(step) > kPi / 2) throw PreconditionError("argument lift failed: loop under-resolved");
    total += step;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

int winding_number(const LoopFunction& f) {
  if (f.unimodularity_defect() > 1e-10) throw PreconditionError("winding_number: loop is not unimodular");
  const int lifted = winding_by_argument_lift([&f](double a) { return f.fourier()(a); });
  if (lifted != f.winding()) {
    throw ConsistencyError("winding_number: stored winding " + std::to_string(f.winding()) +
                           " but argument lift gives " + std::to_string(lifted));
  }
  return f.winding();
}

// ----------------------------------------------------------- Hilbert-Schmidt

HsReport offdiag_hs(const OneParticleOperator& u, const OneParticleOperator& p, double tol) {
  require_same_window(u, p);
  if (!is_projection(p, tol)) throw PreconditionError("hs_offdiag_norms: P is not an orthoprojection");
  const Eigen::MatrixXcd pm = p.matrix();
  const Eigen::MatrixXcd pp = Eigen::MatrixXcd::Identity(pm.rows(), pm.cols()) - pm;
  HsReport r;
  r.upper = (pm * u.matrix() * pp).norm();
  r.lower = (pp * u.matrix() * pm).norm();
  r.n_max = u.window().n_max();
  return r;
}

HsReport hs_offdiag_norms(const OperatorFamily& u, const ModeWindow& w, const Tolerances& tol) {
  HsReport base = offdiag_hs(u(w), nonnegative_projection(w), tol.algebraic);
  const ModeWindow big = w.enlarged(4);
  const HsReport more = offdiag_hs(u(big), nonnegative_projection(big), tol.algebraic);
  base.converged = std::abs(base.upper - more.upper) < tol.convergence &&
                   std::abs(base.lower - more.lower) < tol.convergence;
  return base;
}

OperatorFamily loop_family(const LoopFunction& f) {
  return [f](const ModeWindow& w) { return multiplication_operator(f, w); };
}

OperatorFamily generator_family(const TrigPolynomial& a) {
  return [a](const ModeWindow& w) { return multiplication_operator(a, w); };
}

}  // namespace carlab
