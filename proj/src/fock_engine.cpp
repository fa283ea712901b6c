#include "carlab/fock_engine.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "carlab/errors.hpp"

namespace carlab {

namespace {

using Triplet = Eigen::Triplet<cplx, int>;

SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& t) {
  SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

bool is_full(const FockBasis& b) { return b.size() == (std::size_t{1} << b.modes()); }

void require_same(const FockBasis& a, const FockBasis& b, const char* what) {
  if (&a != &b && !a.same_states(b)) throw PreconditionError(std::string(what) + ": basis mismatch");
}

std::optional<int> detect_charge_shift(const FockBasis& src, const FockBasis& tgt, const SparseMatrix& m) {
  std::optional<int> shift;
  for (int r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      if (it.value() == cplx(0.0)) continue;
      const int d = tgt.charge(tgt.state(it.row())) - src.charge(src.state(it.col()));
      if (!shift) shift = d;
      else if (*shift != d) return std::nullopt;
    }
  }
  return shift.value_or(0);
}

std::shared_ptr<const std::vector<char>> intersect(const std::shared_ptr<const std::vector<char>>& a,
                                                   const std::shared_ptr<const std::vector<char>>& b) {
  if (!a) return b;
  if (!b) return a;
  auto d = std::make_shared<std::vector<char>>(a->size());
  for (std::size_t i = 0; i < d->size(); ++i) (*d)[i] = (*a)[i] && (*b)[i];
  return d;
}

// Modes with |n| > inner are in vacuum configuration.
bool boundary_in_vacuum(const FockBasis& b, FockState s, int inner) {
  for (int n = inner + 1; n <= b.n_max(); ++n) {
    if ((s >> b.bit(n)) & 1u) return false;
    if (!((s >> b.bit(-n)) & 1u)) return false;
  }
  return true;
}

}  // namespace

FockOperator::FockOperator(BasisPtr source, BasisPtr target, SparseMatrix m,
                           std::shared_ptr<const std::vector<char>> domain)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)), domain_(std::move(domain)) {
  if (!source_ || !target_) throw PreconditionError("FockOperator: null basis");
  if (static_cast<std::size_t>(m_.rows()) != target_->size() || static_cast<std::size_t>(m_.cols()) != source_->size())
    throw PreconditionError("FockOperator: matrix shape does not match the bases");
  if (domain_ && domain_->size() != source_->size()) throw PreconditionError("FockOperator: domain size");
  m_.makeCompressed();
  charge_shift_ = detect_charge_shift(*source_, *target_, m_);
}

std::size_t FockOperator::domain_size() const {
  if (!domain_) return source_->size();
  return static_cast<std::size_t>(std::count(domain_->begin(), domain_->end(), 1));
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  require_same(*source_, *o.target_, "FockOperator product");
  SparseMatrix prod = (m_ * o.m_).pruned();
  std::shared_ptr<const std::vector<char>> dom = o.domain_;
  if (domain_) {
    auto d = std::make_shared<std::vector<char>>(o.source_->size(), 1);
    if (o.domain_) *d = *o.domain_;
    for (int r = 0; r < o.m_.outerSize(); ++r) {
      if ((*domain_)[r]) continue;
      for (SparseMatrix::InnerIterator it(o.m_, r); it; ++it) (*d)[it.col()] = 0;
    }
    dom = d;
  }
  return FockOperator(o.source_, target_, std::move(prod), dom);
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
  require_same(*source_, *o.source_, "FockOperator sum");
  require_same(*target_, *o.target_, "FockOperator sum");
  return FockOperator(source_, target_, SparseMatrix(m_ + o.m_), intersect(domain_, o.domain_));
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  require_same(*source_, *o.source_, "FockOperator difference");
  require_same(*target_, *o.target_, "FockOperator difference");
  return FockOperator(source_, target_, SparseMatrix(m_ - o.m_), intersect(domain_, o.domain_));
}

FockOperator FockOperator::operator*(cplx s) const {
  return FockOperator(source_, target_, SparseMatrix(m_ * s), domain_);
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(target_, source_, SparseMatrix(m_.adjoint()));
}

Eigen::VectorXcd FockOperator::apply(const Eigen::VectorXcd& x) const {
  if (static_cast<std::size_t>(x.size()) != source_->size()) throw PreconditionError("FockOperator::apply: size");
  if (domain_) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (!(*domain_)[i] && std::abs(x[i]) > 1e-14) throw MarginExhausted("margin exhausted: state touches the window edge");
    }
  }
  Eigen::VectorXcd y(m_.rows());
  kernels::csr_matvec_omp(m_, x.data(), y.data());
  return y;
}

Eigen::MatrixXcd FockOperator::dense() const { return Eigen::MatrixXcd(m_); }

double FockOperator::max_abs() const {
  double best = 0.0;
  for (Eigen::Index k = 0; k < m_.nonZeros(); ++k) best = std::max(best, std::abs(m_.valuePtr()[k]));
  return best;
}

FockOperator identity(const BasisPtr& basis) {
  SparseMatrix m(static_cast<int>(basis->size()), static_cast<int>(basis->size()));
  m.setIdentity();
  return FockOperator(basis, basis, std::move(m));
}

FockOperator creation(int mode, const BasisPtr& full) {
  if (!is_full(*full)) throw PreconditionError("creation: requires the full Fock basis");
  if (mode < -full->n_max() || mode > full->n_max()) throw PreconditionError("creation: mode outside window");
  const int j = full->bit(mode);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < full->size(); ++c) {
    const FockState s = full->state(c);
    if ((s >> j) & 1u) continue;
    t.emplace_back(static_cast<int>(full->find(s | (FockState{1} << j))), static_cast<int>(c),
                   cplx(fermion_sign(s, j)));
  }
  return FockOperator(full, full, from_triplets(full->size(), full->size(), t));
}

FockOperator annihilation(int mode, const BasisPtr& full) { return creation(mode, full).adjoint(); }

Eigen::VectorXcd basis_vector(const FockBasis& basis, FockState s) {
  const auto i = basis.find(s);
  if (i < 0) throw PreconditionError("basis_vector: state not in basis");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  v[i] = 1.0;
  return v;
}

Eigen::VectorXcd vacuum_vector(const FockBasis& basis) { return basis_vector(basis, basis.vacuum()); }

FockOperator car_field(const DoubledVector& h, int n_max) {
  const int d = 2 * n_max + 1;
  if (h.top.size() != d || h.bottom.size() != d) throw PreconditionError("car_field: vector not supported on the window");
  auto full = FockBasis::full(n_max);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < full->size(); ++c) {
    const FockState s = full->state(c);
    for (int j = 0; j < d; ++j) {
      const FockState bit = FockState{1} << j;
      const cplx f = h.top[j];            // c*_n, n = j - n_max
      const cplx g = h.bottom[d - 1 - j];  // g_{-n} for c_n
      if (!(s & bit) && f != cplx(0.0))
        t.emplace_back(static_cast<int>(s | bit), static_cast<int>(c), f * double(fermion_sign(s, j)));
      if ((s & bit) && g != cplx(0.0))
        t.emplace_back(static_cast<int>(s ^ bit), static_cast<int>(c), g * double(fermion_sign(s, j)));
    }
  }
  return FockOperator(full, full, from_triplets(full->size(), full->size(), t));
}

FockOperator dgamma(const OneParticleOperator& a, const BasisPtr& basis, bool parallel) {
  const int n_max = basis->n_max();
  if (a.window().n_max() != n_max) throw PreconditionError("dgamma: window does not match the Fock basis");
  if (!a.is_hermitian(1e-12)) throw PreconditionError("dgamma: A must be selfadjoint");
  if (n_max < 2 * a.bandwidth()) throw InsufficientWindow(2 * a.bandwidth(), "dgamma bandwidth margin");
  cplx shift = 0.0;
  for (int j = 0; j < n_max; ++j) shift -= a.matrix()(j, j);
  auto m = parallel ? kernels::assemble_bilinear_omp(*basis, a.matrix(), shift)
                    : kernels::assemble_bilinear_serial(*basis, a.matrix(), shift);
  return FockOperator(basis, basis, std::move(m));
}

FockOperator dgamma(const OneParticleOperator& a) {
  return dgamma(a, FockBasis::charge_sector(a.window().n_max(), 0));
}

SchwingerCommutator schwinger_commutator(const OneParticleOperator& a1, const OneParticleOperator& a2,
                                         const Tolerances& tol) {
  if (!(a1.window() == a2.window())) throw PreconditionError("schwinger_commutator: windows differ");
  const int n_max = a1.window().n_max();
  const int band = a1.bandwidth() + a2.bandwidth();
  if (n_max < 2 * band) throw InsufficientWindow(2 * band, "schwinger_commutator margin b1 + b2");

  const OneParticleOperator comm = a1 * a2 - a2 * a1;
  for (int m = -comm.exact_radius(); m <= comm.exact_radius(); ++m)
    for (int n = -comm.exact_radius(); n <= comm.exact_radius(); ++n)
      if (std::abs(comm.entry(m, n)) > tol.algebraic)
        throw PreconditionError("schwinger_commutator: A1 and A2 do not commute");

  const double s = schwinger_form(a1, a2, tol);
  auto basis = FockBasis::charge_sector(n_max, 0);
  const FockOperator x = dgamma(a1, basis);
  const FockOperator y = dgamma(a2, basis);
  const Eigen::SparseMatrix<cplx, Eigen::ColMajor, int> c = y.matrix() * x.matrix() - x.matrix() * y.matrix();

  SchwingerCommutator out;
  out.n_max = n_max;
  out.expected = cplx(0.0, s);
  const auto vac = basis->find(basis->vacuum());
  out.value = c.coeff(vac, vac);
  for (std::size_t col = 0; col < basis->size(); ++col) {
    if (!boundary_in_vacuum(*basis, basis->state(col), n_max - band)) continue;
    ++out.safe_states;
    for (Eigen::SparseMatrix<cplx, Eigen::ColMajor, int>::InnerIterator it(c, static_cast<int>(col)); it; ++it) {
      const cplx want = static_cast<std::size_t>(it.row()) == col ? out.value : cplx(0.0);
      out.residual = std::max(out.residual, std::abs(it.value() - want));
    }
    if (c.coeff(static_cast<int>(col), static_cast<int>(col)) == cplx(0.0))
      out.residual = std::max(out.residual, std::abs(out.value));
  }
  if (out.residual > tol.quadrature)
    throw ConsistencyError("schwinger_commutator: commutator is not scalar on the safe sector");
  if (std::abs(out.value - out.expected) > tol.quadrature)
    throw ConsistencyError("schwinger_commutator: scalar differs from i s(A1, A2)");
  return out;
}

FockOperator gauge_implementer(cplx lambda, const BasisPtr& basis, double tol) {
  if (std::abs(std::abs(lambda) - 1.0) > tol) throw PreconditionError("gauge_implementer: |lambda| != 1");
  const double theta = std::arg(lambda);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const int q = basis->charge(basis->state(i));
    t.emplace_back(static_cast<int>(i), static_cast<int>(i), std::polar(1.0, q * theta));
  }
  return FockOperator(basis, basis, from_triplets(basis->size(), basis->size(), t));
}

FockOperator shift_implementer(int n_max) {
  auto full = FockBasis::full(n_max);
  const int top = full->modes() - 1;
  auto domain = std::make_shared<std::vector<char>>(full->size(), 0);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < full->size(); ++c) {
    const FockState s = full->state(c);
    if ((s >> top) & 1u) continue;
    (*domain)[c] = 1;
    const double sign = (std::popcount(s) & 1) ? -1.0 : 1.0;
    t.emplace_back(static_cast<int>((s << 1) | 1u), static_cast<int>(c), cplx(sign));
  }
  return FockOperator(full, full, from_triplets(full->size(), full->size(), t), domain);
}

int covariance_exponent(const FockOperator& phi, double* residual, double tol) {
  const auto& m = phi.matrix();
  std::optional<int> q;
  const double floor = 1e-12 * std::max(phi.max_abs(), 1.0);
  for (int r = 0; r < m.outerSize() && !q; ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      if (std::abs(it.value()) <= floor) continue;
      q = phi.target().charge(phi.target().state(it.row())) - phi.source().charge(phi.source().state(it.col()));
      break;
    }
  }
  const int exponent = q.value_or(0);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const cplx lambda = std::polar(1.0, kTwoPi * k / 16.0);
    const FockOperator lhs =
        gauge_implementer(lambda, phi.target_ptr()) * phi * gauge_implementer(std::conj(lambda), phi.source_ptr());
    const FockOperator diff = lhs - phi * std::polar(1.0, exponent * kTwoPi * k / 16.0);
    worst = std::max(worst, diff.max_abs());
  }
  if (residual) *residual = worst;
  if (worst > tol) throw ConsistencyError("covariance_exponent: operator is not charge homogeneous");
  return exponent;
}

CovarianceReport gauge_covariance(const OperatorFamily& u, const ModeWindow& w, const FockOperator& phi,
                                  const Tolerances& tol) {
  CovarianceReport r;
  r.q = covariance_exponent(phi, &r.residual, tol.quadrature);
  const int b = u(w).bandwidth();
  const ModeWindow iw(std::max(w.n_max(), index_window(b).n_max()));
  r.index_q = charge_index(u, iw, Half::nonnegative, tol).q;
  if (r.q != r.index_q) throw ConsistencyError("gauge_covariance: exponent differs from the charge index");
  return r;
}

SparseMatrix sparse_expm(const SparseMatrix& m, std::size_t dense_limit) {
  if (m.rows() != m.cols()) throw PreconditionError("sparse_expm: square matrix required");
  const auto n = static_cast<std::size_t>(m.rows());
  const double norm = kernels::inf_norm(m);
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const SparseMatrix a = m * cplx(std::ldexp(1.0, -squarings));
  auto keep = [](const Eigen::Index&, const Eigen::Index&, const cplx& v) { return std::abs(v) > 1e-18; };

  SparseMatrix result(a.rows(), a.cols());
  result.setIdentity();
  SparseMatrix term = result;
  for (int k = 1; k < 40; ++k) {
    term = (term * a) * cplx(1.0 / k);
    term.prune(keep);
    if (term.nonZeros() == 0) break;
    result += term;
    double biggest = 0.0;
    for (Eigen::Index i = 0; i < term.nonZeros(); ++i) biggest = std::max(biggest, std::abs(term.valuePtr()[i]));
    if (biggest < 1e-18) break;
  }

  const double dense_fill = 0.2 * static_cast<double>(n) * static_cast<double>(n);
  for (int s = 0; s < squarings; ++s) {
    if (n <= dense_limit && static_cast<double>(result.nonZeros()) > dense_fill) {
      Eigen::MatrixXcd d(result);
      for (int r = s; r < squarings; ++r) d = d * d;
      return d.sparseView(1.0, 1e-18);
    }
    result = SparseMatrix(result * result);
    result.prune(keep);
  }
  return result;
}

FockOperator weyl_exponential(const OneParticleOperator& a, std::size_t cap) {
  auto basis = FockBasis::charge_sector(a.window().n_max(), 0);
  if (basis->size() > cap) throw CapExceeded("weyl_exponential: charge-0 sector exceeds the configured cap");
  const FockOperator x = dgamma(a, basis);
  SparseMatrix e = sparse_expm(SparseMatrix(x.matrix() * cplx(0.0, 1.0)));
  FockOperator w(basis, basis, std::move(e));
  SparseMatrix defect = w.matrix().adjoint() * w.matrix();
  for (int i = 0; i < defect.rows(); ++i) defect.coeffRef(i, i) -= 1.0;
  const FockOperator check(basis, basis, std::move(defect));
  if (check.max_abs() > 1e-9) throw ConsistencyError("weyl_exponential: result not unitary to 1e-9");
  return w;
}

cplx vacuum_expectation(const OneParticleOperator& a, std::size_t cap) {
  auto basis = FockBasis::charge_sector(a.window().n_max(), 0);
  if (basis->size() > cap) throw CapExceeded("vacuum_expectation: charge-0 sector exceeds the configured cap");
  const FockOperator x = dgamma(a, basis);
  const Eigen::VectorXcd vac = vacuum_vector(*basis);
  const Eigen::VectorXcd out = kernels::expm_action(x.matrix(), cplx(0.0, 1.0), vac);
  return vac.dot(out);
}

WeylPhase weyl_phase(const OneParticleOperator& a, const OneParticleOperator& b, std::size_t cap) {
  auto basis = FockBasis::charge_sector(a.window().n_max(), 0);
  if (basis->size() > cap) throw CapExceeded("weyl_phase: charge-0 sector exceeds the configured cap");
  const FockOperator x = dgamma(a, basis);
  const FockOperator y = dgamma(b, basis);
  const FockOperator xy = dgamma(a + b, basis);
  const cplx i(0.0, 1.0);
  const Eigen::VectorXcd vac = vacuum_vector(*basis);
  const Eigen::VectorXcd lhs = kernels::expm_action(x.matrix(), i, kernels::expm_action(y.matrix(), i, vac));
  const Eigen::VectorXcd rhs = kernels::expm_action(xy.matrix(), i, vac);

  WeylPhase out;
  const auto v = basis->find(basis->vacuum());
  out.phase = lhs[v] / rhs[v];
  out.s = schwinger_form(a, b);
  const double plus = std::abs(out.phase - std::polar(1.0, out.s / 2));
  const double minus = std::abs(out.phase - std::polar(1.0, -out.s / 2));
  out.sign = plus <= minus ? 1 : -1;
  out.error = std::min(plus, minus);
  out.state_defect = (lhs - out.phase * rhs).norm();
  return out;
}

PositivityReport spectrum_positivity(int n_max, double tol) {
  auto full = FockBasis::full(n_max);
  const ModeWindow w(n_max);
  const FockOperator h = dgamma(mode_number_operator(w), full);
  PositivityReport r;
  r.n_max = n_max;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  r.second_eigenvalue = std::numeric_limits<double>::infinity();
  for (int row = 0; row < h.matrix().outerSize(); ++row)
    for (SparseMatrix::InnerIterator it(h.matrix(), row); it; ++it)
      if (it.row() != it.col()) r.diagonal_defect = std::max(r.diagonal_defect, std::abs(it.value()));
  for (std::size_t i = 0; i < full->size(); ++i) {
    const FockState s = full->state(i);
    const cplx e = h.matrix().coeff(static_cast<int>(i), static_cast<int>(i));
    r.diagonal_defect = std::max(r.diagonal_defect, std::abs(e - cplx(static_cast<double>(full->energy(s)))));
    const double v = e.real();
    r.min_eigenvalue = std::min(r.min_eigenvalue, v);
    if (std::abs(v) <= tol) {
      ++r.zero_multiplicity;
      r.zero_states.push_back(s);
      if (full->charge(s) == 0) ++r.charge0_zero_multiplicity;
    } else if (v > 0) {
      r.second_eigenvalue = std::min(r.second_eigenvalue, v);
    }
  }
  r.vacuum_unique_in_charge0 =
      r.charge0_zero_multiplicity == 1 &&
      std::find(r.zero_states.begin(), r.zero_states.end(), full->vacuum()) != r.zero_states.end();
  return r;
}

ImplementerSolution solve_implementer(const OperatorFamily& u, const ModeWindow& w, int source_charge,
                                      const Tolerances& tol) {
  const OneParticleOperator op = u(w);
  const int n_max = w.n_max();
  const int r = op.complete_radius();
  if (r < 0) throw InsufficientWindow(n_max - r, "solve_implementer: no complete columns");
  if (!op.is_unitary_on_interior(1e-10)) throw PreconditionError("solve_implementer: U is not unitary");

  ImplementerSolution sol{0, {}, identity(FockBasis::full(1)), 0.0, 0};
  const ModeWindow iw(std::max(n_max, index_window(op.bandwidth()).n_max()));
  sol.q = charge_index(u, iw, Half::nonnegative, tol).q;

  auto full = FockBasis::full(n_max);
  const int d = w.dim();
  // transported c*_n and c_n for |n| <= r
  auto transported = [&](int n, bool create) {
    DoubledVector h{Eigen::VectorXcd::Zero(d), Eigen::VectorXcd::Zero(d)};
    for (int m = -n_max; m <= n_max; ++m) {
      const cplx v = op.entry(m, n);
      if (create) h.top[w.index(m)] = v;
      else h.bottom[w.index(-m)] = std::conj(v);
    }
    return car_field(h, n_max);
  };

  std::vector<FockOperator> create, annihilate;
  for (int n = -r; n <= r; ++n) {
    create.push_back(transported(n, true));
    annihilate.push_back(transported(n, false));
  }

  // Gram matrix of the transported vacuum annihilators on the admissible subspace
  std::vector<std::size_t> sub;
  for (std::size_t i = 0; i < full->size(); ++i) {
    const FockState s = full->state(i);
    if (full->charge(s) == sol.q && boundary_in_vacuum(*full, s, r)) sub.push_back(i);
  }
  if (sub.empty()) throw InsufficientWindow(n_max + std::abs(sol.q), "solve_implementer: empty target sector");
  SparseMatrix gram(static_cast<int>(full->size()), static_cast<int>(full->size()));
  for (int n = -r; n <= r; ++n) {
    const FockOperator& k = n < 0 ? create[n + r] : annihilate[n + r];
    gram += SparseMatrix(k.matrix().adjoint() * k.matrix());
  }
  Eigen::MatrixXcd g(sub.size(), sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < sub.size(); ++j)
      g(i, j) = gram.coeff(static_cast<int>(sub[i]), static_cast<int>(sub[j]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  const auto& ev = es.eigenvalues();
  sol.residual = std::sqrt(std::max(ev[0], 0.0));
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] <= tol.subspace) ++sol.null_dim;

  Eigen::VectorXcd psi = es.eigenvectors().col(0);
  Eigen::Index big = 0;
  psi.cwiseAbs().maxCoeff(&big);
  psi *= std::abs(psi[big]) / psi[big];
  sol.vacuum_image = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(full->size()));
  for (std::size_t i = 0; i < sub.size(); ++i) sol.vacuum_image[sub[i]] = psi[i];

  // Phi(U) c*_{p_k}..c*_{p_1} c_{h_l}..c_{h_1} Omega, same string transported
  auto domain = std::make_shared<std::vector<char>>(full->size(), 0);
  std::vector<Triplet> trip;
  const FockState vac = full->vacuum();
  for (std::size_t c = 0; c < full->size(); ++c) {
    const FockState s = full->state(c);
    if (full->charge(s) != source_charge || !boundary_in_vacuum(*full, s, r)) continue;
    (*domain)[c] = 1;
    FockState cur = vac;
    double sign = 1.0;
    Eigen::VectorXcd v = sol.vacuum_image;
    for (int h = -r; h < 0; ++h) {
      if ((s >> full->bit(h)) & 1u) continue;
      sign *= fermion_sign(cur, full->bit(h));
      cur ^= FockState{1} << full->bit(h);
      v = annihilate[h + r].apply(v);
    }
    for (int p = 0; p <= r; ++p) {
      if (!((s >> full->bit(p)) & 1u)) continue;
      sign *= fermion_sign(cur, full->bit(p));
      cur |= FockState{1} << full->bit(p);
      v = create[p + r].apply(v);
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-15) trip.emplace_back(static_cast<int>(i), static_cast<int>(c), sign * v[i]);
  }
  sol.phi = FockOperator(full, full, from_triplets(full->size(), full->size(), trip), domain);
  return sol;
}

}  // namespace carlab
