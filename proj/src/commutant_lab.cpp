#include "carlab/commutant_lab.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "carlab/errors.hpp"
#include "carlab/fourier.hpp"

namespace carlab {

namespace {

double hs_inner_real(const Eigen::MatrixXcd& a) { return std::sqrt(a.cwiseAbs2().sum()); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

cplx hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.adjoint() * b).trace();
}

// Modified Gram-Schmidt with one reorthogonalization pass; returns true if x was added.
bool absorb(std::vector<Eigen::MatrixXcd>& basis, Eigen::MatrixXcd x, double tol) {
  const double scale = hs_inner_real(x);
  if (scale <= tol) return false;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) x -= hs_inner(b, x) * b;
  const double rest = hs_inner_real(x);
  if (rest <= tol * std::max(1.0, scale)) return false;
  basis.push_back(x / rest);
  return true;
}

}  // namespace

MatrixSubspace::MatrixSubspace(int d, std::vector<Eigen::MatrixXcd> spanning, double tol) : d_(d) {
  for (auto& x : spanning) {
    if (x.rows() != d || x.cols() != d) throw PreconditionError("MatrixSubspace: element has wrong shape");
    absorb(basis_, std::move(x), tol);
  }
}

double MatrixSubspace::residual(const Eigen::MatrixXcd& x) const {
  Eigen::MatrixXcd r = x;
  for (const auto& b : basis_) r -= hs_inner(b, r) * b;
  return hs_inner_real(r);
}

bool MatrixSubspace::contains(const MatrixSubspace& o, double tol) const {
  for (const auto& b : o.basis_)
    if (residual(b) > tol) return false;
  return true;
}

double MatrixAlgebra::closure_defect() const {
  double worst = 0.0;
  for (const auto& a : span.basis())
    for (const auto& b : span.basis()) worst = std::max(worst, span.residual(a * b));
  return worst;
}

MatrixAlgebra generated_algebra(const std::vector<Eigen::MatrixXcd>& gens, int d, double tol) {
  std::vector<Eigen::MatrixXcd> letters;
  for (const auto& g : gens) {
    if (g.rows() != d || g.cols() != d) throw PreconditionError("generated_algebra: generator has wrong shape");
    letters.push_back(g);
    letters.push_back(g.adjoint());
  }
  std::vector<Eigen::MatrixXcd> basis;
  absorb(basis, Eigen::MatrixXcd::Identity(d, d), tol);
  for (const auto& l : letters) absorb(basis, l, tol);
  // words grow until no product leaves the span
  std::size_t done = 0;
  while (done < basis.size()) {
    const std::size_t end = basis.size();
    for (std::size_t i = done; i < end; ++i)
      for (const auto& l : letters) absorb(basis, Eigen::MatrixXcd(l * basis[i]), tol);
    done = end;
    if (basis.size() > static_cast<std::size_t>(d) * d)
      throw ConsistencyError("generated_algebra: dimension exceeds d^2");
  }
  return MatrixAlgebra{gens, MatrixSubspace(d, std::move(basis), tol)};
}

MatrixSubspace commuting_subspace(const std::vector<Eigen::MatrixXcd>& gens, int d, const MatrixSubspace* within,
                                  double tol) {
  // X = sum_j c_j B_j over a basis of the search space
  std::vector<Eigen::MatrixXcd> search;
  if (within) {
    search = within->basis();
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
        e(i, j) = 1.0;
        search.push_back(e);
      }
  }
  const auto n = static_cast<Eigen::Index>(search.size());
  if (n == 0) return MatrixSubspace(d, {}, tol);
  const Eigen::Index block = static_cast<Eigen::Index>(d) * d;
  Eigen::MatrixXcd system(block * std::max<Eigen::Index>(1, static_cast<Eigen::Index>(gens.size())), n);
  system.setZero();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::MatrixXcd c = search[j] * gens[g] - gens[g] * search[j];
      system.block(static_cast<Eigen::Index>(g) * block, j, block, 1) = c.reshaped();
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() ? sv[0] : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > tol * scale) ++rank;
  std::vector<Eigen::MatrixXcd> null;
  for (Eigen::Index j = rank; j < n; ++j) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < n; ++i) x += svd.matrixV()(i, j) * search[i];
    null.push_back(x);
  }
  return MatrixSubspace(d, std::move(null), tol);
}

MatrixAlgebra commutant(const MatrixAlgebra& alg, double tol) {
  const int d = alg.span.ambient();
  MatrixSubspace c = commuting_subspace(alg.span.basis(), d, nullptr, tol);
  return MatrixAlgebra{c.basis(), c};
}

MatrixSubspace center(const MatrixAlgebra& alg, double tol) {
  return commuting_subspace(alg.span.basis(), alg.span.ambient(), &alg.span, tol);
}

MatrixSubspace relative_commutant(const MatrixAlgebra& a, const MatrixAlgebra& f, double tol) {
  return commuting_subspace(a.span.basis(), a.span.ambient(), &f.span, tol);
}

CenterReport verify_center_identity(const std::vector<Eigen::MatrixXcd>& a_gens,
                                    const std::vector<Eigen::MatrixXcd>& f_gens, int d,
                                    const std::vector<Eigen::MatrixXcd>& contained_in_center, double tol) {
  const MatrixAlgebra a = generated_algebra(a_gens, d, tol);
  const MatrixAlgebra f = generated_algebra(f_gens, d, tol);
  if (!f.span.contains(a.span, tol)) throw PreconditionError("verify_center_identity: A is not inside F");
  const MatrixSubspace z = center(a, tol);
  const MatrixSubspace rel = relative_commutant(a, f, tol);
  CenterReport r;
  r.dim_a = a.dim();
  r.dim_f = f.dim();
  r.dim_center = z.dim();
  r.dim_relative_commutant = rel.dim();
  r.center_equals_relative_commutant = z.equals(rel, tol);
  r.a_is_abelian = z.equals(a.span, tol);
  if (!contained_in_center.empty()) {
    const MatrixAlgebra extra = generated_algebra(contained_in_center, d, tol);
    r.containment = z.contains(extra.span, tol);
  }
  return r;
}

ClockShiftModel::ClockShiftModel(int m, int k) : m_(m), k_(k) {
  if (m < 2 || k < 1) throw PreconditionError("ClockShiftModel: need M >= 2, K >= 1");
  const Eigen::MatrixXcd id_k = Eigen::MatrixXcd::Identity(k, k);
  Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(m, m);
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(m, m);
  for (int n = 0; n < m; ++n) {
    clock(n, n) = std::polar(1.0, kTwoPi * n / m);
    shift((n + 1) % m, n) = 1.0;
  }
  u_ = kron(clock, id_k);
  v_ = kron(shift, id_k);
}

cplx ClockShiftModel::omega() const { return std::polar(1.0, kTwoPi / m_); }

Eigen::MatrixXcd ClockShiftModel::u_power(int k) const {
  const int r = ((k % m_) + m_) % m_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim(), dim());
  for (int i = 0; i < r; ++i) out = out * u_;
  return out;
}

Eigen::MatrixXcd ClockShiftModel::v_power(int n) const {
  const int r = ((n % m_) + m_) % m_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim(), dim());
  for (int i = 0; i < r; ++i) out = out * v_;
  return out;
}

Eigen::MatrixXcd ClockShiftModel::block_projection(int n) const {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(m_, m_);
  e(((n % m_) + m_) % m_, ((n % m_) + m_) % m_) = 1.0;
  return kron(e, Eigen::MatrixXcd::Identity(k_, k_));
}

std::vector<Eigen::MatrixXcd> ClockShiftModel::full_generators() const {
  std::vector<Eigen::MatrixXcd> g{u_, v_};
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      if (k_ == 1) break;
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(k_, k_);
      e(i, j) = 1.0;
      g.push_back(kron(Eigen::MatrixXcd::Identity(m_, m_), e));
    }
  return g;
}

std::vector<Eigen::MatrixXcd> ClockShiftModel::fixed_point_generators() const {
  std::vector<Eigen::MatrixXcd> g;
  for (int n = 0; n < m_; ++n) g.push_back(block_projection(n));
  for (int i = 0; i < k_ && k_ > 1; ++i)
    for (int j = 0; j < k_; ++j) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(k_, k_);
      e(i, j) = 1.0;
      g.push_back(kron(Eigen::MatrixXcd::Identity(m_, m_), e));
    }
  return g;
}

Eigen::MatrixXcd spectral_component(const Eigen::MatrixXcd& f, int n, const ClockShiftModel& model) {
  const int m = model.modulus();
  if (n < -m / 2 || n >= m - m / 2) throw PreconditionError("spectral_component: degree outside [-M/2, M/2)");
  if (f.rows() != model.dim() || f.cols() != model.dim()) throw PreconditionError("spectral_component: shape");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(f.rows(), f.cols());
  for (int k = 0; k < m; ++k) {
    const Eigen::MatrixXcd uk = model.u_power(k);
    acc += std::polar(1.0, -kTwoPi * n * k / m) * (uk * f * uk.adjoint());
  }
  return acc / static_cast<double>(m);
}

GradingReport check_grading(const Eigen::MatrixXcd& f, const ClockShiftModel& model) {
  const int m = model.modulus();
  GradingReport r;
  std::vector<Eigen::MatrixXcd> parts;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(f.rows(), f.cols());
  for (int n = -m / 2; n < m - m / 2; ++n) {
    parts.push_back(spectral_component(f, n, model));
    sum += parts.back();
    const Eigen::MatrixXcd a = parts.back() * model.v_power(-n);
    r.fixed_point = std::max(r.fixed_point, (a * model.u() - model.u() * a).norm());
  }
  r.reconstruction = (sum - f).norm();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ni = i - m / 2;
      const Eigen::MatrixXcd pp = spectral_component(parts[j], ni, model);
      const Eigen::MatrixXcd want = i == j ? parts[j] : Eigen::MatrixXcd::Zero(f.rows(), f.cols());
      r.idempotence = std::max(r.idempotence, (pp - want).norm());
    }
  return r;
}

}  // namespace carlab
