#include "carlab/kernels/fock_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "carlab/errors.hpp"

namespace carlab::kernels {

namespace {

struct Nonzero {
  int q;
  cplx value;
};

// rows[p] = nonzero a(p, q)
std::vector<std::vector<Nonzero>> row_pattern(const Eigen::MatrixXcd& a) {
  std::vector<std::vector<Nonzero>> rows(a.rows());
  for (int p = 0; p < a.rows(); ++p)
    for (int q = 0; q < a.cols(); ++q)
      if (a(p, q) != cplx(0.0)) rows[p].push_back({q, a(p, q)});
  return rows;
}

void check_shape(const FockBasis& basis, const Eigen::MatrixXcd& a) {
  if (a.rows() != basis.modes() || a.cols() != basis.modes())
    throw PreconditionError("assemble_bilinear: matrix size does not match the basis window");
}

}  // namespace

SparseMatrix assemble_bilinear_serial(const FockBasis& basis, const Eigen::MatrixXcd& a, cplx shift) {
  check_shape(basis, a);
  const int d = basis.modes();
  std::vector<Eigen::Triplet<cplx, int>> trip;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const FockState s = basis.state(col);
    cplx diag = shift;
    for (int q = 0; q < d; ++q) {
      if (!((s >> q) & 1u)) continue;
      const int sq = fermion_sign(s, q);
      const FockState t = s ^ (FockState{1} << q);
      for (int p = 0; p < d; ++p) {
        const cplx v = a(p, q);
        if (v == cplx(0.0)) continue;
        if (p == q) {
          diag += v;
          continue;
        }
        if ((t >> p) & 1u) continue;
        const FockState u = t | (FockState{1} << p);
        const auto row = basis.find(u);
        if (row < 0) continue;
        trip.emplace_back(static_cast<int>(row), static_cast<int>(col),
                          v * static_cast<double>(sq * fermion_sign(t, p)));
      }
    }
    if (diag != cplx(0.0)) trip.emplace_back(static_cast<int>(col), static_cast<int>(col), diag);
  }
  SparseMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SparseMatrix assemble_bilinear_omp(const FockBasis& basis, const Eigen::MatrixXcd& a, cplx shift) {
  check_shape(basis, a);
  const int d = basis.modes();
  const auto pattern = row_pattern(a);
  const auto n = static_cast<std::int64_t>(basis.size());
  std::vector<std::vector<std::pair<int, cplx>>> rows(n);

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t row = 0; row < n; ++row) {
    const FockState t = basis.state(row);
    auto& out = rows[row];
    cplx diag = shift;
    // <t| c*_p c_q |s> with s = t - p + q
    for (int p = 0; p < d; ++p) {
      if (!((t >> p) & 1u)) continue;
      const FockState mid = t ^ (FockState{1} << p);
      const int sp = fermion_sign(mid, p);
      for (const auto& nz : pattern[p]) {
        if (nz.q == p) {
          diag += nz.value;
          continue;
        }
        if ((mid >> nz.q) & 1u) continue;
        const FockState s = mid | (FockState{1} << nz.q);
        const auto col = basis.find(s);
        if (col < 0) continue;
        out.emplace_back(static_cast<int>(col), nz.value * static_cast<double>(sp * fermion_sign(mid, nz.q)));
      }
    }
    if (diag != cplx(0.0)) out.emplace_back(static_cast<int>(row), diag);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }

  SparseMatrix m(static_cast<int>(n), static_cast<int>(n));
  std::size_t nnz = 0;
  for (const auto& r : rows) nnz += r.size();
  m.reserve(static_cast<Eigen::Index>(nnz));
  auto* outer = m.outerIndexPtr();
  outer[0] = 0;
  for (std::int64_t r = 0; r < n; ++r) outer[r + 1] = outer[r] + static_cast<int>(rows[r].size());
  m.resizeNonZeros(static_cast<Eigen::Index>(nnz));
  auto* inner = m.innerIndexPtr();
  auto* values = m.valuePtr();
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    int k = outer[r];
    for (const auto& [c, v] : rows[r]) {
      inner[k] = c;
      values[k] = v;
      ++k;
    }
  }
  m.finalize();
  return m;
}

void csr_matvec_serial(const SparseMatrix& m, const cplx* x, cplx* y) {
  const auto* outer = m.outerIndexPtr();
  const auto* inner = m.innerIndexPtr();
  const auto* values = m.valuePtr();
  for (int r = 0; r < m.rows(); ++r) {
    cplx acc = 0.0;
    for (int k = outer[r]; k < outer[r + 1]; ++k) acc += values[k] * x[inner[k]];
    y[r] = acc;
  }
}

void csr_matvec_omp(const SparseMatrix& m, const cplx* x, cplx* y) {
  const auto* outer = m.outerIndexPtr();
  const auto* inner = m.innerIndexPtr();
  const auto* values = m.valuePtr();
  const int rows = static_cast<int>(m.rows());
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    cplx acc = 0.0;
    for (int k = outer[r]; k < outer[r + 1]; ++k) acc += values[k] * x[inner[k]];
    y[r] = acc;
  }
}

double inf_norm(const SparseMatrix& m) {
  double best = 0.0;
  for (int r = 0; r < m.outerSize(); ++r) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) s += std::abs(it.value());
    best = std::max(best, s);
  }
  return best;
}

Eigen::VectorXcd expm_action(const SparseMatrix& h, cplx t, const Eigen::VectorXcd& v, bool parallel) {
  if (h.rows() != h.cols() || h.cols() != v.size()) throw PreconditionError("expm_action: shape mismatch");
  const double norm = inf_norm(h) * std::abs(t);
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const cplx dt = t / static_cast<double>(steps);
  auto matvec = parallel ? csr_matvec_omp : csr_matvec_serial;

  Eigen::VectorXcd x = v;
  Eigen::VectorXcd term(v.size()), next(v.size());
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd acc = x;
    term = x;
    const double scale = std::max(x.norm(), 1e-300);
    for (int k = 1; k < 200; ++k) {
      matvec(h, term.data(), next.data());
      term = next * (dt / static_cast<double>(k));
      acc += term;
      if (term.norm() <= 1e-17 * scale) break;
    }
    x = std::move(acc);
  }
  return x;
}

}  // namespace carlab::kernels
