#include <doctest.h>

#include "carlab/kernels/fock_kernels.hpp"
#include "jw_oracle.hpp"

using namespace carlab;
using kernels::SparseMatrix;
using cplx = std::complex<double>;

namespace {

Eigen::MatrixXcd restrict(const Eigen::MatrixXcd& full, const FockBasis& b) {
  Eigen::MatrixXcd out(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = full(b.state(i), b.state(j));
  return out;
}

}  // namespace

TEST_CASE("bilinear assembly matches the Kronecker oracle on the full space") {
  const int n_max = 3;
  const auto basis = FockBasis::full(n_max);
  const int modes = basis->modes();
  const jw::Mat a = jw::random_hermitian(modes, 5);
  const jw::Mat oracle = jw::bilinear(a, modes) + cplx(0.3) * jw::Mat::Identity(1 << modes, 1 << modes);
  const SparseMatrix s = kernels::assemble_bilinear_serial(*basis, a, 0.3);
  const SparseMatrix p = kernels::assemble_bilinear_omp(*basis, a, 0.3);
  CHECK((Eigen::MatrixXcd(s) - oracle).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((Eigen::MatrixXcd(p) - oracle).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("serial and OpenMP assembly agree on charge sectors") {
  const int n_max = 4;
  const int modes = 2 * n_max + 1;
  const jw::Mat a = jw::random_hermitian(modes, 6);
  const jw::Mat oracle = jw::bilinear(a, modes);
  for (int q : {-1, 0, 2}) {
    const auto basis = FockBasis::charge_sector(n_max, q);
    const SparseMatrix s = kernels::assemble_bilinear_serial(*basis, a, 0.0);
    const SparseMatrix p = kernels::assemble_bilinear_omp(*basis, a, 0.0);
    CHECK((Eigen::MatrixXcd(s) - Eigen::MatrixXcd(p)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((Eigen::MatrixXcd(s) - restrict(oracle, *basis)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("CSR matvec, serial and OpenMP") {
  const auto basis = FockBasis::charge_sector(5, 0);
  const jw::Mat a = jw::random_hermitian(basis->modes(), 7);
  const SparseMatrix m = kernels::assemble_bilinear_omp(*basis, a, 0.0);
  std::srand(8);
  const Eigen::VectorXcd x = Eigen::VectorXcd::Random(basis->size());
  Eigen::VectorXcd ys(basis->size()), yp(basis->size());
  kernels::csr_matvec_serial(m, x.data(), ys.data());
  kernels::csr_matvec_omp(m, x.data(), yp.data());
  const Eigen::VectorXcd ref = m * x;
  CHECK((ys - ref).norm() < 1e-12);
  CHECK((yp - ys).norm() == 0.0);
}

TEST_CASE("expm_action against the spectral exponential") {
  const auto basis = FockBasis::charge_sector(3, 0);
  const jw::Mat a = jw::random_hermitian(basis->modes(), 9);
  const SparseMatrix m = kernels::assemble_bilinear_serial(*basis, a, 0.0);
  const Eigen::MatrixXcd dense(m);
  std::srand(10);
  const Eigen::VectorXcd v = Eigen::VectorXcd::Random(basis->size());
  for (cplx t : {cplx(0.0, 0.5), cplx(0.0, -2.0), cplx(0.1, 0.0)}) {
    const Eigen::VectorXcd ref = jw::exp_hermitian(dense, t) * v;
    CHECK((kernels::expm_action(m, t, v, false) - ref).norm() < 1e-11 * ref.norm());
    CHECK((kernels::expm_action(m, t, v, true) - ref).norm() < 1e-11 * ref.norm());
  }
}

TEST_CASE("inf norm") {
  SparseMatrix m(2, 2);
  m.insert(0, 0) = cplx(1.0, 1.0);
  m.insert(0, 1) = 2.0;
  m.insert(1, 1) = -0.5;
  CHECK(kernels::inf_norm(m) == doctest::Approx(2.0 + std::sqrt(2.0)));
}
