#pragma once

// Data-parallel Fock-space kernels. Each has a serial reference used by the
// tests; the *_omp versions are what the engine calls.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>

#include "carlab/fock_basis.hpp"

namespace carlab::kernels {

using cplx = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor, int>;

/// sum_{p,q} a(p,q) c*_p c_q + shift * 1 restricted to `basis`
/// (source and target basis are the same; charge is conserved).
/// Serial version walks source states and scatters triplets.
SparseMatrix assemble_bilinear_serial(const FockBasis& basis, const Eigen::MatrixXcd& a, cplx shift);
/// OpenMP version gathers each target row independently.
SparseMatrix assemble_bilinear_omp(const FockBasis& basis, const Eigen::MatrixXcd& a, cplx shift);

void csr_matvec_serial(const SparseMatrix& m, const cplx* x, cplx* y);
void csr_matvec_omp(const SparseMatrix& m, const cplx* x, cplx* y);

/// exp(t H) v by sub-stepped Taylor series; H given in CSR.
Eigen::VectorXcd expm_action(const SparseMatrix& h, cplx t, const Eigen::VectorXcd& v, bool parallel = true);

/// max row sum of |entries|
double inf_norm(const SparseMatrix& m);

}  // namespace carlab::kernels
