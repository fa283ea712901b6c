#pragma once

// Dense Jordan-Wigner matrices built from Kronecker products, used as an
// independent reference for the sparse Fock layer. Matrix index = sum_j b_j 2^j.

#include <Eigen/Dense>
#include <complex>

namespace jw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// c*_j on `modes` sites: I^{(modes-j-1)} (x) sigma+ (x) Z^{(j)}
inline Mat creation(int j, int modes) {
  Mat sp = Mat::Zero(2, 2);
  sp(1, 0) = 1.0;
  Mat z = Mat::Identity(2, 2);
  z(1, 1) = -1.0;
  Mat out = Mat::Identity(1, 1);
  for (int k = modes - 1; k >= 0; --k) out = kron(out, k > j ? Mat(Mat::Identity(2, 2)) : (k == j ? sp : z));
  return out;
}

inline Mat annihilation(int j, int modes) { return creation(j, modes).adjoint(); }

/// sum a(p, q) c*_p c_q over window indices
inline Mat bilinear(const Mat& a, int modes) {
  const Eigen::Index n = Eigen::Index{1} << modes;
  Mat out = Mat::Zero(n, n);
  for (int p = 0; p < modes; ++p)
    for (int q = 0; q < modes; ++q)
      if (a(p, q) != cplx(0.0)) out += a(p, q) * creation(p, modes) * annihilation(q, modes);
  return out;
}

inline Mat random_hermitian(int n, unsigned seed) {
  std::srand(seed);
  Mat m = Mat::Random(n, n);
  return (m + m.adjoint()) * 0.5;
}

/// exp(t H) for Hermitian H via the spectral decomposition.
inline Mat exp_hermitian(const Mat& h, cplx t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXcd d = (es.eigenvalues().cast<cplx>() * t).array().exp();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace jw
