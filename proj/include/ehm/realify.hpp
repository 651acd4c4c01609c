#pragma once

// Realification of the complex representation spaces.
//
// A complex vector x in C^N becomes [Re x; Im x] in R^{2N}; multiplication by
// i becomes the block matrix J = [[0, -I], [I, 0]].  A complex-linear map A
// realifies to [[Re A, -Im A], [Im A, Re A]] (commutes with J); an antilinear
// map v -> M conj(v) realifies to [[Re M, Im M], [Im M, -Re M]] (anticommutes
// with J, and is symmetric exactly when M is complex-symmetric).
//
// RealifiedVector keeps the public Gram-weighted monomial coordinates of an
// IrrepVector; all other helpers here act on orthonormal (u-basis)
// coordinates, which is what the numerical layers use internally.

#include <Eigen/Dense>

#include "ehm/irrep.hpp"

namespace ehm {

struct RealifiedVector {
  int n = 0;
  Eigen::VectorXd xy;  // length 2(n+1): (Re coeffs, Im coeffs), Gram basis
};

inline RealifiedVector realify(const IrrepVector& v) {
  const int N = v.n + 1;
  RealifiedVector r;
  r.n = v.n;
  r.xy.resize(2 * N);
  r.xy.head(N) = v.coeffs.real();
  r.xy.tail(N) = v.coeffs.imag();
  return r;
}

inline IrrepVector complexify(const RealifiedVector& r) {
  const int N = r.n + 1;
  IrrepVector v;
  v.n = r.n;
  v.coeffs = r.xy.head(N) + cd(0, 1) * Eigen::VectorXcd(r.xy.tail(N).cast<cd>());
  return v;
}

// Orthonormal-coordinate realification helpers.
inline Eigen::VectorXd realify_vec(const Eigen::VectorXcd& x) {
  Eigen::VectorXd v(2 * x.size());
  v.head(x.size()) = x.real();
  v.tail(x.size()) = x.imag();
  return v;
}

inline Eigen::VectorXcd complexify_vec(const Eigen::VectorXd& v) {
  const Eigen::Index N = v.size() / 2;
  return v.head(N) + cd(0, 1) * Eigen::VectorXcd(v.tail(N).cast<cd>());
}

inline Eigen::MatrixXd realify_op(const Eigen::MatrixXcd& A) {
  const Eigen::Index N = A.rows();
  Eigen::MatrixXd R(2 * N, 2 * N);
  R.topLeftCorner(N, N) = A.real();
  R.topRightCorner(N, N) = -A.imag();
  R.bottomLeftCorner(N, N) = A.imag();
  R.bottomRightCorner(N, N) = A.real();
  return R;
}

inline Eigen::MatrixXd antilinear_real(const Eigen::MatrixXcd& M) {
  const Eigen::Index N = M.rows();
  Eigen::MatrixXd R(2 * N, 2 * N);
  R.topLeftCorner(N, N) = M.real();
  R.topRightCorner(N, N) = M.imag();
  R.bottomLeftCorner(N, N) = M.imag();
  R.bottomRightCorner(N, N) = -M.real();
  return R;
}

inline Eigen::MatrixXd Jmat(int N) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  J.topRightCorner(N, N) = -Eigen::MatrixXd::Identity(N, N);
  J.bottomLeftCorner(N, N) = Eigen::MatrixXd::Identity(N, N);
  return J;
}

// Conversion between Gram-weighted monomial coordinates and orthonormal
// coordinates on the realified space: both halves scale by sqrt(binom).
inline Eigen::VectorXd realified_gram_sqrt(int n) {
  const Eigen::VectorXd s = gram_sqrt(n);
  Eigen::VectorXd out(2 * (n + 1));
  out.head(n + 1) = s;
  out.tail(n + 1) = s;
  return out;
}

inline Eigen::VectorXd real_to_orthonormal(const RealifiedVector& r) {
  return realified_gram_sqrt(r.n).asDiagonal() * r.xy;
}

inline RealifiedVector real_from_orthonormal(int n, const Eigen::VectorXd& v) {
  RealifiedVector r;
  r.n = n;
  r.xy = realified_gram_sqrt(n).cwiseInverse().asDiagonal() * v;
  return r;
}

}  // namespace ehm
