#pragma once

// Symmetric endomorphisms of the realified representation space R^{2N} and
// the identification of the J-anticommuting ones with symmetric 2-tensors.
//
// Public storage keeps the matrix in the realified Gram-weighted monomial
// basis (self-adjointness there is with respect to the Gram inner product);
// computations convert to orthonormal coordinates, where the same operator is
// an ordinary symmetric matrix.
//
// The tensor identification sends the antilinear operator v -> M conj(v)
// (realified as a J-anticommuting symmetric matrix) to the complex symmetric
// coefficient matrix c with M[i, j] = conj(c[n-i, n-j]) * (-1)^{n-i-j} in
// orthonormal coordinates.  It is involutive, equivariant and antilinear
// (i * c corresponds to -J X), and scales Hilbert-Schmidt norms by sqrt(2).

#include <utility>

#include <Eigen/Dense>

#include "ehm/irrep.hpp"
#include "ehm/realify.hpp"
#include "ehm/tensor.hpp"

namespace ehm {

struct SymEndo {
  int N = 0;           // complex dimension n+1
  Eigen::MatrixXd M;   // 2N x 2N, Gram-weighted monomial basis

  int level() const { return N - 1; }
};

// Construction from / conversion to orthonormal coordinates.
SymEndo sym_endo_from_orthonormal(const Eigen::MatrixXd& X);
Eigen::MatrixXd to_orthonormal(const SymEndo& S);

// Zero endomorphism at level n.
SymEndo sym_endo_zero(int n);

// Self-adjointness with respect to the realified Gram pairing.
bool is_gram_self_adjoint(const SymEndo& S, double tol = 1e-12);

// Invariant (Hilbert-Schmidt) pairing, norm, and operator norm.
double hs_inner(const SymEndo& a, const SymEndo& b);
double hs_norm(const SymEndo& a);
double op_norm(const SymEndo& a);

// Orthogonal split S = S_c + S_a into the J-commuting and J-anticommuting
// symmetric parts.
std::pair<SymEndo, SymEndo> split_J(const SymEndo& S);

// Relative size of the J-commuting part (0 for a purely anticommuting S).
double j_commuting_fraction(const Eigen::MatrixXd& X_orthonormal);

// The symmetric J-anticommuting endomorphism attached to the symmetrized
// tensor a (x) b + b (x) a; real-bilinear and symmetric in (a, b).
SymEndo endo_from_pair(const IrrepVector& a, const IrrepVector& b);

// Tensor coefficients of a J-anticommuting symmetric endomorphism (throws
// std::domain_error when the input has a sizable J-commuting part) and the
// inverse identification.
TensorElement endo_to_tensor(const SymEndo& S);
SymEndo endo_from_tensor(const TensorElement& t);

}  // namespace ehm
