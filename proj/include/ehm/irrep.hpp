#pragma once

// Irreducible SU(2) representations S^n C^2.
//
// Coordinate conventions (fixed throughout the library):
//  * Basis order is p = 0..n; the basis monomial at slot p is
//    e1^{n-p} e2^p (weight n - 2p under diag(e^{it}, e^{-it})).
//  * IrrepVector::coeffs stores the coefficients of these monomials with the
//    Gram weights binom(n,p): the invariant Hermitian pairing is
//    <v, w> = sum_p binom(n,p) v[p] conj(w[p]).
//  * The unit-norm weight vectors are u_{n-2p} = binom(n,p)^{-1/2} * monomial.
//  * "Unitary coordinates" x[p] = sqrt(binom(n,p)) * coeffs[p] express the
//    same vector in the orthonormal u-basis; internal linear algebra uses
//    them so that the Gram matrix becomes the identity.

#include <complex>

#include <Eigen/Dense>

namespace ehm {

using cd = std::complex<double>;

struct IrrepVector {
  int n = 0;
  Eigen::VectorXcd coeffs;  // length n+1, monomial coefficients (Gram basis)
};

// Exact binomial coefficient (n small enough that int64 never overflows here).
long long binom_ll(int n, int p);

// Diagonal of the Gram matrix: entry p is binom(n,p).
Eigen::VectorXd gram(int n);
// Entrywise square root of the Gram diagonal.
Eigen::VectorXd gram_sqrt(int n);

// Unit weight vector u_w; w must lie in {-n, -n+2, ..., n}.
IrrepVector weight_vector(int n, int w);

// Invariant Hermitian pairing and induced norm.
cd inner(const IrrepVector& v, const IrrepVector& w);
double norm(const IrrepVector& v);

// Orthonormal-coordinate view of a vector and its inverse.
Eigen::VectorXcd unitary_coords(const IrrepVector& v);
IrrepVector from_unitary_coords(int n, const Eigen::VectorXcd& x);

// Matrix of the group/algebra action in the three coordinate systems.
// "polynomial" acts on plain polynomial coefficients, "gram" on
// IrrepVector::coeffs, and "unitary" on orthonormal coordinates.
Eigen::MatrixXcd rho_polynomial(int n, const Eigen::Matrix2cd& g);
Eigen::MatrixXcd drho_polynomial(int n, const Eigen::Matrix2cd& X);
Eigen::MatrixXcd rho_unitary(int n, const Eigen::Matrix2cd& g);
Eigen::MatrixXcd drho_unitary(int n, const Eigen::Matrix2cd& X);

// Group action of g in SU(2) (validated) on a vector.
IrrepVector group_action(const Eigen::Matrix2cd& g, const IrrepVector& v);
// Derived algebra action of X in su(2) (validated) on a vector.
IrrepVector algebra_action(const Eigen::Matrix2cd& X, const IrrepVector& v);

// The antilinear structure map: sigma(u_{n-2p}) = (-1)^p u_{-n+2p}.
// sigma^2 = (+1)^n id for even n and (-1)^n id for odd n; it commutes with
// every group_action.
IrrepVector sigma(const IrrepVector& v);

// Casimir operator (sum of -drho(X_a)^2 over the orthogonal basis X1,X2,X3).
// On S^n C^2 it is n(n+2) times the identity.
Eigen::MatrixXcd casimir_unitary(int n);
IrrepVector casimir_apply(const IrrepVector& v);
double casimir_eigenvalue(int n);

}  // namespace ehm
