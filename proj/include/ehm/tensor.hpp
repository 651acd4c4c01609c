#pragma once

// Tensor squares S^n C^2 (x) S^n C^2 and their isotypic decomposition
// into S^{2n} + S^{2n-2} + ... + S^0.
//
// TensorElement::coeffs(p, q) multiplies the basis monomial
// e1^{n-p} e2^p (x) e1^{n-q} e2^q, carried with the product Gram weight
// binom(n,p) * binom(n,q) (same convention as IrrepVector).  Unitary
// coordinates scale both indices by sqrt(binom); the isotypic projectors are
// polynomials in the tensor Casimir operator and are assembled and cached in
// those coordinates.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ehm/irrep.hpp"

namespace ehm {

struct TensorElement {
  int n = 0;
  Eigen::MatrixXcd coeffs;  // (n+1) x (n+1), Gram-basis coefficients
};

TensorElement tensor_of(const IrrepVector& v, const IrrepVector& w);

cd inner(const TensorElement& a, const TensorElement& b);
double norm(const TensorElement& a);

// Flattened orthonormal coordinates; index p*(n+1)+q (row-major).
Eigen::VectorXcd vec_unitary(const TensorElement& t);
TensorElement from_vec_unitary(int n, const Eigen::VectorXcd& v);

// Component labels 2n, 2n-2, ..., 0 of the tensor square.
std::vector<int> isotypic_labels(int n);

// Casimir of the diagonal action on the tensor square (unitary coordinates,
// cached per n).
const Eigen::MatrixXcd& casimir_tensor_unitary(int n);

// Orthogonal projector onto the label-m component (unitary coordinates,
// cached per (n, m)); m must be a valid label.
const Eigen::MatrixXcd& isotypic_projector_matrix(int n, int m);

TensorElement isotypic_project(const TensorElement& t, int m);

// Rank of the label-m projector (rounded trace; equals m+1).
int isotypic_rank(int n, int m);

}  // namespace ehm
