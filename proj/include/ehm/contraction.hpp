#pragma once

// Floating-point contraction layer: the raw contraction on tensor squares,
// its closed-form iterate, the norm-corrected ("modified") contraction whose
// per-component scale factors make each isotypic block an isometry, and the
// two-level correspondence between deformation endomorphisms.

#include <map>

#include <Eigen/Dense>

#include "ehm/spans.hpp"
#include "ehm/sym_endo.hpp"
#include "ehm/tensor.hpp"

namespace ehm {

// One application of the contraction (level n -> n-1); the coefficient rule
// matches the exact backend entry for entry.
TensorElement contract(const TensorElement& t);

// m successive applications.
TensorElement contract_times(const TensorElement& t, int m);

// 2r applications (the natural step for symmetric tensors, which the single
// contraction maps to antisymmetric ones and back).
TensorElement contract_power(const TensorElement& t, int r);

// Closed-form 2r-fold contraction of the symmetrized monomial pair
// E_{p,q} + E_{q,p}: a signed binomial sum over shifted exponent pairs.
TensorElement contract_power_closed(int n, int p, int q, int r);

// Per-label scale factors 1 / |C restricted to the label-m component| at
// level n (labels 2n-2, 2n-4, ..., 0; the top label 2n is the kernel).
// By equivariance the restriction is a multiple of an isometry, so the
// factor is probe-independent; a fixed deterministic probe is used.
struct ContractionConstants {
  int n = 0;
  std::map<int, double> scale;  // label -> 1/|C|_label
};

const ContractionConstants& contraction_constants(int n);

// Matrix of the modified contraction (unitary tensor coordinates,
// level n -> n-1, cached per n): the raw contraction rescaled per label so
// that every surviving isotypic component keeps its norm.
const Eigen::MatrixXcd& contract_modified_matrix(int n);

// Modified contraction of t (level n -> n-1) and its adjoint (n -> n+1).
TensorElement contract_modified(const TensorElement& t);
TensorElement contract_modified_adjoint(const TensorElement& t);

// Two-level correspondence between admissible deformation endomorphisms:
// down sends a deformation at (k, l) to one at (k, l-1) via the modified
// contraction applied twice to its tensor coefficients; up inverts it via
// the adjoints.  The result is rescaled to preserve the operator norm, and
// the zero endomorphism maps to zero.  Throws std::invalid_argument when the
// input is not an admissible deformation at (k, l) (relative residual above
// 1e-8 against the cached ambient basis) or its operator norm is >= 1.
SymEndo correspond(const SymEndo& D, int k, int l, bool down);

}  // namespace ehm
