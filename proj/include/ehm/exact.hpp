#pragma once

// Exact rational backend for the combinatorial contraction identities.
//
// In the monomial coordinates used by TensorElement the contraction operator
// has integer matrix entries and the closed-form iterate has integer
// coefficients, so kernel dimensions and operator identities can be decided
// exactly over the rationals; no square roots are needed.  Only the
// real-coefficient case is implemented because every identity checked here
// has real (in fact integer) inputs.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ehm::exact {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

Int binom_exact(int n, int p);

// Rational tensor with the same (p, q) coefficient layout as TensorElement.
struct RatTensor {
  int n = 0;
  std::vector<Rat> c;  // (n+1)^2, row-major

  RatTensor() = default;
  explicit RatTensor(int n_) : n(n_), c(static_cast<size_t>((n_ + 1) * (n_ + 1))) {}
  Rat& at(int p, int q) { return c[static_cast<size_t>(p) * (n + 1) + q]; }
  const Rat& at(int p, int q) const {
    return c[static_cast<size_t>(p) * (n + 1) + q];
  }
};

bool is_zero(const RatTensor& t);
bool equal(const RatTensor& a, const RatTensor& b);

// Symmetrized monomial pair E_{p,q} + E_{q,p} at level n.
RatTensor symmetrized_monomial(int n, int p, int q);

// One application of the contraction (level n -> n-1).
RatTensor contract(const RatTensor& t);

// 2r applications of the contraction.
RatTensor contract_power_iterated(const RatTensor& t, int r);

// Closed-form expression for the 2r-fold contraction of a symmetrized
// monomial pair: a signed binomial sum over shifted exponent pairs.
RatTensor contract_power_closed(int n, int p, int q, int r);

// Exact dimension of the kernel of the contraction at level n
// (rank over Q of the integer contraction matrix).
int contraction_kernel_dim(int n);

}  // namespace ehm::exact
