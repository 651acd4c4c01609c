#include "ehm/contraction.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ehm {

TensorElement contract(const TensorElement& t) {
  const int n = t.n;
  if (n < 1) throw std::invalid_argument("contract: level must be >= 1");
  TensorElement out;
  out.n = n - 1;
  out.coeffs = Eigen::MatrixXcd::Zero(n, n);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const cd c = t.coeffs(p, q);
      if (c == cd(0, 0)) continue;
      // E_{p,q} -> E'_{p,q-1} - E'_{p-1,q}, exponents leaving the valid
      // range contribute nothing (same rule as the exact backend).
      if (p <= n - 1 && q - 1 >= 0) out.coeffs(p, q - 1) += c;
      if (p - 1 >= 0 && q <= n - 1) out.coeffs(p - 1, q) -= c;
    }
  }
  return out;
}

TensorElement contract_times(const TensorElement& t, int m) {
  if (m < 0 || m > t.n)
    throw std::invalid_argument("contract_times: count out of range");
  TensorElement out = t;
  for (int i = 0; i < m; ++i) out = contract(out);
  return out;
}

TensorElement contract_power(const TensorElement& t, int r) {
  return contract_times(t, 2 * r);
}

TensorElement contract_power_closed(int n, int p, int q, int r) {
  if (2 * r > n)
    throw std::invalid_argument("contract_power_closed: 2r exceeds level");
  const int m = n - 2 * r;
  TensorElement out;
  out.n = m;
  out.coeffs = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  for (int s = 0; s <= 2 * r; ++s) {
    if (s > n - p || s > q || s < 2 * r - p || s < 2 * r + q - n) continue;
    const double coef =
        ((s % 2) ? -1.0 : 1.0) * static_cast<double>(binom_ll(2 * r, s));
    const int p1 = p + s - 2 * r;
    const int q1 = q - s;
    out.coeffs(p1, q1) += coef;
    out.coeffs(q1, p1) += coef;
  }
  return out;
}

namespace {

// Raw contraction in unitary tensor coordinates (level n -> n-1).
const Eigen::MatrixXcd& contract_matrix_unitary(int n) {
  static std::map<int, Eigen::MatrixXcd> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const int N = n + 1;
  const Eigen::VectorXd s = gram_sqrt(n);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n * n, N * N);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      TensorElement e;
      e.n = n;
      e.coeffs = Eigen::MatrixXcd::Zero(N, N);
      e.coeffs(p, q) = 1.0 / (s[p] * s[q]);  // unit unitary coordinate
      M.col(p * N + q) = vec_unitary(contract(e));
    }
  }
  return cache.emplace(n, std::move(M)).first->second;
}

}  // namespace

const ContractionConstants& contraction_constants(int n) {
  static std::map<int, ContractionConstants> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  if (n < 1)
    throw std::invalid_argument("contraction_constants: level must be >= 1");
  ContractionConstants cc;
  cc.n = n;
  const int N = n + 1;
  for (const int label : isotypic_labels(n)) {
    if (label == 2 * n) continue;  // kernel component
    // Deterministic probe with a nonzero piece in the component.
    Eigen::VectorXcd proj;
    double pn = 0.0;
    for (int shift = 0; shift < 8 && !(pn > 1e-9); ++shift) {
      Eigen::VectorXcd v(N * N);
      for (int j = 0; j < N * N; ++j)
        v[j] = cd(std::sin(j + 1.0 + shift), std::cos(2.0 * j + 1.0 + shift));
      proj = isotypic_projector_matrix(n, label) * v;
      pn = proj.norm();
    }
    if (!(pn > 1e-9))
      throw std::runtime_error("contraction_constants: degenerate probe");
    const double cn = norm(contract(from_vec_unitary(n, proj / pn)));
    cc.scale[label] = 1.0 / cn;
  }
  return cache.emplace(n, std::move(cc)).first->second;
}

const Eigen::MatrixXcd& contract_modified_matrix(int n) {
  static std::map<int, Eigen::MatrixXcd> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Assemble outside the lock: the pieces below take the same caches.
  const ContractionConstants& cc = contraction_constants(n);
  const Eigen::MatrixXcd& C = contract_matrix_unitary(n);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(C.rows(), C.cols());
  for (const auto& [label, scale] : cc.scale)
    M += scale * (C * isotypic_projector_matrix(n, label));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(M)).first->second;
}

TensorElement contract_modified(const TensorElement& t) {
  if (t.n < 1)
    throw std::invalid_argument("contract_modified: level must be >= 1");
  return from_vec_unitary(t.n - 1, contract_modified_matrix(t.n) * vec_unitary(t));
}

TensorElement contract_modified_adjoint(const TensorElement& t) {
  return from_vec_unitary(
      t.n + 1, contract_modified_matrix(t.n + 1).adjoint() * vec_unitary(t));
}

SymEndo correspond(const SymEndo& D, int k, int l, bool down) {
  k = std::abs(k);
  if (l < 0 || (down && l < 1))
    throw std::invalid_argument("correspond: no neighbour at this (k, l)");
  const int n = k + 2 * l;
  if (D.level() != n)
    throw std::invalid_argument("correspond: endomorphism level mismatch");
  const int target = down ? n - 2 : n + 2;

  const double dnorm = op_norm(D);
  if (dnorm < 1e-14) return sym_endo_zero(target);
  if (dnorm >= 1.0)
    throw std::invalid_argument("correspond: operator norm must be < 1");
  if (ambient_residual(moduli_ambient_cached(k, l), D) > 1e-8)
    throw std::invalid_argument(
        "correspond: not an admissible deformation at (k, l)");

  Eigen::VectorXcd v = vec_unitary(endo_to_tensor(D));
  if (down) {
    v = contract_modified_matrix(n) * v;
    v = contract_modified_matrix(n - 1) * v;
  } else {
    v = contract_modified_matrix(n + 1).adjoint() * v;
    v = contract_modified_matrix(n + 2).adjoint() * v;
  }
  SymEndo out = endo_from_tensor(from_vec_unitary(target, v));
  const double onorm = op_norm(out);
  if (!(onorm > 0.0))
    throw std::runtime_error("correspond: image collapsed");
  out.M *= dnorm / onorm;
  return out;
}

}  // namespace ehm
