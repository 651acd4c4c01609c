#include "ehm/tensor.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "ehm/su2.hpp"

namespace ehm {

TensorElement tensor_of(const IrrepVector& v, const IrrepVector& w) {
  if (v.n != w.n) throw std::invalid_argument("tensor_of: mismatched labels");
  TensorElement t;
  t.n = v.n;
  t.coeffs = v.coeffs * w.coeffs.transpose();
  return t;
}

cd inner(const TensorElement& a, const TensorElement& b) {
  if (a.n != b.n) throw std::invalid_argument("inner: mismatched labels");
  const Eigen::VectorXd g = gram(a.n);
  cd acc(0, 0);
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q)
      acc += g[p] * g[q] * a.coeffs(p, q) * std::conj(b.coeffs(p, q));
  return acc;
}

double norm(const TensorElement& a) {
  return std::sqrt(std::max(0.0, inner(a, a).real()));
}

Eigen::VectorXcd vec_unitary(const TensorElement& t) {
  const int N = t.n + 1;
  const Eigen::VectorXd s = gram_sqrt(t.n);
  Eigen::VectorXcd v(N * N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) v[p * N + q] = s[p] * s[q] * t.coeffs(p, q);
  return v;
}

TensorElement from_vec_unitary(int n, const Eigen::VectorXcd& v) {
  const int N = n + 1;
  if (v.size() != N * N)
    throw std::invalid_argument("from_vec_unitary: wrong length");
  const Eigen::VectorXd s = gram_sqrt(n);
  TensorElement t;
  t.n = n;
  t.coeffs.resize(N, N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) t.coeffs(p, q) = v[p * N + q] / (s[p] * s[q]);
  return t;
}

std::vector<int> isotypic_labels(int n) {
  std::vector<int> labels;
  for (int r = 0; r <= n; ++r) labels.push_back(2 * n - 2 * r);
  return labels;
}

namespace {

std::mutex g_cache_mutex;

Eigen::MatrixXcd build_casimir_tensor(int n) {
  const int N = n + 1;
  const Eigen::Matrix2cd basis[3] = {su2_X1(), su2_X2(), su2_X3()};
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(N, N);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N * N, N * N);
  for (const auto& X : basis) {
    const Eigen::MatrixXcd D = drho_unitary(n, X);
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(N * N, N * N);
    // L = D (x) I + I (x) D with row-major flattening (index p*N+q).
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q)
        for (int r = 0; r < N; ++r) {
          L(p * N + q, r * N + q) += D(p, r);
          L(p * N + q, p * N + r) += D(q, r);
        }
    acc -= L * L;
  }
  return acc;
}

}  // namespace

const Eigen::MatrixXcd& casimir_tensor_unitary(int n) {
  static std::map<int, Eigen::MatrixXcd> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, build_casimir_tensor(n)).first;
  return it->second;
}

const Eigen::MatrixXcd& isotypic_projector_matrix(int n, int m) {
  bool valid = false;
  for (int label : isotypic_labels(n)) valid = valid || (label == m);
  if (!valid)
    throw std::invalid_argument("isotypic_projector_matrix: invalid label");
  static std::map<std::pair<int, int>, Eigen::MatrixXcd> cache;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  // Lagrange interpolation in the Casimir: the projector onto the label-m
  // eigenspace is prod_{m' != m} (Omega - lam(m')) / (lam(m) - lam(m')).
  const Eigen::MatrixXcd& Om = casimir_tensor_unitary(n);
  const int NN = (n + 1) * (n + 1);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(NN, NN);
  for (int label : isotypic_labels(n)) {
    if (label == m) continue;
    const double lm = casimir_eigenvalue(m);
    const double ll = casimir_eigenvalue(label);
    P = P * (Om - ll * Eigen::MatrixXcd::Identity(NN, NN)) / (lm - ll);
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache.emplace(std::make_pair(n, m), std::move(P)).first->second;
}

TensorElement isotypic_project(const TensorElement& t, int m) {
  return from_vec_unitary(
      t.n, isotypic_projector_matrix(t.n, m) * vec_unitary(t));
}

int isotypic_rank(int n, int m) {
  const double tr = isotypic_projector_matrix(n, m).trace().real();
  return static_cast<int>(std::lround(tr));
}

}  // namespace ehm
