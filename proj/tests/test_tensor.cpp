#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ehm/irrep.hpp"
#include "ehm/realify.hpp"
#include "ehm/rng.hpp"
#include "ehm/sym_endo.hpp"
#include "ehm/tensor.hpp"

using namespace ehm;
using doctest::Approx;

namespace {

IrrepVector random_vector(int n, Rng& rng) {
  IrrepVector v;
  v.n = n;
  v.coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) v.coeffs[i] = cd(rng.gauss(), rng.gauss());
  return v;
}

TensorElement random_tensor(int n, Rng& rng) {
  TensorElement t;
  t.n = n;
  t.coeffs.resize(n + 1, n + 1);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) t.coeffs(p, q) = cd(rng.gauss(), rng.gauss());
  return t;
}

}  // namespace

TEST_CASE("pure tensor inner products factor") {
  Rng rng(53);
  const int n = 3;
  const IrrepVector a = random_vector(n, rng), b = random_vector(n, rng);
  const IrrepVector c = random_vector(n, rng), d = random_vector(n, rng);
  const cd lhs = inner(tensor_of(a, b), tensor_of(c, d));
  const cd rhs = inner(a, c) * inner(b, d);
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  CHECK(norm(tensor_of(a, b)) == Approx(norm(a) * norm(b)));
}

TEST_CASE("tensor unitary coordinates are an isometry with inverse") {
  Rng rng(59);
  for (int n : {1, 2, 4}) {
    const TensorElement t = random_tensor(n, rng);
    const Eigen::VectorXcd v = vec_unitary(t);
    CHECK(v.norm() == Approx(norm(t)));
    const TensorElement back = from_vec_unitary(n, v);
    CHECK((back.coeffs - t.coeffs).norm() < 1e-12);
  }
}

TEST_CASE("isotypic labels enumerate the Clebsch-Gordan summands") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<int> labels = isotypic_labels(n);
    REQUIRE(static_cast<int>(labels.size()) == n + 1);
    int total = 0;
    for (int r = 0; r <= n; ++r) {
      CHECK(labels[r] == 2 * n - 2 * r);
      const int rk = isotypic_rank(n, labels[r]);
      CHECK(rk == labels[r] + 1);
      total += rk;
    }
    CHECK(total == (n + 1) * (n + 1));
  }
}

TEST_CASE("isotypic projectors are an orthogonal resolution of the identity") {
  for (int n : {2, 3, 4}) {
    const int NN = (n + 1) * (n + 1);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(NN, NN);
    const std::vector<int> labels = isotypic_labels(n);
    for (size_t i = 0; i < labels.size(); ++i) {
      const Eigen::MatrixXcd& P = isotypic_projector_matrix(n, labels[i]);
      CHECK((P - P.adjoint()).norm() < 1e-10);
      CHECK((P * P - P).norm() < 1e-10);
      for (size_t j = i + 1; j < labels.size(); ++j)
        CHECK((P * isotypic_projector_matrix(n, labels[j])).norm() < 1e-9);
      sum += P;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(NN, NN)).norm() < 1e-9);
  }
}

TEST_CASE("isotypic components are Casimir eigenspaces") {
  Rng rng(61);
  for (int n : {2, 4}) {
    const TensorElement t = random_tensor(n, rng);
    const Eigen::MatrixXcd& cas = casimir_tensor_unitary(n);
    TensorElement recon;
    recon.n = n;
    recon.coeffs = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int m : isotypic_labels(n)) {
      const TensorElement part = isotypic_project(t, m);
      const Eigen::VectorXcd v = vec_unitary(part);
      CHECK((cas * v - static_cast<double>(m) * (m + 2) * v).norm() <
            1e-8 * (1.0 + v.norm()));
      recon.coeffs += part.coeffs;
    }
    CHECK((recon.coeffs - t.coeffs).norm() < 1e-9 * t.coeffs.norm());
  }
}

TEST_CASE("pair endomorphisms are self-adjoint and complex-antilinear") {
  Rng rng(11);
  const int n = 3;
  const IrrepVector a = random_vector(n, rng), b = random_vector(n, rng);
  const SymEndo E = endo_from_pair(a, b);
  CHECK(is_gram_self_adjoint(E, 1e-9));
  CHECK(j_commuting_fraction(to_orthonormal(E)) < 1e-12);
}

TEST_CASE("endomorphism-tensor identification is bijective with fixed scaling") {
  Rng rng(11);
  const int n = 3;
  const IrrepVector a = random_vector(n, rng), b = random_vector(n, rng);
  const SymEndo E = endo_from_pair(a, b);
  const TensorElement t = endo_to_tensor(E);
  const TensorElement ts = tensor_of(a, b);
  TensorElement sym;
  sym.n = n;
  sym.coeffs = ts.coeffs + ts.coeffs.transpose().eval();
  CHECK((t.coeffs - sym.coeffs).norm() < 1e-9);
  const SymEndo back = endo_from_tensor(t);
  CHECK((back.M - E.M).norm() < 1e-9);
  CHECK(hs_norm(E) == Approx(std::sqrt(2.0) * norm(t)));
}

TEST_CASE("endomorphism-tensor identification is equivariant") {
  Rng rng(67);
  const int n = 4;
  const IrrepVector a = random_vector(n, rng), b = random_vector(n, rng);
  const Eigen::Matrix2cd g = rng.haar_su2();
  const Eigen::MatrixXd R = realify_op(rho_unitary(n, g));
  const Eigen::MatrixXd lhs =
      to_orthonormal(endo_from_pair(group_action(g, a), group_action(g, b)));
  const Eigen::MatrixXd rhs = R * to_orthonormal(endo_from_pair(a, b)) * R.transpose();
  CHECK((lhs - rhs).norm() < 1e-10 * rhs.norm());
}

TEST_CASE("J-split separates commuting and anticommuting parts") {
  Rng rng(71);
  const int N = 3;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int i = 0; i < 2 * N; ++i)
    for (int j = i; j < 2 * N; ++j) X(i, j) = X(j, i) = rng.gauss();
  const SymEndo S = sym_endo_from_orthonormal(X);
  const auto [com, anti] = split_J(S);
  CHECK((com.M + anti.M - S.M).norm() < 1e-12 * S.M.norm());
  CHECK(j_commuting_fraction(to_orthonormal(anti)) < 1e-12);
  const Eigen::MatrixXd J = Jmat(N);
  const Eigen::MatrixXd C = to_orthonormal(com);
  CHECK((C * J - J * C).norm() < 1e-11);
}

TEST_CASE("operator norm is bounded by the Hilbert-Schmidt norm") {
  Rng rng(73);
  const int N = 4;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int i = 0; i < 2 * N; ++i)
    for (int j = i; j < 2 * N; ++j) X(i, j) = X(j, i) = rng.gauss();
  const SymEndo S = sym_endo_from_orthonormal(X);
  CHECK(op_norm(S) <= hs_norm(S) + 1e-12);
  CHECK(op_norm(S) > 0.0);
  CHECK(hs_inner(S, S) == Approx(hs_norm(S) * hs_norm(S)));
}
