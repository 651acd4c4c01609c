#include "ehm/sym_endo.hpp"

#include <stdexcept>

namespace ehm {

namespace {

Eigen::VectorXd sr(int n) { return realified_gram_sqrt(n); }

}  // namespace

SymEndo sym_endo_from_orthonormal(const Eigen::MatrixXd& X) {
  if (X.rows() != X.cols() || X.rows() % 2 != 0)
    throw std::invalid_argument("sym_endo_from_orthonormal: bad shape");
  const int N = static_cast<int>(X.rows()) / 2;
  const Eigen::VectorXd s = sr(N - 1);
  SymEndo out;
  out.N = N;
  out.M = s.cwiseInverse().asDiagonal() * X * s.asDiagonal();
  return out;
}

Eigen::MatrixXd to_orthonormal(const SymEndo& S) {
  const Eigen::VectorXd s = sr(S.N - 1);
  return s.asDiagonal() * S.M * s.cwiseInverse().asDiagonal();
}

SymEndo sym_endo_zero(int n) {
  SymEndo out;
  out.N = n + 1;
  out.M = Eigen::MatrixXd::Zero(2 * (n + 1), 2 * (n + 1));
  return out;
}

bool is_gram_self_adjoint(const SymEndo& S, double tol) {
  const Eigen::MatrixXd X = to_orthonormal(S);
  const double scale = std::max(1.0, X.cwiseAbs().maxCoeff());
  return (X - X.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

double hs_inner(const SymEndo& a, const SymEndo& b) {
  if (a.N != b.N) throw std::invalid_argument("hs_inner: mismatched sizes");
  // The trace pairing is similarity-invariant, so the Gram-basis matrices
  // can be multiplied directly.
  return (a.M * b.M).trace();
}

double hs_norm(const SymEndo& a) {
  return std::sqrt(std::max(0.0, hs_inner(a, a)));
}

double op_norm(const SymEndo& a) {
  const Eigen::MatrixXd X = to_orthonormal(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (X + X.transpose()));
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::pair<SymEndo, SymEndo> split_J(const SymEndo& S) {
  const Eigen::MatrixXd X = to_orthonormal(S);
  const Eigen::MatrixXd J = Jmat(S.N);
  const Eigen::MatrixXd JXJ = J * X * J;
  const Eigen::MatrixXd Xc = 0.5 * (X - JXJ);  // commutes with J
  const Eigen::MatrixXd Xa = 0.5 * (X + JXJ);  // anticommutes with J
  return {sym_endo_from_orthonormal(Xc), sym_endo_from_orthonormal(Xa)};
}

double j_commuting_fraction(const Eigen::MatrixXd& X) {
  const int N = static_cast<int>(X.rows()) / 2;
  const Eigen::MatrixXd J = Jmat(N);
  const double total = X.norm();
  if (total < 1e-300) return 0.0;
  return 0.5 * (X - J * X * J).norm() / total;
}

namespace {

// Orthonormal-coordinate identification between complex symmetric tensor
// coefficients and antilinear maps v -> M conj(v).
Eigen::MatrixXcd antilinear_from_tensor_u(const Eigen::MatrixXcd& c) {
  const int n = static_cast<int>(c.rows()) - 1;
  Eigen::MatrixXcd M(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      M(i, j) = std::conj(c(n - i, n - j)) *
                (((n - i - j) % 2 + 2) % 2 ? -1.0 : 1.0);
  return M;
}

Eigen::MatrixXcd tensor_from_antilinear_u(const Eigen::MatrixXcd& M) {
  const int n = static_cast<int>(M.rows()) - 1;
  Eigen::MatrixXcd c(n + 1, n + 1);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      c(a, b) = std::conj(M(n - a, n - b)) *
                (((a + b - n) % 2 + 2) % 2 ? -1.0 : 1.0);
  return c;
}

Eigen::MatrixXcd tensor_unitary_matrix(const TensorElement& t) {
  const Eigen::VectorXd s = gram_sqrt(t.n);
  return s.asDiagonal() * t.coeffs * s.asDiagonal();
}

TensorElement tensor_from_unitary_matrix(int n, const Eigen::MatrixXcd& cu) {
  const Eigen::VectorXd s = gram_sqrt(n);
  TensorElement t;
  t.n = n;
  t.coeffs = s.cwiseInverse().asDiagonal() * cu * s.cwiseInverse().asDiagonal();
  return t;
}

}  // namespace

SymEndo endo_from_pair(const IrrepVector& a, const IrrepVector& b) {
  if (a.n != b.n) throw std::invalid_argument("endo_from_pair: mismatched labels");
  const Eigen::VectorXcd xu = unitary_coords(a);
  const Eigen::VectorXcd yu = unitary_coords(b);
  const Eigen::MatrixXcd c =
      xu * yu.transpose() + yu * xu.transpose();  // symmetrization, weight 1
  return sym_endo_from_orthonormal(antilinear_real(antilinear_from_tensor_u(c)));
}

TensorElement endo_to_tensor(const SymEndo& S) {
  const Eigen::MatrixXd X = to_orthonormal(S);
  if (j_commuting_fraction(X) > 1e-8)
    throw std::domain_error(
        "endo_to_tensor: input has a J-commuting component");
  const int N = S.N;
  const Eigen::MatrixXcd M =
      X.topLeftCorner(N, N).cast<cd>() +
      cd(0, 1) * X.topRightCorner(N, N).cast<cd>();
  return tensor_from_unitary_matrix(N - 1, tensor_from_antilinear_u(M));
}

SymEndo endo_from_tensor(const TensorElement& t) {
  const Eigen::MatrixXcd cu = tensor_unitary_matrix(t);
  return sym_endo_from_orthonormal(antilinear_real(antilinear_from_tensor_u(cu)));
}

}  // namespace ehm
