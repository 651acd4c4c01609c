#include "ehm/irrep.hpp"

#include <stdexcept>
#include <vector>

#include "ehm/su2.hpp"

namespace ehm {

long long binom_ll(int n, int p) {
  if (n < 0 || p < 0 || p > n) return 0;
  p = std::min(p, n - p);
  long long acc = 1;
  for (int i = 1; i <= p; ++i) {
    acc = acc * (n - p + i) / i;  // exact at every step (product of i consecutive integers)
  }
  return acc;
}

Eigen::VectorXd gram(int n) {
  if (n < 0) throw std::invalid_argument("gram: negative representation label");
  Eigen::VectorXd g(n + 1);
  for (int p = 0; p <= n; ++p) g[p] = static_cast<double>(binom_ll(n, p));
  return g;
}

Eigen::VectorXd gram_sqrt(int n) {
  return gram(n).cwiseSqrt();
}

IrrepVector weight_vector(int n, int w) {
  if (n < 0) throw std::invalid_argument("weight_vector: negative label");
  if (w < -n || w > n || ((n - w) % 2) != 0)
    throw std::invalid_argument("weight_vector: weight out of range or of wrong parity");
  const int p = (n - w) / 2;
  IrrepVector v;
  v.n = n;
  v.coeffs = Eigen::VectorXcd::Zero(n + 1);
  v.coeffs[p] = 1.0 / std::sqrt(static_cast<double>(binom_ll(n, p)));
  return v;
}

cd inner(const IrrepVector& v, const IrrepVector& w) {
  if (v.n != w.n) throw std::invalid_argument("inner: mismatched labels");
  cd acc(0, 0);
  for (int p = 0; p <= v.n; ++p)
    acc += static_cast<double>(binom_ll(v.n, p)) * v.coeffs[p] * std::conj(w.coeffs[p]);
  return acc;
}

double norm(const IrrepVector& v) {
  return std::sqrt(std::max(0.0, inner(v, v).real()));
}

Eigen::VectorXcd unitary_coords(const IrrepVector& v) {
  return gram_sqrt(v.n).asDiagonal() * v.coeffs;
}

IrrepVector from_unitary_coords(int n, const Eigen::VectorXcd& x) {
  if (x.size() != n + 1)
    throw std::invalid_argument("from_unitary_coords: wrong length");
  IrrepVector v;
  v.n = n;
  v.coeffs = gram_sqrt(n).cwiseInverse().asDiagonal() * x;
  return v;
}

Eigen::MatrixXcd rho_polynomial(int n, const Eigen::Matrix2cd& g) {
  // Substitute e1 -> a e1 + c e2, e2 -> b e1 + d e2 in e1^{n-p} e2^p and
  // expand; column p collects the polynomial coefficients of the image.
  const cd a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  // Precompute powers to keep the inner loop cheap.
  std::vector<cd> pa(n + 1), pb(n + 1), pc(n + 1), pd(n + 1);
  pa[0] = pb[0] = pc[0] = pd[0] = cd(1, 0);
  for (int i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * a;
    pb[i] = pb[i - 1] * b;
    pc[i] = pc[i - 1] * c;
    pd[i] = pd[i - 1] * d;
  }
  for (int p = 0; p <= n; ++p) {
    for (int i = 0; i <= n - p; ++i) {
      const cd left = static_cast<double>(binom_ll(n - p, i)) * pa[n - p - i] * pc[i];
      for (int j = 0; j <= p; ++j) {
        const cd coef =
            left * static_cast<double>(binom_ll(p, j)) * pb[p - j] * pd[j];
        A(i + j, p) += coef;
      }
    }
  }
  return A;
}

Eigen::MatrixXcd drho_polynomial(int n, const Eigen::Matrix2cd& X) {
  // Derivation action on e1^{n-p} e2^p.
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) {
    A(p, p) += static_cast<double>(n - p) * X(0, 0) + static_cast<double>(p) * X(1, 1);
    if (p + 1 <= n) A(p + 1, p) += static_cast<double>(n - p) * X(1, 0);
    if (p - 1 >= 0) A(p - 1, p) += static_cast<double>(p) * X(0, 1);
  }
  return A;
}

namespace {

// Conjugation taking a polynomial-coefficient action matrix to orthonormal
// coordinates: x = S^{-1} a with S = diag(sqrt(binom)) on polynomial
// coefficients a, hence A_u = S^{-1} A_poly S.
Eigen::MatrixXcd poly_to_unitary(int n, const Eigen::MatrixXcd& A) {
  const Eigen::VectorXd s = gram_sqrt(n);
  return s.cwiseInverse().asDiagonal() * A * s.asDiagonal();
}

// Gram-basis coefficients relate to polynomial coefficients by a = G t,
// so A_gram = G^{-1} A_poly G.
Eigen::MatrixXcd poly_to_gram(int n, const Eigen::MatrixXcd& A) {
  const Eigen::VectorXd g = gram(n);
  return g.cwiseInverse().asDiagonal() * A * g.asDiagonal();
}

}  // namespace

Eigen::MatrixXcd rho_unitary(int n, const Eigen::Matrix2cd& g) {
  return poly_to_unitary(n, rho_polynomial(n, g));
}

Eigen::MatrixXcd drho_unitary(int n, const Eigen::Matrix2cd& X) {
  return poly_to_unitary(n, drho_polynomial(n, X));
}

IrrepVector group_action(const Eigen::Matrix2cd& g, const IrrepVector& v) {
  if (!is_group_element(g))
    throw std::invalid_argument("group_action: matrix is not in SU(2)");
  IrrepVector out;
  out.n = v.n;
  out.coeffs = poly_to_gram(v.n, rho_polynomial(v.n, g)) * v.coeffs;
  return out;
}

IrrepVector algebra_action(const Eigen::Matrix2cd& X, const IrrepVector& v) {
  if (!is_algebra_element(X))
    throw std::invalid_argument("algebra_action: matrix is not in su(2)");
  IrrepVector out;
  out.n = v.n;
  out.coeffs = poly_to_gram(v.n, drho_polynomial(v.n, X)) * v.coeffs;
  return out;
}

IrrepVector sigma(const IrrepVector& v) {
  // In orthonormal coordinates: (sigma x)_{n-p} = (-1)^p conj(x_p).
  const int n = v.n;
  const Eigen::VectorXcd x = unitary_coords(v);
  Eigen::VectorXcd y(n + 1);
  for (int p = 0; p <= n; ++p)
    y[n - p] = ((p % 2) ? -1.0 : 1.0) * std::conj(x[p]);
  return from_unitary_coords(n, y);
}

Eigen::MatrixXcd casimir_unitary(int n) {
  const Eigen::Matrix2cd basis[3] = {su2_X1(), su2_X2(), su2_X3()};
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (const auto& X : basis) {
    const Eigen::MatrixXcd D = drho_unitary(n, X);
    acc -= D * D;
  }
  return acc;
}

IrrepVector casimir_apply(const IrrepVector& v) {
  return from_unitary_coords(
      v.n, casimir_unitary(v.n) * unitary_coords(v));
}

double casimir_eigenvalue(int n) {
  return static_cast<double>(n) * static_cast<double>(n + 2);
}

}  // namespace ehm
