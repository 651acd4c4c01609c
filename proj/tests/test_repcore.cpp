#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ehm/irrep.hpp"
#include "ehm/realify.hpp"
#include "ehm/rng.hpp"
#include "ehm/su2.hpp"

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

}  // namespace

TEST_CASE("binomial coefficients and Gram weights") {
  CHECK(binom_ll(0, 0) == 1);
  CHECK(binom_ll(5, 2) == 10);
  CHECK(binom_ll(8, 4) == 70);
  for (int n = 1; n <= 8; ++n) {
    const Eigen::VectorXd g = gram(n);
    const Eigen::VectorXd s = gram_sqrt(n);
    REQUIRE(g.size() == n + 1);
    for (int p = 0; p <= n; ++p) {
      CHECK(g[p] == Approx(static_cast<double>(binom_ll(n, p))));
      CHECK(s[p] * s[p] == Approx(g[p]));
    }
  }
}

TEST_CASE("weight vectors are an orthonormal family") {
  for (int n : {1, 2, 4, 5}) {
    for (int p = 0; p <= n; ++p) {
      const IrrepVector u = weight_vector(n, n - 2 * p);
      CHECK(norm(u) == Approx(1.0));
      for (int q = p + 1; q <= n; ++q)
        CHECK(std::abs(inner(u, weight_vector(n, n - 2 * q))) < 1e-14);
    }
  }
}

TEST_CASE("unitary coordinates are an isometry with inverse") {
  Rng rng(101);
  for (int n : {1, 3, 6}) {
    const IrrepVector v = random_vector(n, rng);
    const Eigen::VectorXcd x = unitary_coords(v);
    CHECK(x.norm() == Approx(norm(v)));
    const IrrepVector back = from_unitary_coords(n, x);
    CHECK((back.coeffs - v.coeffs).norm() < 1e-12);
  }
}

TEST_CASE("rho_unitary is a unitary homomorphism") {
  Rng rng(7);
  for (int n : {1, 2, 3, 5}) {
    const Eigen::Matrix2cd g = rng.haar_su2();
    const Eigen::Matrix2cd h = rng.haar_su2();
    const Eigen::MatrixXcd R = rho_unitary(n, g);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n + 1, n + 1);
    CHECK((R.adjoint() * R - I).norm() < 1e-12);
    CHECK((rho_unitary(n, g * h) - R * rho_unitary(n, h)).norm() < 1e-12);
    CHECK((rho_unitary(n, Eigen::Matrix2cd::Identity()) - I).norm() < 1e-13);
  }
  // The level-1 representation is the defining one.
  const Eigen::Matrix2cd g = Rng(17).haar_su2();
  CHECK((rho_unitary(1, g) - g).norm() < 1e-13);
}

TEST_CASE("group and algebra actions agree with the matrix representation") {
  Rng rng(19);
  for (int n : {2, 4}) {
    const IrrepVector v = random_vector(n, rng);
    const Eigen::Matrix2cd g = rng.haar_su2();
    CHECK((unitary_coords(group_action(g, v)) -
           rho_unitary(n, g) * unitary_coords(v))
              .norm() < 1e-11);
    for (const auto& X : {su2_X1(), su2_X2(), su2_X3()})
      CHECK((unitary_coords(algebra_action(X, v)) -
             drho_unitary(n, X) * unitary_coords(v))
                .norm() < 1e-11);
  }
}

TEST_CASE("drho_unitary is the Lie algebra representation") {
  Rng rng(23);
  for (int n : {1, 2, 3, 4}) {
    // Anti-hermitian images.
    for (const auto& X : {su2_X1(), su2_X2(), su2_X3()}) {
      const Eigen::MatrixXcd D = drho_unitary(n, X);
      CHECK((D + D.adjoint()).norm() < 1e-12);
    }
    // Commutator compatibility on random algebra elements.
    const double a1 = rng.gauss(), a2 = rng.gauss(), a3 = rng.gauss();
    const double b1 = rng.gauss(), b2 = rng.gauss(), b3 = rng.gauss();
    const Eigen::Matrix2cd X = a1 * su2_X1() + a2 * su2_X2() + a3 * su2_X3();
    const Eigen::Matrix2cd Y = b1 * su2_X1() + b2 * su2_X2() + b3 * su2_X3();
    const Eigen::MatrixXcd lhs = drho_unitary(n, X) * drho_unitary(n, Y) -
                                 drho_unitary(n, Y) * drho_unitary(n, X);
    CHECK((lhs - drho_unitary(n, X * Y - Y * X)).norm() < 1e-11);
  }
}

TEST_CASE("drho_unitary differentiates the group representation") {
  // Regression guard: dP construction depends on d/dx rho(g(z)) equaling
  // rho(g) drho(xi_x) exactly, at every level.
  const cd z(0.37, 0.29);
  const double h = 1e-6;
  for (int chart : {0, 1}) {
    const Eigen::Matrix2cd g = local_section(z, chart);
    const auto [xix, xiy] = maurer_cartan_fields(z, chart);
    for (int n : {1, 2, 3, 4, 5}) {
      const auto at = [&](cd w) { return rho_unitary(n, local_section(w, chart)); };
      const Eigen::MatrixXcd fdx = (at(z + h) - at(z - h)) / (2.0 * h);
      const Eigen::MatrixXcd fdy = (at(z + cd(0, h)) - at(z - cd(0, h))) / (2.0 * h);
      CHECK((fdx - rho_unitary(n, g) * drho_unitary(n, xix)).norm() < 1e-8);
      CHECK((fdy - rho_unitary(n, g) * drho_unitary(n, xiy)).norm() < 1e-8);
    }
  }
}

TEST_CASE("Casimir acts as the scalar n(n+2)") {
  Rng rng(29);
  for (int n = 1; n <= 6; ++n) {
    CHECK(casimir_eigenvalue(n) == Approx(static_cast<double>(n) * (n + 2)));
    const Eigen::MatrixXcd cas = casimir_unitary(n);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n + 1, n + 1);
    CHECK((cas - casimir_eigenvalue(n) * I).norm() < 1e-10);
    const IrrepVector v = random_vector(n, rng);
    CHECK((casimir_apply(v).coeffs - casimir_eigenvalue(n) * v.coeffs).norm() <
          1e-9 * v.coeffs.norm());
  }
}

TEST_CASE("sigma is the equivariant antilinear structure map") {
  Rng rng(31);
  for (int n : {1, 2, 3, 4, 6}) {
    // Action on the weight family.
    for (int p = 0; p <= n; ++p) {
      const IrrepVector img = sigma(weight_vector(n, n - 2 * p));
      const double sgn = (p % 2 == 0) ? 1.0 : -1.0;
      const IrrepVector expect = weight_vector(n, -(n - 2 * p));
      CHECK((img.coeffs - sgn * expect.coeffs).norm() < 1e-13);
    }
    const IrrepVector v = random_vector(n, rng);
    // Antilinearity.
    IrrepVector iv = v;
    iv.coeffs *= cd(0, 1);
    CHECK((sigma(iv).coeffs + cd(0, 1) * sigma(v).coeffs).norm() < 1e-13);
    // sigma^2 = (-1)^n.
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK((sigma(sigma(v)).coeffs - sgn * v.coeffs).norm() < 1e-12);
    // Commutes with the group action.
    const Eigen::Matrix2cd g = rng.haar_su2();
    CHECK((sigma(group_action(g, v)).coeffs -
           group_action(g, sigma(v)).coeffs)
              .norm() < 1e-11);
  }
}

TEST_CASE("local sections live in SU(2) and hit the right point") {
  for (const cd z : {cd(0, 0), cd(0.37, 0.29), cd(-1.4, 2.2)}) {
    const Eigen::Matrix2cd g0 = local_section(z, 0);
    CHECK(is_group_element(g0));
    CHECK(std::abs(mobius(g0, cd(0, 0)) - z) < 1e-13);
    if (std::abs(z) > 1e-12) {
      const Eigen::Matrix2cd g1 = local_section(z, 1);
      CHECK(is_group_element(g1));
      CHECK(std::abs(mobius(g1, cd(0, 0)) - 1.0 / z) < 1e-12);
    }
  }
}

TEST_CASE("Maurer-Cartan fields match numerical logarithmic derivatives") {
  const double h = 1e-6;
  for (int chart : {0, 1}) {
    for (const cd z : {cd(0.37, 0.29), cd(-0.8, 0.55)}) {
      const Eigen::Matrix2cd gi = local_section(z, chart).adjoint();
      const auto d = [&](cd dir) -> Eigen::Matrix2cd {
        const Eigen::Matrix2cd d1 =
            (local_section(z + dir * h, chart) - local_section(z - dir * h, chart)) /
            (2.0 * h);
        const Eigen::Matrix2cd d2 = (local_section(z + 2.0 * dir * h, chart) -
                                     local_section(z - 2.0 * dir * h, chart)) /
                                    (4.0 * h);
        return (4.0 * d1 - d2) / 3.0;
      };
      const auto [xix, xiy] = maurer_cartan_fields(z, chart);
      CHECK((xix - gi * d(cd(1, 0))).norm() < 1e-9);
      CHECK((xiy - gi * d(cd(0, 1))).norm() < 1e-9);
      CHECK(is_algebra_element(xix, 1e-12));
      CHECK(is_algebra_element(xiy, 1e-12));
    }
  }
}

TEST_CASE("Maurer-Cartan derivatives match finite differences") {
  const double h = 1e-6;
  for (int chart : {0, 1}) {
    const cd z(0.42, -0.33);
    const MaurerCartanDerivs d = maurer_cartan_derivs(z, chart);
    const auto fields = [&](cd w) { return maurer_cartan_fields(w, chart); };
    const auto [xp, yp] = fields(z + h);
    const auto [xm, ym] = fields(z - h);
    const auto [xpi, ypi] = fields(z + cd(0, h));
    const auto [xmi, ymi] = fields(z - cd(0, h));
    CHECK((d.dxx_dx - (xp - xm) / (2.0 * h)).norm() < 1e-9);
    CHECK((d.dxy_dx - (yp - ym) / (2.0 * h)).norm() < 1e-9);
    CHECK((d.dxx_dy - (xpi - xmi) / (2.0 * h)).norm() < 1e-9);
    CHECK((d.dxy_dy - (ypi - ymi) / (2.0 * h)).norm() < 1e-9);
  }
}

TEST_CASE("realification intertwines complex structure and products") {
  Rng rng(37);
  const int N = 4;
  Eigen::MatrixXcd A(N, N), B(N, N);
  Eigen::VectorXcd x(N);
  for (int i = 0; i < N; ++i) {
    x[i] = cd(rng.gauss(), rng.gauss());
    for (int j = 0; j < N; ++j) {
      A(i, j) = cd(rng.gauss(), rng.gauss());
      B(i, j) = cd(rng.gauss(), rng.gauss());
    }
  }
  const Eigen::MatrixXd J = Jmat(N);
  CHECK((J * J + Eigen::MatrixXd::Identity(2 * N, 2 * N)).norm() == Approx(0.0));
  CHECK((realify_op(A * B) - realify_op(A) * realify_op(B)).norm() < 1e-12);
  CHECK((realify_op(A) * J - J * realify_op(A)).norm() < 1e-13);
  CHECK((realify_op(A) * realify_vec(x) - realify_vec(A * x)).norm() < 1e-12);
  CHECK((complexify_vec(realify_vec(x)) - x).norm() == Approx(0.0));
  // Antilinear lifts anticommute with J; symmetric iff the matrix is
  // complex-symmetric.
  const Eigen::MatrixXd M = antilinear_real(A);
  CHECK((M * J + J * M).norm() < 1e-13);
  const Eigen::MatrixXd Ms = antilinear_real(Eigen::MatrixXcd(A + A.transpose()));
  CHECK((Ms - Ms.transpose()).norm() < 1e-13);
}

TEST_CASE("orthonormal realified coordinates preserve the invariant norm") {
  Rng rng(41);
  for (int n : {2, 5}) {
    IrrepVector v;
    v.n = n;
    v.coeffs.resize(n + 1);
    for (int i = 0; i <= n; ++i) v.coeffs[i] = cd(rng.gauss(), rng.gauss());
    const RealifiedVector r = realify(v);
    CHECK(real_to_orthonormal(r).norm() == Approx(norm(v)));
    const IrrepVector back = complexify(real_from_orthonormal(n, real_to_orthonormal(r)));
    CHECK((back.coeffs - v.coeffs).norm() < 1e-12);
  }
}
