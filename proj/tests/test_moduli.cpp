#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "ehm/field.hpp"
#include "ehm/moduli.hpp"
#include "ehm/realify.hpp"
#include "ehm/rng.hpp"
#include "ehm/spans.hpp"
#include "ehm/sym_endo.hpp"

using namespace ehm;
using doctest::Approx;

TEST_CASE("zero deformation validates everywhere") {
  for (const auto& [k, l] : {std::pair{1, 0}, {2, 0}, {2, 1}, {3, 1}}) {
    const ModuliPoint pt{k, l, sym_endo_zero(k + 2 * l)};
    const ValidationReport rep = validate(pt);
    CHECK(rep.level_ok);
    CHECK(rep.gram_self_adjoint);
    CHECK(rep.j_anticommuting);
    CHECK(rep.in_ambient);
    CHECK(rep.interior);
    CHECK(rep.ok());
    CHECK(rep.op_norm == Approx(0.0));
  }
}

TEST_CASE("seeded deformations land inside the moduli ball") {
  for (const auto& [k, l] : {std::pair{2, 0}, {3, 0}, {2, 1}}) {
    Rng rng(1000 + k + 10 * l);
    const SymEndo D = random_deformation(k, l, 0.7, rng);
    CHECK(op_norm(D) == Approx(0.7));
    const ValidationReport rep = validate({k, l, D});
    CHECK(rep.ok());
    CHECK(rep.ambient_residual < 1e-10);
    CHECK(rep.j_commuting_fraction < 1e-10);
  }
}

TEST_CASE("deformation sampling rejects a trivial space") {
  Rng rng(3);
  CHECK_THROWS_AS(random_deformation(1, 0, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_deformation(0, 2, 0.5, rng), std::invalid_argument);
}

TEST_CASE("validation flags each failure mode") {
  Rng rng(5);
  const SymEndo D = random_deformation(2, 1, 0.5, rng);

  SUBCASE("level mismatch") {
    const ValidationReport rep = validate({3, 1, D});
    CHECK_FALSE(rep.level_ok);
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("operator norm of one or more is not interior") {
    SymEndo big = D;
    big.M *= 2.4;  // norm 1.2
    const ValidationReport rep = validate({2, 1, big});
    CHECK_FALSE(rep.interior);
    CHECK_FALSE(rep.ok());
    CHECK(rep.op_norm == doctest::Approx(1.2).epsilon(1e-12));
  }
  SUBCASE("commuting directions are outside the ambient space") {
    const int N = 5;
    const SymEndo id =
        sym_endo_from_orthonormal(0.5 * Eigen::MatrixXd::Identity(2 * N, 2 * N));
    const ValidationReport rep = validate({2, 1, id});
    CHECK_FALSE(rep.j_anticommuting);
    CHECK_FALSE(rep.in_ambient);
    CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("the square-root gauge factor squares to id plus the deformation") {
  Rng rng(9);
  const SymEndo D = random_deformation(2, 0, 0.6, rng);
  const Eigen::MatrixXd T = build_T(D);
  const Eigen::MatrixXd S = to_orthonormal(D);
  const int d = static_cast<int>(S.rows());
  CHECK((T - T.transpose()).norm() < 1e-12);
  CHECK((T * T - (Eigen::MatrixXd::Identity(d, d) + S)).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  CHECK(es.eigenvalues().minCoeff() >= 0.0);
}

TEST_CASE("the gauge factor rejects spectra below minus one") {
  Rng rng(13);
  const SymEndo D = random_deformation(2, 0, 1.2, rng);
  CHECK_THROWS_AS(build_T(D), std::domain_error);
  // Exactly at the boundary the factor exists with a kernel.
  const SymEndo B = random_deformation(2, 0, 1.0, rng);
  const Eigen::MatrixXd T = build_T(B);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  CHECK(es.eigenvalues().minCoeff() == Approx(0.0));
}

TEST_CASE("standard fields expose orthonormal moving frames") {
  for (const auto& [k, l] : {std::pair{1, 0}, {2, 0}, {2, 1}}) {
    const ProjectorField f = ProjectorField::standard(k, l);
    const int n = k + 2 * l;
    CHECK(f.level() == n);
    CHECK(f.ambient_dim() == 2 * (n + 1));
    CHECK(f.fiber_rank() == 2);
    const FieldJet j = f.jet(0.37, 0.29, 0);
    CHECK((j.A.transpose() * j.A - Eigen::Matrix2d::Identity()).norm() < 1e-12);
  }
  CHECK_THROWS_AS(ProjectorField::standard(0, 1), std::invalid_argument);
}

TEST_CASE("analytic projector derivatives match finite differences") {
  // Regression: a dangling expression in the projector product rule once
  // corrupted dP for every field whose fiber sat at the weight-ladder edge.
  Rng rng(21);
  std::vector<ProjectorField> fields;
  fields.push_back(ProjectorField::standard(1, 0));
  fields.push_back(ProjectorField::standard(2, 0));
  fields.push_back(ProjectorField::standard(3, 0));
  fields.push_back(ProjectorField::standard(2, 1));
  fields.push_back(ProjectorField::real_standard(1, 0));
  fields.push_back(ProjectorField::f1(1));
  fields.push_back(
      ProjectorField::deformed({2, 0, random_deformation(2, 0, 0.5, rng)}));
  for (size_t i = 0; i < fields.size(); ++i) {
    for (int chart : {0, 1}) {
      const ProjectorPack pp = projector_pack(fields[i], 0.37, 0.29, chart);
      const auto [fdx, fdy] = projector_derivative_fd(fields[i], 0.37, 0.29, chart);
      CAPTURE(i);
      CAPTURE(chart);
      CHECK((pp.dPx - fdx).norm() < 1e-5);
      CHECK((pp.dPy - fdy).norm() < 1e-5);
      // dP anticommutes with P to first order on both sides of the split.
      const int d = static_cast<int>(pp.P.rows());
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
      CHECK((pp.P * pp.dPx * pp.P).norm() < 1e-9);
      CHECK(((I - pp.P) * pp.dPx * (I - pp.P)).norm() < 1e-9);
    }
  }
}

TEST_CASE("deformed field at zero equals the standard field") {
  const ProjectorField fs = ProjectorField::standard(2, 1);
  const ProjectorField fd = ProjectorField::deformed({2, 1, sym_endo_zero(4)});
  for (const cd z : {cd(0.3, -0.2), cd(1.1, 0.8)}) {
    const Eigen::MatrixXd Ps = projector_pack(fs, z.real(), z.imag(), 0).P;
    const Eigen::MatrixXd Pd = projector_pack(fd, z.real(), z.imag(), 0).P;
    CHECK((Ps - Pd).norm() < 1e-12);
  }
}

TEST_CASE("deformed field construction validates its point") {
  const int N = 5;
  const SymEndo id =
      sym_endo_from_orthonormal(0.5 * Eigen::MatrixXd::Identity(2 * N, 2 * N));
  CHECK_THROWS_AS(ProjectorField::deformed({2, 1, id}), std::invalid_argument);
}

TEST_CASE("real-form and padded fields report the reduced ambient size") {
  const ProjectorField rs = ProjectorField::real_standard(1, 0);
  CHECK(rs.level() == 2);
  CHECK(rs.ambient_dim() == 3);
  CHECK(rs.fiber_rank() == 2);

  const ProjectorField f1 = ProjectorField::f1(2);
  CHECK(f1.level() == 4);
  CHECK(f1.ambient_dim() == 6);  // fixed subspace plus one padded direction
  CHECK(f1.fiber_rank() == 2);
  const FieldJet j = f1.jet(0.4, -0.1, 0);
  // The padded direction is a constant unit vector.
  CHECK(j.A.col(1).head(5).norm() == Approx(0.0));
  CHECK(j.A(5, 1) == Approx(1.0));
  CHECK(j.dAx.col(1).norm() == Approx(0.0));
  CHECK(j.dAy.col(1).norm() == Approx(0.0));
}

TEST_CASE("full involutive deformation collapses three directions") {
  const SymEndo D = sym_endo_from_orthonormal(sigma_realified(2));
  const BoundaryReport rep = boundary_analysis({2, 0, D}, 10);
  CHECK(rep.dim_ker_T == 3);
  CHECK(rep.p == 1);
  CHECK(rep.fibers_clear_kernel);
  CHECK(rep.frame_full_rank);
}

TEST_CASE("generic boundary deformation collapses a single direction") {
  Rng rng(23);
  const SymEndo D = random_deformation(3, 0, 1.0, rng);
  const BoundaryReport rep = boundary_analysis({3, 0, D}, 12);
  CHECK(rep.dim_ker_T == 1);
  CHECK(rep.p == 5);          // 2N - 3 with N = 4
  CHECK(rep.p < 2 * 3);       // strictly below twice the level
  CHECK(rep.max_fiber_overlap < 1e-8);
  CHECK(rep.fibers_clear_kernel);
  CHECK(rep.frame_full_rank);
  CHECK(rep.eigenvalues.minCoeff() == Approx(0.0));
}
