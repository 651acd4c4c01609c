#include "ehm/gauss.hpp"

#include <cmath>

#include "ehm/irrep.hpp"
#include "ehm/realify.hpp"
#include "ehm/spans.hpp"
#include "ehm/su2.hpp"

namespace ehm {

namespace {

constexpr int kLevel = 4;

struct VeroneseBasis {
  Eigen::MatrixXd B;     // 5 x 10 rows of the sigma-fixed subspace
  Eigen::VectorXd u0r;   // realified weight-zero unit vector
};

const VeroneseBasis& veronese_basis() {
  static const VeroneseBasis vb = [] {
    VeroneseBasis v;
    v.B = fix_sigma_rows(kLevel);
    Eigen::VectorXcd u0 = Eigen::VectorXcd::Zero(kLevel + 1);
    u0[kLevel / 2] = 1.0;
    v.u0r = realify_vec(u0);
    return v;
  }();
  return vb;
}

}  // namespace

VeroneseJet veronese_jet(cd z, int chart) {
  const VeroneseBasis& vb = veronese_basis();
  const Eigen::Matrix2cd g = local_section(z, chart);
  const auto [xx, xy] = maurer_cartan_fields(z, chart);
  const MaurerCartanDerivs dx = maurer_cartan_derivs(z, chart);
  const Eigen::MatrixXd R = realify_op(rho_unitary(kLevel, g));
  const Eigen::MatrixXd D[2] = {realify_op(drho_unitary(kLevel, xx)),
                                realify_op(drho_unitary(kLevel, xy))};
  // dxi[i][j] = d(xi_i)/dx_j
  const Eigen::Matrix2cd dxi[2][2] = {{dx.dxx_dx, dx.dxx_dy},
                                      {dx.dxy_dx, dx.dxy_dy}};

  VeroneseJet jet;
  jet.I = vb.B * (R * vb.u0r);
  jet.dI.resize(5, 2);
  for (int i = 0; i < 2; ++i) jet.dI.col(i) = vb.B * (R * (D[i] * vb.u0r));
  for (int j = 0; j < 2; ++j) {
    jet.ddI[j].resize(5, 2);
    for (int i = 0; i < 2; ++i) {
      const Eigen::VectorXd term =
          D[j] * (D[i] * vb.u0r) +
          realify_op(drho_unitary(kLevel, dxi[i][j])) * vb.u0r;
      jet.ddI[j].col(i) = vb.B * (R * term);
    }
  }
  return jet;
}

FieldJet VeroneseTangentField::jet(double x, double y, int chart) const {
  const VeroneseJet vj = veronese_jet(cd(x, y), chart);
  FieldJet out;
  out.A = vj.dI;
  out.dAx = vj.ddI[0];
  out.dAy = vj.ddI[1];
  return out;
}

GaussSample gauss_map_sample(cd z, int chart) {
  const VeroneseJet vj = veronese_jet(z, chart);
  const Eigen::Matrix2d G = vj.dI.transpose() * vj.dI;
  GaussSample s;
  s.z = z;
  s.lambda = G(0, 0);

  // Gaussian curvature from the log-conformal-factor Laplacian.
  const double h = 1e-4;
  const auto lam_of = [&](cd zz) {
    const VeroneseJet j = veronese_jet(zz, chart);
    return (j.dI.transpose() * j.dI)(0, 0);
  };
  const double lap_log =
      (std::log(lam_of(z + h)) + std::log(lam_of(z - h)) +
       std::log(lam_of(z + cd(0, h))) + std::log(lam_of(z - cd(0, h))) -
       4.0 * std::log(s.lambda)) /
      (h * h);
  s.K = -lap_log / (2.0 * s.lambda);

  // Second fundamental form in R^5 (the position part is kept: the mean
  // curvature vector of the unit-sphere immersion includes -2 I).
  const Eigen::Matrix2d Gi = G.inverse();
  const Eigen::MatrixXd Ptan = vj.dI * Gi * vj.dI.transpose();
  const Eigen::MatrixXd I5 = Eigen::MatrixXd::Identity(5, 5);
  Eigen::VectorXd Kf[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Kf[i][j] = (I5 - Ptan) * vj.ddI[j].col(i);
  s.n_vec = (Kf[0][0] + Kf[1][1]) / s.lambda;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      s.Kstar(a, b) = -s.n_vec.dot(Kf[a][b]) / s.lambda;

  // Second-order operator of the tangent-plane map, with the induced
  // conformal factor in place of the background one.
  const VeroneseTangentField field;
  const GeomSample g = geom_sample(field, z, chart, 1.0);
  const double lam_fs = fs_conformal(z, 1.0);
  s.A = g.A * (lam_fs / s.lambda);

  s.identity_residual =
      (s.A - (s.Kstar + s.K * Eigen::Matrix2d::Identity())).norm();
  s.prop_id_dev =
      (s.A - 0.5 * s.A.trace() * Eigen::Matrix2d::Identity()).norm();
  return s;
}

}  // namespace ehm
