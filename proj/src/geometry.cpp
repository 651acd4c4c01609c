#include "ehm/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ehm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Thin QR of the frame columns with the column signs locked to the diagonal
// of R, so the orthonormal frame varies continuously with the input and
// keeps the orientation of the frame columns.
Eigen::MatrixXd oriented_frame(const Eigen::MatrixXd& A) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd q = qr.householderQ() *
                      Eigen::MatrixXd::Identity(A.rows(), A.cols());
  const Eigen::MatrixXd r =
      qr.matrixQR().topRows(A.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace

double fs_conformal(cd z, double kappa) {
  const double r2 = std::norm(z);
  return kappa / ((1.0 + r2) * (1.0 + r2));
}

GeomSample geom_sample(const FrameField& f, cd z, int chart, double kappa) {
  if (f.fiber_rank() != 2)
    throw std::invalid_argument("geom_sample: needs a rank-two fiber");
  const ProjectorPack pk = projector_pack(f, z.real(), z.imag(), chart);
  const double lam = fs_conformal(z, kappa);
  const Eigen::MatrixXd q = oriented_frame(pk.frame);
  const Eigen::VectorXd q1 = q.col(0);
  const Eigen::VectorXd q2 = q.col(1);
  const Eigen::Index d = pk.P.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);

  GeomSample s;
  s.z = z;
  s.chart = chart;

  const Eigen::MatrixXd* dP[2] = {&pk.dPx, &pk.dPy};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      s.metric(i, j) = 0.5 * (*dP[i] * *dP[j]).trace() / lam;
  s.m = 0.5 * (s.metric(0, 0) + s.metric(1, 1));

  s.A.setZero();
  for (int i = 0; i < 2; ++i) {
    const Eigen::MatrixXd B = *dP[i] * (I - pk.P) * *dP[i];
    s.A(0, 0) -= q1.dot(B * q1) / lam;
    s.A(0, 1) -= q1.dot(B * q2) / lam;
    s.A(1, 0) -= q2.dot(B * q1) / lam;
    s.A(1, 1) -= q2.dot(B * q2) / lam;
  }
  s.e = -s.A.trace();

  const Eigen::MatrixXd t1 = pk.P * pk.dPx * (I - pk.P);
  const Eigen::MatrixXd t2 = pk.P * pk.dPy * (I - pk.P);
  const Eigen::MatrixXd jhat = q2 * q1.transpose() - q1 * q2.transpose();
  const double den = t1.norm() * t2.norm();
  s.cos_theta = (den > 1e-14) ? ((jhat * t1).transpose() * t2).trace() / den
                              : 0.0;

  const Eigen::MatrixXd rm =
      pk.P * (pk.dPx * pk.dPy - pk.dPy * pk.dPx) * pk.P;
  s.F = q1.dot(rm * q2);
  return s;
}

std::vector<cd> default_grid(int count) {
  std::vector<cd> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden = 2.399963229728653;
  for (int i = 0; i < count; ++i) {
    const double r =
        0.15 + 2.35 * ((count > 1) ? static_cast<double>(i) / (count - 1) : 0.0);
    const double th = golden * i;
    pts.emplace_back(r * std::cos(th), r * std::sin(th));
  }
  return pts;
}

EhReport eh_verify(const FrameField& f, const std::vector<cd>& pts,
                   double kappa) {
  EhReport rep;
  if (pts.empty()) return rep;
  double e_min = 0.0, e_max = 0.0, e_sum = 0.0;
  double cos_sum = 0.0, cos_sq = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const GeomSample s = geom_sample(f, pts[i], 0, kappa);
    const double dev =
        (s.A + 0.5 * s.e * Eigen::Matrix2d::Identity()).norm() / s.e;
    rep.max_A_dev_rel = std::max(rep.max_A_dev_rel, dev);
    const double conf =
        std::max(std::abs(s.metric(0, 1)),
                 std::abs(s.metric(0, 0) - s.metric(1, 1))) /
        s.m;
    rep.max_conformal_defect = std::max(rep.max_conformal_defect, conf);
    e_sum += s.e;
    e_min = (i == 0) ? s.e : std::min(e_min, s.e);
    e_max = (i == 0) ? s.e : std::max(e_max, s.e);
    cos_sum += s.cos_theta;
    cos_sq += s.cos_theta * s.cos_theta;
  }
  const double np = static_cast<double>(pts.size());
  rep.points = static_cast<int>(pts.size());
  rep.e_mean = e_sum / np;
  rep.e_spread_rel = (e_max - e_min) / rep.e_mean;
  rep.cos_mean = cos_sum / np;
  rep.cos_std = std::sqrt(std::max(0.0, cos_sq / np - rep.cos_mean * rep.cos_mean));
  rep.mu = rep.e_mean / 2.0;
  return rep;
}

double degree_estimate(const FrameField& f, int nr, int nt, double kappa) {
  double total = 0.0;
  for (int chart = 0; chart < 2; ++chart) {
    for (int ir = 0; ir < nr; ++ir) {
      const double r = (ir + 0.5) / nr;
      for (int it = 0; it < nt; ++it) {
        const double th = 2.0 * kPi * (it + 0.5) / nt;
        const cd z(r * std::cos(th), r * std::sin(th));
        const GeomSample s = geom_sample(f, z, chart, kappa);
        total += s.F * r * (1.0 / nr) * (2.0 * kPi / nt);
      }
    }
  }
  return total / (2.0 * kPi);
}

TakahashiResult takahashi_check(const FrameField& f, const Eigen::VectorXd& w,
                                const std::vector<cd>& pts, double step,
                                double kappa) {
  TakahashiResult out;
  if (pts.empty()) return out;
  const auto P_of = [&](cd zz) {
    return projector_pack(f, zz.real(), zz.imag(), 0).P;
  };
  double mu_sum = 0.0;
  for (const cd z : pts) {
    const Eigen::MatrixXd Pz = P_of(z);
    const Eigen::VectorXd sz = Pz * w;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(sz.size());
    for (const cd dir : {cd(1, 0), cd(0, 1)}) {
      const Eigen::VectorXd up =
          P_of(z + dir * (step / 2)) * ((P_of(z + dir * step) * w - sz) / step);
      const Eigen::VectorXd um =
          P_of(z - dir * (step / 2)) * ((sz - P_of(z - dir * step) * w) / step);
      acc += Pz * (up - um) / step;
    }
    const Eigen::VectorXd lap = -acc / fs_conformal(z, kappa);
    const double c = lap.dot(sz) / sz.squaredNorm();
    const double resid = (lap - c * sz).norm() / sz.norm();
    mu_sum += c;
    out.max_residual = std::max(out.max_residual, resid);
  }
  out.mu_fit = mu_sum / static_cast<double>(pts.size());
  return out;
}

Eigen::VectorXd composed_mc_spectrum(const FrameField& f, cd z, double h) {
  const auto P_of = [&](cd zz) {
    return projector_pack(f, zz.real(), zz.imag(), 0).P;
  };
  const Eigen::MatrixXd P0 = P_of(z);
  const Eigen::MatrixXd Pxp = P_of(z + h), Pxm = P_of(z - h);
  const Eigen::MatrixXd Pyp = P_of(z + cd(0, h)), Pym = P_of(z - cd(0, h));
  const Eigen::MatrixXd dPx = (Pxp - Pxm) / (2.0 * h);
  const Eigen::MatrixXd dPy = (Pyp - Pym) / (2.0 * h);
  const Eigen::MatrixXd ddx = (Pxp - 2.0 * P0 + Pxm) / (h * h);
  const Eigen::MatrixXd ddy = (Pyp - 2.0 * P0 + Pym) / (h * h);

  const double lam = dPx.squaredNorm();
  if (std::abs(dPy.squaredNorm() - lam) > 1e-4 * lam ||
      std::abs((dPx.array() * dPy.array()).sum()) > 1e-4 * lam)
    throw std::runtime_error("composed_mc_spectrum: not conformal");

  Eigen::MatrixXd Hv = (ddx + ddy) / lam;
  for (const Eigen::MatrixXd* T : {&dPx, &dPy})
    Hv -= ((Hv.array() * T->array()).sum() / T->squaredNorm()) * *T;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (Hv + Hv.transpose().eval()));
  return es.eigenvalues();
}

}  // namespace ehm
