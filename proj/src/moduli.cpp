#include "ehm/moduli.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "ehm/geometry.hpp"
#include "ehm/su2.hpp"

namespace ehm {

ValidationReport validate(const ModuliPoint& pt) {
  ValidationReport rep;
  const int n = std::abs(pt.k) + 2 * pt.l;
  rep.level_ok = (pt.D.N == n + 1) && (pt.D.M.rows() == 2 * (n + 1)) &&
                 (pt.D.M.cols() == 2 * (n + 1));
  if (!rep.level_ok) return rep;
  rep.gram_self_adjoint = is_gram_self_adjoint(pt.D, 1e-10);
  const Eigen::MatrixXd X = to_orthonormal(pt.D);
  rep.j_commuting_fraction = j_commuting_fraction(X);
  rep.j_anticommuting = rep.j_commuting_fraction <= 1e-8;
  rep.ambient_residual = ambient_residual(moduli_ambient_cached(pt.k, pt.l), pt.D);
  rep.in_ambient = rep.ambient_residual <= 1e-8;
  rep.op_norm = op_norm(pt.D);
  rep.interior = rep.op_norm < 1.0;
  return rep;
}

Eigen::MatrixXd build_T(const SymEndo& D, double clip) {
  Eigen::MatrixXd S = to_orthonormal(D);
  S = 0.5 * (S + S.transpose().eval());
  const Eigen::Index d = S.rows();
  S += Eigen::MatrixXd::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  const Eigen::VectorXd& w = es.eigenvalues();
  if (w.minCoeff() < -1e-10)
    throw std::domain_error("build_T: I + D is not positive semidefinite");
  Eigen::VectorXd sq(d);
  for (Eigen::Index i = 0; i < d; ++i)
    sq[i] = (w[i] > clip) ? std::sqrt(w[i]) : 0.0;
  return es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
}

SymEndo random_deformation(int k, int l, double norm, Rng& rng) {
  const AmbientResult& amb = moduli_ambient_cached(k, l);
  if (amb.basis.dim() == 0)
    throw std::invalid_argument("random_deformation: trivial deformation space");
  const int N = std::abs(k) + 2 * l + 1;
  Eigen::VectorXd coef(amb.basis.dim());
  for (Eigen::Index i = 0; i < coef.size(); ++i) coef[i] = rng.gauss();
  Eigen::MatrixXd X = sym_unpack(amb.basis.rows.transpose() * coef, 2 * N);
  SymEndo D = sym_endo_from_orthonormal(X);
  const double on = op_norm(D);
  if (!(on > 0.0))
    throw std::runtime_error("random_deformation: degenerate sample");
  D.M *= norm / on;
  return D;
}

ProjectorField ProjectorField::standard(int k, int l) {
  const int ka = std::abs(k);
  if (ka < 1 || l < 0)
    throw std::invalid_argument("ProjectorField::standard: need |k| >= 1, l >= 0");
  const int n = ka + 2 * l;
  const int N = n + 1;
  ProjectorField f;
  f.n_ = n;
  f.T_ = Eigen::MatrixXd::Identity(2 * N, 2 * N);
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(N);
  u[(n + ka) / 2] = 1.0;  // weight -|k|
  const Eigen::VectorXd e1 = realify_vec(u);
  const Eigen::VectorXd je1 = Jmat(N) * e1;
  if (k >= 0)
    f.fiber0_ = {e1, je1};
  else
    f.fiber0_ = {je1, e1};
  return f;
}

ProjectorField ProjectorField::deformed(const ModuliPoint& pt) {
  ValidationReport rep = validate(pt);
  if (!rep.level_ok || !rep.gram_self_adjoint || !rep.j_anticommuting ||
      !rep.in_ambient)
    throw std::invalid_argument("ProjectorField::deformed: invalid deformation");
  if (rep.op_norm > 1.0 + 1e-9)
    throw std::invalid_argument(
        "ProjectorField::deformed: operator norm exceeds 1");
  ProjectorField f = standard(pt.k, pt.l);
  f.T_ = build_T(pt.D);
  return f;
}

ProjectorField ProjectorField::real_standard(int k, int l) {
  const int ka = std::abs(k);
  if (ka < 1 || l < 0)
    throw std::invalid_argument(
        "ProjectorField::real_standard: need |k| >= 1, l >= 0");
  const int n = 2 * (ka + l);
  const int N = n + 1;
  ProjectorField f;
  f.n_ = n;
  f.T_ = Eigen::MatrixXd::Identity(2 * N, 2 * N);
  f.restricted_ = true;
  f.restrict_ = fix_sigma_rows(n);
  Eigen::VectorXcd hi = Eigen::VectorXcd::Zero(N);
  Eigen::VectorXcd lo = Eigen::VectorXcd::Zero(N);
  hi[l] = 1.0;           // weight +2|k|
  lo[2 * ka + l] = 1.0;  // weight -2|k|
  const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
  const double h = std::sqrt(0.5);
  // Order fixed so the fiber orientation gives angle +1 and degree +2|k|.
  const Eigen::VectorXd b1 = realify_vec(cd(0, 1) * (hi - sgn * lo) * h);
  const Eigen::VectorXd b2 = realify_vec((hi + sgn * lo) * h);
  if (k >= 0)
    f.fiber0_ = {b1, b2};
  else
    f.fiber0_ = {b2, b1};
  return f;
}

ProjectorField ProjectorField::f1(int m) {
  if (m < 1) throw std::invalid_argument("ProjectorField::f1: need m >= 1");
  const int n = 2 * m;
  const int N = n + 1;
  ProjectorField f;
  f.n_ = n;
  f.T_ = Eigen::MatrixXd::Identity(2 * N, 2 * N);
  f.restricted_ = true;
  f.restrict_ = fix_sigma_rows(n);
  Eigen::VectorXcd r0 = Eigen::VectorXcd::Zero(N);
  r0[m] = (m % 2 == 1) ? cd(0, 1) : cd(1, 0);  // sigma-fixed weight-zero line
  f.fiber0_ = {realify_vec(r0)};
  f.pad_ = 1;
  return f;
}

int ProjectorField::ambient_dim() const {
  const int base = restricted_ ? static_cast<int>(restrict_.rows())
                               : static_cast<int>(T_.rows());
  return base + pad_;
}

int ProjectorField::fiber_rank() const {
  return static_cast<int>(fiber0_.size()) + pad_;
}

FieldJet ProjectorField::jet(double x, double y, int chart) const {
  const cd z(x, y);
  const Eigen::Matrix2cd g = local_section(z, chart);
  const auto [xx, xy] = maurer_cartan_fields(z, chart);
  const Eigen::MatrixXcd rho = rho_unitary(n_, g);
  const Eigen::MatrixXd R = realify_op(rho);
  const Eigen::MatrixXd dRx = realify_op(rho * drho_unitary(n_, xx));
  const Eigen::MatrixXd dRy = realify_op(rho * drho_unitary(n_, xy));

  const int moving = static_cast<int>(fiber0_.size());
  const int amb = ambient_dim();
  FieldJet out;
  out.A = Eigen::MatrixXd::Zero(amb, moving + pad_);
  out.dAx = Eigen::MatrixXd::Zero(amb, moving + pad_);
  out.dAy = Eigen::MatrixXd::Zero(amb, moving + pad_);
  const int base = amb - pad_;
  for (int j = 0; j < moving; ++j) {
    Eigen::VectorXd a = T_ * (R * fiber0_[j]);
    Eigen::VectorXd ax = T_ * (dRx * fiber0_[j]);
    Eigen::VectorXd ay = T_ * (dRy * fiber0_[j]);
    if (restricted_) {
      a = restrict_ * a;
      ax = restrict_ * ax;
      ay = restrict_ * ay;
    }
    out.A.col(j).head(base) = a;
    out.dAx.col(j).head(base) = ax;
    out.dAy.col(j).head(base) = ay;
  }
  for (int i = 0; i < pad_; ++i) out.A(amb - 1 - i, moving + i) = 1.0;
  return out;
}

BoundaryReport boundary_analysis(const ModuliPoint& pt, int grid) {
  const int N = std::abs(pt.k) + 2 * pt.l + 1;
  Eigen::MatrixXd S = to_orthonormal(pt.D);
  S = 0.5 * (S + S.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      Eigen::MatrixXd::Identity(2 * N, 2 * N) + S);

  BoundaryReport rep;
  rep.eigenvalues = es.eigenvalues();
  int kd = 0;
  while (kd < 2 * N && rep.eigenvalues[kd] < 1e-8) ++kd;
  rep.dim_ker_T = kd;
  rep.p = 2 * N - 2 - kd;
  const Eigen::MatrixXd ker = es.eigenvectors().leftCols(kd);

  const ProjectorField field = ProjectorField::deformed(pt);
  double overlap = 0.0;
  double minsv = std::numeric_limits<double>::infinity();
  for (int chart = 0; chart < 2; ++chart) {
    for (const cd z : default_grid(grid)) {
      const FieldJet j = field.jet(z.real(), z.imag(), chart);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(j.A);
      minsv = std::min(minsv, svd.singularValues().minCoeff());
      if (kd > 0)
        overlap = std::max(overlap, (ker.transpose() * j.A).norm());
    }
  }
  rep.max_fiber_overlap = overlap;
  rep.min_frame_sv = minsv;
  rep.fibers_clear_kernel = overlap < 1e-8;
  rep.frame_full_rank = minsv > 1e-3;
  return rep;
}

}  // namespace ehm
