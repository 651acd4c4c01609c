#include "ehm/field.hpp"

#include <stdexcept>

namespace ehm {

ProjectorPack projector_pack(const FrameField& f, double x, double y,
                             int chart) {
  const FieldJet j = f.jet(x, y, chart);
  const Eigen::MatrixXd& A = j.A;
  const Eigen::MatrixXd M = A.transpose() * A;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.eigenvalues().minCoeff() < 1e-16)
    throw std::domain_error("projector_pack: degenerate frame");
  const Eigen::MatrixXd Minv = M.inverse();

  ProjectorPack out;
  out.frame = A;
  out.P = A * Minv * A.transpose();
  const auto dP = [&](const Eigen::MatrixXd& dA) -> Eigen::MatrixXd {
    const Eigen::MatrixXd dM = dA.transpose() * A + A.transpose() * dA;
    return dA * Minv * A.transpose() + A * Minv * dA.transpose() -
           A * (Minv * dM * Minv) * A.transpose();
  };
  out.dPx = dP(j.dAx);
  out.dPy = dP(j.dAy);
  return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> projector_derivative_fd(
    const FrameField& f, double x, double y, int chart, double h) {
  const Eigen::MatrixXd px_p = projector_pack(f, x + h, y, chart).P;
  const Eigen::MatrixXd px_m = projector_pack(f, x - h, y, chart).P;
  const Eigen::MatrixXd py_p = projector_pack(f, x, y + h, chart).P;
  const Eigen::MatrixXd py_m = projector_pack(f, x, y - h, chart).P;
  return {(px_p - px_m) / (2.0 * h), (py_p - py_m) / (2.0 * h)};
}

}  // namespace ehm
