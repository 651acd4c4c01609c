#pragma once

// The degree-two orbit immersion of the sphere into S^4 (level-4 weight-zero
// orbit in the sigma-fixed real form), its exact two-jet, the frame field of
// its tangent planes, and the pointwise shape-operator identity satisfied by
// the induced tangent-plane (Gauss) map.

#include <array>

#include <Eigen/Dense>

#include "ehm/field.hpp"
#include "ehm/geometry.hpp"

namespace ehm {

struct VeroneseJet {
  Eigen::VectorXd I;                   // immersion point, unit vector in R^5
  Eigen::MatrixXd dI;                  // 5 x 2 coordinate derivatives
  std::array<Eigen::MatrixXd, 2> ddI;  // ddI[j] = d/dx_j of dI (5 x 2)
};

VeroneseJet veronese_jet(cd z, int chart = 0);

// Frame field of the immersion's tangent planes; the jet is exact (second
// derivatives from the closed-form connection fields, no differencing).
class VeroneseTangentField final : public FrameField {
 public:
  int ambient_dim() const override { return 5; }
  int fiber_rank() const override { return 2; }
  FieldJet jet(double x, double y, int chart) const override;
};

struct GaussSample {
  cd z;
  double lambda = 0.0;    // induced conformal factor, 12 / (1 + |z|^2)^2
  double K = 0.0;         // Gaussian curvature (log-conformal FD Laplacian)
  Eigen::VectorXd n_vec;  // mean curvature vector in R^5 (position part kept)
  Eigen::Matrix2d Kstar;  // pairing of n_vec with the second fundamental form
  Eigen::Matrix2d A;      // tangent-plane-map operator wrt the induced metric
  double identity_residual = 0.0;  // |A - (Kstar + K Id)|
  double prop_id_dev = 0.0;        // |A - (tr A / 2) Id|
};

GaussSample gauss_map_sample(cd z, int chart = 0);

}  // namespace ehm
