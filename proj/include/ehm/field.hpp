#pragma once

// Frame fields over the chart coordinate and the orthogonal projectors they
// induce.  A FrameField supplies, at every chart point, a full-rank matrix of
// frame columns spanning the moving fiber together with its coordinate
// derivatives; projector_pack turns that jet into the projector onto the
// fiber and its exact derivatives via the product rule (no finite
// differences on the main path).

#include <utility>

#include <Eigen/Dense>

namespace ehm {

struct FieldJet {
  Eigen::MatrixXd A;    // ambient_dim x fiber_rank, frame columns
  Eigen::MatrixXd dAx;  // d/dx of the columns
  Eigen::MatrixXd dAy;  // d/dy of the columns
};

class FrameField {
 public:
  virtual ~FrameField() = default;
  virtual int ambient_dim() const = 0;
  virtual int fiber_rank() const = 0;
  virtual FieldJet jet(double x, double y, int chart) const = 0;
};

struct ProjectorPack {
  Eigen::MatrixXd P;      // orthogonal projector onto the fiber
  Eigen::MatrixXd dPx;
  Eigen::MatrixXd dPy;
  Eigen::MatrixXd frame;  // the frame columns the pack was built from
};

// Throws std::domain_error when the frame columns degenerate (Gram matrix
// of the columns has an eigenvalue below 1e-16).
ProjectorPack projector_pack(const FrameField& f, double x, double y,
                             int chart = 0);

// Central-difference projector derivatives, used to cross-check the
// product-rule jet.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> projector_derivative_fd(
    const FrameField& f, double x, double y, int chart = 0, double h = 1e-5);

}  // namespace ehm
