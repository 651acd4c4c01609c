#pragma once

// Deformation points (k, l, D), their validation against the ambient space,
// the projector frame fields they induce (undeformed, deformed, sigma-fixed
// real form, and the rank-one-plus-constant family), and the analysis of
// boundary points where I + D degenerates.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ehm/field.hpp"
#include "ehm/rng.hpp"
#include "ehm/spans.hpp"
#include "ehm/sym_endo.hpp"

namespace ehm {

struct ModuliPoint {
  int k = 0;
  int l = 0;
  SymEndo D;
};

struct ValidationReport {
  bool level_ok = false;
  bool gram_self_adjoint = false;
  bool j_anticommuting = false;
  bool in_ambient = false;
  bool interior = false;  // operator norm < 1
  double op_norm = 0.0;
  double ambient_residual = 0.0;
  double j_commuting_fraction = 0.0;

  bool ok() const {
    return level_ok && gram_self_adjoint && j_anticommuting && in_ambient &&
           interior;
  }
};

ValidationReport validate(const ModuliPoint& pt);

// Symmetric PSD square root of I + D (orthonormal coordinates).  Eigenvalues
// below `clip` are flattened to zero; anything below -1e-10 means I + D is
// not PSD and throws std::domain_error.
Eigen::MatrixXd build_T(const SymEndo& D, double clip = 1e-12);

// Seeded deformation: Gaussian random direction inside the cached ambient
// space at (k, l), rescaled to the requested operator norm.
SymEndo random_deformation(int k, int l, double norm, Rng& rng);

class ProjectorField final : public FrameField {
 public:
  // Rank-two fiber through the lowest weight pair at (k, l); k < 0 reverses
  // the fiber orientation (conjugate family: opposite degree and angle).
  static ProjectorField standard(int k, int l);
  // The same fiber pushed through T = sqrt(I + D).  Accepts boundary points
  // (operator norm up to 1); throws when D fails the structural checks.
  static ProjectorField deformed(const ModuliPoint& pt);
  // Sigma-fixed real form of the (2k, l) family at level 2(k + l).
  static ProjectorField real_standard(int k, int l);
  // Weight-zero line plus a constant direction at level 2m (totally geodesic
  // family: degenerate second-order operator, flat connection).
  static ProjectorField f1(int m);

  int ambient_dim() const override;
  int fiber_rank() const override;
  FieldJet jet(double x, double y, int chart) const override;

  int level() const { return n_; }

 private:
  ProjectorField() = default;

  int n_ = 0;
  Eigen::MatrixXd T_;                    // 2N x 2N, identity when undeformed
  bool restricted_ = false;
  Eigen::MatrixXd restrict_;             // rows of the invariant subspace
  std::vector<Eigen::VectorXd> fiber0_;  // moving fiber seeds in R^{2N}
  int pad_ = 0;                          // appended constant coordinates
};

struct BoundaryReport {
  Eigen::VectorXd eigenvalues;     // spectrum of I + D, ascending
  int dim_ker_T = 0;
  int p = 0;                       // 2N - 2 - dim ker T
  double max_fiber_overlap = 0.0;  // sup over the grid of |ker(T)^T A(z)|
  double min_frame_sv = 0.0;       // smallest second singular value of A(z)
  bool fibers_clear_kernel = false;
  bool frame_full_rank = false;
};

// Grid analysis of a deformation at the boundary of the unit operator-norm
// ball: the fibers must stay full rank and orthogonal to ker T.
BoundaryReport boundary_analysis(const ModuliPoint& pt, int grid = 40);

}  // namespace ehm
