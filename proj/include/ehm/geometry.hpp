#pragma once

// Pullback geometry of a rank-two projector frame field over the chart:
// metric against the curvature-kappa round background, the second-order
// (shape) operator on the moving fiber frame, energy density, angle
// functional, connection curvature scalar and its degree integral, the
// eigen-section (vertical Laplacian) check, and the spectrum of the mean
// curvature operator of the composed immersion into the endomorphism sphere.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ehm/field.hpp"

namespace ehm {

using cd = std::complex<double>;

// Normalization constant of the background chart metric
// lambda(z) = kKappa / (1 + |z|^2)^2; every pinned scale factor in the test
// suite assumes this value.
inline constexpr double kKappa = 1.0 / 3.14159265358979323846;

double fs_conformal(cd z, double kappa = kKappa);

struct GeomSample {
  cd z;
  int chart = 0;
  Eigen::Matrix2d metric;  // pullback metric on the background-orthonormal frame
  double m = 0.0;          // mean of the metric diagonal
  double e = 0.0;          // energy density = -tr(A)
  double cos_theta = 0.0;  // angle functional
  Eigen::Matrix2d A;       // second-order operator on the oriented fiber frame
  double F = 0.0;          // connection curvature scalar (chart coordinates)
};

// Requires fiber_rank() == 2 (the frame orientation fixes the signs of
// cos_theta and F).
GeomSample geom_sample(const FrameField& f, cd z, int chart = 0,
                       double kappa = kKappa);

// Deterministic golden-angle spiral of chart points with radii in
// [0.15, 2.5].
std::vector<cd> default_grid(int count);

struct EhReport {
  double mu = 0.0;             // mean of e/2 over the samples
  double max_A_dev_rel = 0.0;  // max |A + (e/2) Id| / e
  double e_mean = 0.0;
  double e_spread_rel = 0.0;   // (max e - min e) / mean e
  double cos_mean = 0.0;
  double cos_std = 0.0;
  double max_conformal_defect = 0.0;  // metric off-diagonality/anisotropy, relative
  int points = 0;
};

EhReport eh_verify(const FrameField& f, const std::vector<cd>& pts,
                   double kappa = kKappa);

// Degree of the induced connection: curvature scalar integrated in polar
// midpoint rule over the unit disks of both charts, divided by 2 pi.
double degree_estimate(const FrameField& f, int nr = 48, int nt = 64,
                       double kappa = kKappa);

struct TakahashiResult {
  double mu_fit = 0.0;        // mean Rayleigh quotient over the points
  double max_residual = 0.0;  // worst relative deviation from an eigen-section
};

// Staggered covariant second differences of the section z -> P(z) w against
// the background Laplacian; an eigen-section has residual O(step^2).
TakahashiResult takahashi_check(const FrameField& f, const Eigen::VectorXd& w,
                                const std::vector<cd>& pts, double step = 1e-3,
                                double kappa = kKappa);

// Sorted eigenvalues of the tangentially-reduced, symmetrized mean curvature
// operator of the composed immersion at z (finite differences in the chart).
// Throws std::runtime_error if the composed map fails its conformality
// sanity check.
Eigen::VectorXd composed_mc_spectrum(const FrameField& f, cd z,
                                     double h = 1e-4);

}  // namespace ehm
