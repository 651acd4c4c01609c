#pragma once

// SU(2) and su(2) primitives: the fixed algebra basis, local sections of the
// bundle SU(2) -> CP^1 over the two affine charts, their Maurer-Cartan
// coordinate fields xi_i = g^{-1} dg/dx_i in closed form, and the Moebius
// action of a group element on the chart coordinate.

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace ehm {

using cd = std::complex<double>;

// Orthogonal su(2) basis: X1 spans the diagonal torus direction, X2 and X3
// span its complement m (the tangent directions of CP^1 at the base point).
inline Eigen::Matrix2cd su2_X1() {
  Eigen::Matrix2cd m;
  m << cd(0, 1), cd(0, 0), cd(0, 0), cd(0, -1);
  return m;
}
inline Eigen::Matrix2cd su2_X2() {
  Eigen::Matrix2cd m;
  m << cd(0, 0), cd(1, 0), cd(-1, 0), cd(0, 0);
  return m;
}
inline Eigen::Matrix2cd su2_X3() {
  Eigen::Matrix2cd m;
  m << cd(0, 0), cd(0, 1), cd(0, 1), cd(0, 0);
  return m;
}

inline bool is_group_element(const Eigen::Matrix2cd& g, double tol = 1e-12) {
  const double unitary =
      (g.adjoint() * g - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  const double det1 = std::abs(g.determinant() - cd(1, 0));
  return unitary <= tol && det1 <= tol;
}

inline bool is_algebra_element(const Eigen::Matrix2cd& X, double tol = 1e-12) {
  const double anti = (X + X.adjoint()).cwiseAbs().maxCoeff();
  const double tr = std::abs(X.trace());
  return anti <= tol && tr <= tol;
}

// Local section over the chart around 0 (chart 0): g(z) maps the reference
// line C(1,0)^T to the line of z, with g(0) = id.  Chart 1 covers z = infinity
// through the coordinate w with z = 1/w.  On overlaps the two sections differ
// only by right multiplication with a diagonal U(1) element, so the induced
// fiber planes agree.
inline Eigen::Matrix2cd local_section(cd z, int chart = 0) {
  const double f = 1.0 / std::sqrt(1.0 + std::norm(z));
  Eigen::Matrix2cd g;
  if (chart == 0) {
    g << cd(f, 0), -f * std::conj(z), f * z, cd(f, 0);
  } else {
    g << f * z, cd(-f, 0), cd(f, 0), f * std::conj(z);
  }
  return g;
}

// Closed forms of xi_x = g^{-1} dg/dx and xi_y = g^{-1} dg/dy for the two
// sections; only the off-diagonal entries flip sign between the charts.
inline std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> maurer_cartan_fields(
    cd z, int chart = 0) {
  const double x = z.real();
  const double y = z.imag();
  const double s2 = 1.0 / (1.0 + x * x + y * y);
  const double sg = (chart == 0) ? 1.0 : -1.0;
  Eigen::Matrix2cd xx;
  xx << cd(0, -y), cd(-sg, 0), cd(sg, 0), cd(0, y);
  Eigen::Matrix2cd xy;
  xy << cd(0, x), cd(0, sg), cd(0, sg), cd(0, -x);
  return {s2 * xx, s2 * xy};
}

struct MaurerCartanDerivs {
  Eigen::Matrix2cd dxx_dx, dxx_dy, dxy_dx, dxy_dy;
};

// Exact first partials of the Maurer-Cartan fields (needed for second
// derivatives of equivariant maps).
inline MaurerCartanDerivs maurer_cartan_derivs(cd z, int chart = 0) {
  const double x = z.real();
  const double y = z.imag();
  const double s2 = 1.0 / (1.0 + x * x + y * y);
  const double s4 = s2 * s2;
  const double sg = (chart == 0) ? 1.0 : -1.0;
  Eigen::Matrix2cd Mx;
  Mx << cd(0, -y), cd(-sg, 0), cd(sg, 0), cd(0, y);
  Eigen::Matrix2cd My;
  My << cd(0, x), cd(0, sg), cd(0, sg), cd(0, -x);
  Eigen::Matrix2cd dMx_dy;
  dMx_dy << cd(0, -1), cd(0, 0), cd(0, 0), cd(0, 1);
  Eigen::Matrix2cd dMy_dx;
  dMy_dx << cd(0, 1), cd(0, 0), cd(0, 0), cd(0, -1);
  MaurerCartanDerivs d;
  d.dxx_dx = -2.0 * x * s4 * Mx;
  d.dxx_dy = -2.0 * y * s4 * Mx + s2 * dMx_dy;
  d.dxy_dx = -2.0 * x * s4 * My + s2 * dMy_dx;
  d.dxy_dy = -2.0 * y * s4 * My;
  return d;
}

// Action of g on the affine coordinate: with the column convention of
// local_section (line of z is spanned by (1, z)^T), g moves z to
// (c + d z) / (a + b z).
inline cd mobius(const Eigen::Matrix2cd& g, cd z) {
  return (g(1, 0) + g(1, 1) * z) / (g(0, 0) + g(0, 1) * z);
}

}  // namespace ehm
