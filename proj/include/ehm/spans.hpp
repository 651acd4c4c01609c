#pragma once

// Orbit spans of symmetrized rank-<=2 operators over Haar-sampled group
// elements, the sigma-fixed real form, and the ambient space of admissible
// deformation directions.
//
// The ambient space is defined through the isotypic route: take the
// J-anticommuting symmetric endomorphisms, view them as symmetric 2-tensors,
// and keep the components with labels 2|k| + 4l - 4r for r = l+1, ...,
// floor((|k|+2l)/2).  For k != 0 the same space is recomputed as the
// orthogonal complement of gs_span(mV0V0) + R id inside the symmetric
// endomorphisms and the two routes are required to agree; for k = 0 the label
// range is empty and the dimension is 0 (the orbit-span identity only covers
// k >= 1, where the trivial component is absorbed by the span).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ehm/realify.hpp"
#include "ehm/rng.hpp"
#include "ehm/sym_endo.hpp"

namespace ehm {

struct SubspaceBasis {
  int vec_dim = 0;          // dimension of the flattened ambient vectors
  Eigen::MatrixXd rows;     // dim() x vec_dim, orthonormal rows

  int dim() const { return static_cast<int>(rows.rows()); }
};

// Isometric packing of a symmetric d x d matrix into R^{d(d+1)/2}
// (off-diagonal entries scaled by sqrt(2), so dot products of packed vectors
// equal Hilbert-Schmidt inner products).
Eigen::VectorXd sym_pack(const Eigen::MatrixXd& M);
Eigen::MatrixXd sym_unpack(const Eigen::VectorXd& v, int d);

// Incremental modified Gram-Schmidt span accumulator.  A vector enlarges the
// span when its orthogonal residual exceeds both rel_tol times its own norm
// and abs_tol; the absolute floor matters for families whose members can be
// numerically zero (e.g. isotypic projections of basis elements).
class SpanAccum {
 public:
  explicit SpanAccum(int vec_dim, double rel_tol = 1e-8, double abs_tol = 0.0)
      : vec_dim_(vec_dim), rel_tol_(rel_tol), abs_tol_(abs_tol) {}

  // Returns true when v enlarges the span.
  bool add(Eigen::VectorXd v);
  int rank() const { return static_cast<int>(rows_.size()); }
  SubspaceBasis basis() const;

 private:
  int vec_dim_;
  double rel_tol_;
  double abs_tol_;
  std::vector<Eigen::VectorXd> rows_;
};

// Distance between the subspaces spanned by two orthonormal row bases
// (spectral norm of the difference of the orthogonal projectors).
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b);

// Residual of v against the span (norm of the component outside it,
// relative to |v|).
double projection_residual(const SubspaceBasis& basis, const Eigen::VectorXd& v);

enum class OrbitKind { V0V0, mV0V0 };

struct GsSpanResult {
  SubspaceBasis basis;
  int samples_used = 0;
  bool stabilized = false;
  int real_form_dim = 0;  // ambient real dimension d when real_form is set
};

// Span over Haar samples g of the symmetrized operators built from pairs of
// vectors in g*(left set) and g*V0, where V0 = span_R{u_{-|k|}, J u_{-|k|}}
// at level |k| + 2l and the left set is V0 itself (V0V0) or its image under
// the torus-complement algebra directions (mV0V0).  With real_form set the
// construction runs inside the sigma-fixed real form at level 2(k+l) with
// the standard real 2-plane as V0 (V0V0 only).  Sampling stops once the rank
// has been stable for stable_window consecutive samples.
GsSpanResult gs_span(int k, int l, OrbitKind which, std::uint64_t seed,
                     bool real_form = false, int max_samples = 400,
                     int stable_window = 50);

// Antilinear structure map at level n, realified (symmetric, J-anticommuting,
// eigenvalues +-1) and the orthonormal rows spanning its +1 eigenspace
// (even n).
Eigen::MatrixXd sigma_realified(int n);
Eigen::MatrixXd fix_sigma_rows(int n);

// Hilbert-Schmidt-orthonormal basis of the J-anticommuting symmetric
// endomorphisms of R^{2N} (orthonormal coordinates), dimension N(N+1).
std::vector<Eigen::MatrixXd> antiJ_sym_basis(int N);

struct AmbientResult {
  int k = 0, l = 0;
  SubspaceBasis basis;        // isotypic route (the definition)
  int dim_orbit_route = -1;   // -1 when skipped (k = 0)
  double route_distance = 0.0;
  bool routes_agree = true;
};

AmbientResult moduli_ambient(int k, int l, std::uint64_t seed);

// Relative distance of X from the ambient subspace (norm of the component
// outside it over the norm of X; 0 for X = 0).
double ambient_residual(const AmbientResult& amb, const SymEndo& X);

// Cached ambient with a fixed internal seed (used for validation paths that
// must be deterministic regardless of user seeds).
const AmbientResult& moduli_ambient_cached(int k, int l);

// Closed-form expected real dimension: sum over r = l+1 .. floor(n/2) of
// 2(2|k| + 4l - 4r + 1).
int moduli_ambient_expected_dim(int k, int l);

// Dimension of the span of the J-commuting parts of a basis (used to check
// that gs_span(V0V0) complexifies to all Hermitian endomorphisms).
int j_commuting_span_dim(const SubspaceBasis& basis, int N);

}  // namespace ehm
