#include "ehm/spans.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehm/su2.hpp"
#include "ehm/tensor.hpp"

namespace ehm {

namespace {

// Seed for caches that must not depend on user-supplied seeds.
constexpr std::uint64_t kInternalSeed = 1000003;

}  // namespace

Eigen::VectorXd sym_pack(const Eigen::MatrixXd& M) {
  const int d = static_cast<int>(M.rows());
  Eigen::VectorXd v(d * (d + 1) / 2);
  const double h = std::sqrt(0.5);
  int t = 0;
  for (int i = 0; i < d; ++i) {
    v[t++] = M(i, i);
    for (int j = i + 1; j < d; ++j) v[t++] = h * (M(i, j) + M(j, i));
  }
  return v;
}

Eigen::MatrixXd sym_unpack(const Eigen::VectorXd& v, int d) {
  if (v.size() != d * (d + 1) / 2)
    throw std::invalid_argument("sym_unpack: size mismatch");
  Eigen::MatrixXd M(d, d);
  const double h = std::sqrt(0.5);
  int t = 0;
  for (int i = 0; i < d; ++i) {
    M(i, i) = v[t++];
    for (int j = i + 1; j < d; ++j) {
      M(i, j) = h * v[t];
      M(j, i) = h * v[t];
      ++t;
    }
  }
  return M;
}

bool SpanAccum::add(Eigen::VectorXd v) {
  if (v.size() != vec_dim_)
    throw std::invalid_argument("SpanAccum: wrong vector size");
  const double norm0 = v.norm();
  if (!(norm0 > 0.0)) return false;
  // Two orthogonalization passes keep the basis numerically orthonormal.
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& r : rows_) v -= r.dot(v) * r;
  const double rest = v.norm();
  if (rest <= rel_tol_ * norm0 || rest <= abs_tol_) return false;
  rows_.push_back(v / rest);
  return true;
}

SubspaceBasis SpanAccum::basis() const {
  SubspaceBasis b;
  b.vec_dim = vec_dim_;
  b.rows.resize(static_cast<Eigen::Index>(rows_.size()), vec_dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    b.rows.row(static_cast<Eigen::Index>(i)) = rows_[i];
  return b;
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.vec_dim != b.vec_dim)
    throw std::invalid_argument("subspace_distance: ambient mismatch");
  if (a.dim() == 0 && b.dim() == 0) return 0.0;
  Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(a.vec_dim, a.vec_dim);
  if (a.dim() > 0) diff += a.rows.transpose() * a.rows;
  if (b.dim() > 0) diff -= b.rows.transpose() * b.rows;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double projection_residual(const SubspaceBasis& basis, const Eigen::VectorXd& v) {
  const double nv = v.norm();
  if (!(nv > 0.0)) return 0.0;
  Eigen::VectorXd rest = v;
  if (basis.dim() > 0) rest -= basis.rows.transpose() * (basis.rows * v);
  return rest.norm() / nv;
}

namespace {

// Shared sampling driver: adds one sample's generators per call of
// add_sample, stops once the rank has been stable for stable_window samples
// or the span fills the whole packed space.
GsSpanResult run_span(int packed_dim, int max_samples, int stable_window,
                      const std::function<void(SpanAccum&)>& add_sample) {
  GsSpanResult out;
  SpanAccum accum(packed_dim);
  int streak = 0;
  for (int s = 0; s < max_samples; ++s) {
    const int before = accum.rank();
    add_sample(accum);
    ++out.samples_used;
    if (accum.rank() == packed_dim) {
      out.stabilized = true;
      break;
    }
    streak = (accum.rank() == before) ? streak + 1 : 0;
    if (streak >= stable_window) {
      out.stabilized = true;
      break;
    }
  }
  out.basis = accum.basis();
  return out;
}

Eigen::VectorXd packed_pair(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return sym_pack(x * y.transpose() + y * x.transpose());
}

}  // namespace

GsSpanResult gs_span(int k, int l, OrbitKind which, std::uint64_t seed,
                     bool real_form, int max_samples, int stable_window) {
  k = std::abs(k);
  if (l < 0) throw std::invalid_argument("gs_span: l must be >= 0");
  Rng rng(seed);

  if (real_form) {
    if (which != OrbitKind::V0V0)
      throw std::invalid_argument("gs_span: real-form orbits support V0V0 only");
    const int n = 2 * (k + l);
    const int N = n + 1;
    const Eigen::MatrixXd B = fix_sigma_rows(n);
    const int d = static_cast<int>(B.rows());
    // sigma-fixed fiber plane spanned by i(u_{+2k} - (-1)^l u_{-2k})/sqrt 2
    // and (u_{+2k} + (-1)^l u_{-2k})/sqrt 2.
    Eigen::VectorXcd hi = Eigen::VectorXcd::Zero(N);
    Eigen::VectorXcd lo = Eigen::VectorXcd::Zero(N);
    hi[l] = 1.0;
    lo[2 * k + l] = 1.0;
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    const double h = std::sqrt(0.5);
    const Eigen::VectorXd x = B * realify_vec(cd(0, 1) * (hi - sgn * lo) * h);
    const Eigen::VectorXd y = B * realify_vec((hi + sgn * lo) * h);

    GsSpanResult out = run_span(
        d * (d + 1) / 2, max_samples, stable_window, [&](SpanAccum& accum) {
          const Eigen::MatrixXd Rp =
              B * realify_op(rho_unitary(n, rng.haar_su2())) * B.transpose();
          const Eigen::VectorXd a = Rp * x;
          const Eigen::VectorXd b = Rp * y;
          accum.add(packed_pair(a, a));
          accum.add(packed_pair(a, b));
          accum.add(packed_pair(b, b));
        });
    out.real_form_dim = d;
    return out;
  }

  const int n = k + 2 * l;
  const int N = n + 1;
  const int p0 = (n + k) / 2;  // weight -k slot
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(N);
  e1[p0] = 1.0;
  const Eigen::VectorXd e1r = realify_vec(e1);
  const Eigen::MatrixXd J = Jmat(N);

  const std::vector<Eigen::VectorXd> right = {e1r, J * e1r};
  std::vector<Eigen::VectorXd> left;
  if (which == OrbitKind::V0V0) {
    left = right;
  } else {
    for (const Eigen::Matrix2cd& X : {su2_X2(), su2_X3()}) {
      const Eigen::MatrixXd D = realify_op(drho_unitary(n, X));
      left.push_back(D * e1r);
      left.push_back(J * (D * e1r));
    }
  }

  return run_span(
      N * (2 * N + 1), max_samples, stable_window, [&](SpanAccum& accum) {
        const Eigen::MatrixXd R = realify_op(rho_unitary(n, rng.haar_su2()));
        if (which == OrbitKind::V0V0) {
          const Eigen::VectorXd a = R * right[0];
          const Eigen::VectorXd b = R * right[1];
          accum.add(packed_pair(a, a));
          accum.add(packed_pair(a, b));
          accum.add(packed_pair(b, b));
        } else {
          for (const auto& lv : left)
            for (const auto& rv : right)
              accum.add(packed_pair(R * lv, R * rv));
        }
      });
}

Eigen::MatrixXd sigma_realified(int n) {
  const int N = n + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  for (int p = 0; p <= n; ++p) M(n - p, p) = (p % 2 == 0) ? 1.0 : -1.0;
  return antilinear_real(M);
}

Eigen::MatrixXd fix_sigma_rows(int n) {
  if (n % 2 != 0)
    throw std::invalid_argument("fix_sigma_rows: level must be even");
  const int N = n + 1;
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(N, 2 * N);
  const double h = std::sqrt(0.5);
  int r = 0;
  // Real half: +1 eigenvectors of the sign-antidiagonal block.
  for (int p = 0; p < n - p; ++p) {
    rows(r, p) = h;
    rows(r, n - p) = (p % 2 == 0) ? h : -h;
    ++r;
  }
  if ((n / 2) % 2 == 0) rows(r++, n / 2) = 1.0;
  // Imaginary half: -1 eigenvectors of the same block.
  for (int p = 0; p < n - p; ++p) {
    rows(r, N + p) = h;
    rows(r, N + n - p) = (p % 2 == 0) ? -h : h;
    ++r;
  }
  if ((n / 2) % 2 == 1) rows(r++, N + n / 2) = 1.0;
  return rows;
}

std::vector<Eigen::MatrixXd> antiJ_sym_basis(int N) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(N) * (N + 1));
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      for (int part = 0; part < 2; ++part) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
        const cd val = (part == 0) ? cd(1, 0) : cd(0, 1);
        M(i, j) = val;
        M(j, i) = val;
        Eigen::MatrixXd X = antilinear_real(M);
        out.push_back(X / X.norm());
      }
  return out;
}

AmbientResult moduli_ambient(int k, int l, std::uint64_t seed) {
  k = std::abs(k);
  if (l < 0) throw std::invalid_argument("moduli_ambient: l must be >= 0");
  const int n = k + 2 * l;
  const int N = n + 1;
  const int packed_dim = N * (2 * N + 1);

  AmbientResult out;
  out.k = k;
  out.l = l;

  std::vector<int> allowed;
  for (int r = l + 1; 2 * r <= n; ++r) allowed.push_back(2 * n - 4 * r);

  // The projected candidates can be numerically zero; an absolute floor keeps
  // such vectors from being mistaken for new directions.
  SpanAccum accum(packed_dim, 1e-8, 1e-6);
  if (!allowed.empty()) {
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(N * N, N * N);
    for (int m : allowed) P += isotypic_projector_matrix(n, m);
    for (const Eigen::MatrixXd& B : antiJ_sym_basis(N)) {
      const TensorElement t = endo_to_tensor(sym_endo_from_orthonormal(B));
      const TensorElement tp = from_vec_unitary(n, P * vec_unitary(t));
      accum.add(sym_pack(to_orthonormal(endo_from_tensor(tp))));
    }
  }
  out.basis = accum.basis();

  if (k >= 1) {
    // Cross-check: complement of the orbit span plus the identity line.
    const GsSpanResult gs = gs_span(k, l, OrbitKind::mV0V0, seed);
    Eigen::MatrixXd stacked(gs.basis.dim() + 1, packed_dim);
    stacked.topRows(gs.basis.dim()) = gs.basis.rows;
    const Eigen::VectorXd idp =
        sym_pack(Eigen::MatrixXd::Identity(2 * N, 2 * N));
    stacked.row(gs.basis.dim()) = idp.transpose() / idp.norm();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > 1e-6) ++rank;
    SubspaceBasis orbit;
    orbit.vec_dim = packed_dim;
    orbit.rows = svd.matrixV().rightCols(packed_dim - rank).transpose();
    out.dim_orbit_route = orbit.dim();
    out.route_distance = subspace_distance(out.basis, orbit);
    out.routes_agree = (out.dim_orbit_route == out.basis.dim()) &&
                       out.route_distance <= 1e-8;
  }
  return out;
}

double ambient_residual(const AmbientResult& amb, const SymEndo& X) {
  return projection_residual(amb.basis, sym_pack(to_orthonormal(X)));
}

const AmbientResult& moduli_ambient_cached(int k, int l) {
  static std::map<std::pair<int, int>, AmbientResult> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(std::abs(k), l);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, moduli_ambient(key.first, key.second, kInternalSeed))
             .first;
  return it->second;
}

int moduli_ambient_expected_dim(int k, int l) {
  k = std::abs(k);
  const int n = k + 2 * l;
  int dim = 0;
  for (int r = l + 1; 2 * r <= n; ++r) dim += 2 * (2 * n - 4 * r + 1);
  return dim;
}

int j_commuting_span_dim(const SubspaceBasis& basis, int N) {
  const Eigen::MatrixXd J = Jmat(N);
  SpanAccum accum(basis.vec_dim);
  for (int i = 0; i < basis.dim(); ++i) {
    const Eigen::MatrixXd X = sym_unpack(basis.rows.row(i).transpose(), 2 * N);
    accum.add(sym_pack(0.5 * (X - J * X * J)));
  }
  return accum.rank();
}

}  // namespace ehm
