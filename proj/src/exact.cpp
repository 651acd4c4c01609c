#include "ehm/exact.hpp"

#include <stdexcept>

namespace ehm::exact {

Int binom_exact(int n, int p) {
  if (n < 0 || p < 0 || p > n) return 0;
  p = std::min(p, n - p);
  Int acc = 1;
  for (int i = 1; i <= p; ++i) acc = acc * (n - p + i) / i;
  return acc;
}

bool is_zero(const RatTensor& t) {
  for (const auto& x : t.c)
    if (x != 0) return false;
  return true;
}

bool equal(const RatTensor& a, const RatTensor& b) {
  if (a.n != b.n) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

RatTensor symmetrized_monomial(int n, int p, int q) {
  if (p < 0 || q < 0 || p > n || q > n)
    throw std::invalid_argument("symmetrized_monomial: index out of range");
  RatTensor t(n);
  t.at(p, q) += 1;
  t.at(q, p) += 1;
  return t;
}

RatTensor contract(const RatTensor& t) {
  const int n = t.n;
  if (n < 1) throw std::invalid_argument("contract: level must be >= 1");
  RatTensor out(n - 1);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const Rat& c = t.at(p, q);
      if (c == 0) continue;
      // E_{p,q} -> E'_{p,q-1} - E'_{p-1,q}; exponents leaving the valid
      // range contribute nothing.
      if (p <= n - 1 && q - 1 >= 0) out.at(p, q - 1) += c;
      if (p - 1 >= 0 && q <= n - 1) out.at(p - 1, q) -= c;
    }
  }
  return out;
}

RatTensor contract_power_iterated(const RatTensor& t, int r) {
  if (2 * r > t.n)
    throw std::invalid_argument("contract_power_iterated: 2r exceeds level");
  RatTensor out = t;
  for (int i = 0; i < 2 * r; ++i) out = contract(out);
  return out;
}

RatTensor contract_power_closed(int n, int p, int q, int r) {
  if (2 * r > n)
    throw std::invalid_argument("contract_power_closed: 2r exceeds level");
  const int m = n - 2 * r;
  RatTensor out(m);
  for (int s = 0; s <= 2 * r; ++s) {
    if (s > n - p || s > q || s < 2 * r - p || s < 2 * r + q - n) continue;
    const Rat coef = ((s % 2) ? Rat(-1) : Rat(1)) * Rat(binom_exact(2 * r, s));
    const int p1 = p + s - 2 * r;  // e2-exponent of the first factor
    const int q1 = q - s;          // e2-exponent of the second factor
    out.at(p1, q1) += coef;
    out.at(q1, p1) += coef;
  }
  return out;
}

int contraction_kernel_dim(int n) {
  if (n < 1) throw std::invalid_argument("contraction_kernel_dim: n >= 1");
  const int cols = (n + 1) * (n + 1);
  const int rows = n * n;
  // Assemble the matrix of the contraction on basis tensors and compute its
  // rank by fraction-free Gaussian elimination over Q.
  std::vector<std::vector<Rat>> M(static_cast<size_t>(rows),
                                  std::vector<Rat>(static_cast<size_t>(cols)));
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      RatTensor e(n);
      e.at(p, q) = 1;
      const RatTensor img = contract(e);
      const int col = p * (n + 1) + q;
      for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= n - 1; ++b)
          M[static_cast<size_t>(a) * n + b][static_cast<size_t>(col)] =
              img.at(a, b);
    }
  }
  int rank = 0;
  int lead = 0;
  for (int row = 0; row < rows && lead < cols; ++row) {
    int pivot = -1;
    for (; lead < cols; ++lead) {
      for (int i = row; i < rows; ++i) {
        if (M[static_cast<size_t>(i)][static_cast<size_t>(lead)] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot >= 0) break;
    }
    if (pivot < 0) break;
    std::swap(M[static_cast<size_t>(row)], M[static_cast<size_t>(pivot)]);
    const Rat pv = M[static_cast<size_t>(row)][static_cast<size_t>(lead)];
    for (int i = row + 1; i < rows; ++i) {
      const Rat f = M[static_cast<size_t>(i)][static_cast<size_t>(lead)] / pv;
      if (f == 0) continue;
      for (int j = lead; j < cols; ++j)
        M[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * M[static_cast<size_t>(row)][static_cast<size_t>(j)];
    }
    ++rank;
    ++lead;
  }
  return cols - rank;
}

}  // namespace ehm::exact
