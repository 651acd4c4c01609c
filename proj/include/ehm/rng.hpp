#pragma once

// Deterministic random number generation. A fixed, self-contained generator
// (xoshiro256** seeded via splitmix64) with an explicit Box-Muller transform
// is used instead of <random> distributions so that identical seeds produce
// identical streams on every platform and standard library.

#include <array>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace ehm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the xoshiro state.
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) {
      return (v << k) | (v >> (64 - k));
    };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (pairs cached).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  // Haar-uniform SU(2) element via a normalized Gaussian quaternion.
  Eigen::Matrix2cd haar_su2() {
    double q[4];
    double nrm2 = 0.0;
    do {
      nrm2 = 0.0;
      for (double& qi : q) {
        qi = gauss();
        nrm2 += qi * qi;
      }
    } while (nrm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(nrm2);
    const std::complex<double> a(q[0] * inv, q[1] * inv);
    const std::complex<double> b(q[2] * inv, q[3] * inv);
    Eigen::Matrix2cd g;
    g << a, -std::conj(b), b, std::conj(a);
    return g;
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ehm
