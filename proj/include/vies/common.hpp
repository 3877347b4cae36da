// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace vies {

using Real = double;
using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;
using Vec3i = Eigen::Vector3i;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr Complex iu{0.0, 1.0};

// Vacuum constants (SI). Configs may override eps0/mu0.
inline constexpr double vacuum_eps0 = 8.8541878128e-12;  // F/m
inline constexpr double vacuum_mu0 = 1.25663706212e-6;   // H/m

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or non-finite physical/numerical parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated at its singular point.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Voxelization produced no interior cells, or grid too coarse for a basis.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Iteration cap reached; carries the best residual seen.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& msg, double best_residual)
      : Error(msg), best_residual(best_residual) {}
  double best_residual;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a location the representation does not support
/// (e.g. H inside the scatterer).
class UnsupportedLocationError : public Error {
 public:
  using Error::Error;
};

/// Deterministic uniform doubles in [0,1) from a 64-bit splitmix stream.
/// Used instead of std::uniform_real_distribution so that seeded sampling
/// is reproducible across standard library implementations.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : state_(seed) {}

  double next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * next(); }

  Vec3 point(const Vec3& lo, const Vec3& hi) {
    return Vec3(range(lo.x(), hi.x()), range(lo.y(), hi.y()), range(lo.z(), hi.z()));
  }

  /// Uniform direction on the unit sphere.
  Vec3 direction() {
    double z = range(-1.0, 1.0);
    double phi = range(0.0, 2.0 * pi);
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(s * std::cos(phi), s * std::sin(phi), z);
  }

 private:
  std::uint64_t state_;
};

/// Worker count for parallel loops: VIESCAT_THREADS if set, else 1.
inline unsigned thread_count() {
  if (const char* env = std::getenv("VIESCAT_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

/// Chunked parallel loop over [0, n). Deterministic result layout: the body
/// must write only to slot i. Runs serially when one worker is configured.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

}  // namespace vies
