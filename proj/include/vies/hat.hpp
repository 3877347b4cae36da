// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "vies/common.hpp"
#include "vies/geometry.hpp"

namespace vies {

/// 1D nodal hat of half-width h centered at 0.
inline double hat1(double t, double h) {
  double a = 1.0 - std::abs(t) / h;
  return a > 0.0 ? a : 0.0;
}

/// One-sided derivative of hat1 (undefined on the knots; callers only sample
/// strictly inside cells).
inline double dhat1(double t, double h) {
  if (t <= -h || t >= h) return 0.0;
  return t < 0.0 ? 1.0 / h : -1.0 / h;
}

/// Autocorrelation of hat1: rho(s) = Integral hat1(t) hat1(t-s) dt.
/// Piecewise cubic, even, supported on |s| <= 2h; rho(0) = 2h/3, rho(h) = h/6.
inline double hat_overlap1(double s, double h) {
  double u = std::abs(s) / h;
  if (u >= 2.0) return 0.0;
  if (u <= 1.0) return h * (2.0 / 3.0 - u * u + 0.5 * u * u * u);
  double v = 2.0 - u;
  return h * v * v * v / 6.0;
}

/// Trilinear polynomial on a cell, given by its 8 corner values.
/// Corner index bit 0 -> +x, bit 1 -> +y, bit 2 -> +z.
struct TrilinearDensity {
  std::array<double, 8> corner{};

  static TrilinearDensity constant(double v) {
    TrilinearDensity d;
    d.corner.fill(v);
    return d;
  }

  bool zero() const {
    for (double v : corner)
      if (v != 0.0) return false;
    return true;
  }

  /// Value at local coordinates u in [0,1]^3 (polynomial extension outside).
  double value_local(const Vec3& u) const {
    double wx0 = 1.0 - u.x(), wx1 = u.x();
    double wy0 = 1.0 - u.y(), wy1 = u.y();
    double wz0 = 1.0 - u.z(), wz1 = u.z();
    return wz0 * (wy0 * (wx0 * corner[0] + wx1 * corner[1]) +
                  wy1 * (wx0 * corner[2] + wx1 * corner[3])) +
           wz1 * (wy0 * (wx0 * corner[4] + wx1 * corner[5]) +
                  wy1 * (wx0 * corner[6] + wx1 * corner[7]));
  }

  double value_in(const AxisBox& box, const Vec3& y) const {
    Vec3 u = (y - box.lo).cwiseQuotient(box.extent());
    return value_local(u);
  }
};

}  // namespace vies
