// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "vies/common.hpp"
#include "vies/geometry.hpp"

namespace vies {

namespace detail {

// Triple primitive of 1/|u| in the corner-sum (inclusion/exclusion) sense.
// Individual terms are guarded so the formula holds in the limit on faces,
// edges and corners of the box, where prefactors vanish.
inline double newton_primitive(double x, double y, double z) {
  double r = std::sqrt(x * x + y * y + z * z);
  if (r == 0.0) return 0.0;
  double s = 0.0;
  if (x != 0.0 && y != 0.0) s += x * y * std::log(z + r);
  if (y != 0.0 && z != 0.0) s += y * z * std::log(x + r);
  if (z != 0.0 && x != 0.0) s += z * x * std::log(y + r);
  if (x != 0.0) s -= 0.5 * x * x * std::atan(y * z / (x * r));
  if (y != 0.0) s -= 0.5 * y * y * std::atan(z * x / (y * r));
  if (z != 0.0) s -= 0.5 * z * z * std::atan(x * y / (z * r));
  return s;
}

// d/dx of newton_primitive; the prism-attraction primitive.
inline double newton_primitive_dx(double x, double y, double z) {
  double r = std::sqrt(x * x + y * y + z * z);
  if (r == 0.0) return 0.0;
  double s = 0.0;
  if (y != 0.0) s += y * std::log(z + r);
  if (z != 0.0) s += z * std::log(y + r);
  if (x != 0.0) s -= x * std::atan(y * z / (x * r));
  return s;
}

}  // namespace detail

/// Newtonian potential of a unit-density axis-aligned box,
///   N(x) = Integral over box of 1/(4 pi |x - y|) dy,
/// by the classical corner-sum closed form. Valid for x inside, on, or
/// outside the box.
inline double newton_potential_box(const AxisBox& box, const Vec3& x) {
  double sum = 0.0;
  for (int sx = 0; sx <= 1; ++sx)
    for (int sy = 0; sy <= 1; ++sy)
      for (int sz = 0; sz <= 1; ++sz) {
        // + for the all-upper corner, alternating with each lower pick.
        double sign = ((3 - sx - sy - sz) % 2 == 0) ? 1.0 : -1.0;
        Vec3 corner(sx ? box.hi.x() : box.lo.x(), sy ? box.hi.y() : box.lo.y(),
                    sz ? box.hi.z() : box.lo.z());
        Vec3 u = corner - x;
        sum += sign * detail::newton_primitive(u.x(), u.y(), u.z());
      }
  return sum / (4.0 * pi);
}

/// Gradient (w.r.t. x) of newton_potential_box.
inline Vec3 newton_potential_grad_box(const AxisBox& box, const Vec3& x) {
  Vec3 grad = Vec3::Zero();
  for (int sx = 0; sx <= 1; ++sx)
    for (int sy = 0; sy <= 1; ++sy)
      for (int sz = 0; sz <= 1; ++sz) {
        double sign = ((3 - sx - sy - sz) % 2 == 0) ? 1.0 : -1.0;
        Vec3 corner(sx ? box.hi.x() : box.lo.x(), sy ? box.hi.y() : box.lo.y(),
                    sz ? box.hi.z() : box.lo.z());
        Vec3 u = corner - x;
        grad.x() += sign * detail::newton_primitive_dx(u.x(), u.y(), u.z());
        grad.y() += sign * detail::newton_primitive_dx(u.y(), u.z(), u.x());
        grad.z() += sign * detail::newton_primitive_dx(u.z(), u.x(), u.y());
      }
  // d/dx_a enters through u = corner - x, hence the overall minus.
  return grad / (-4.0 * pi);
}

}  // namespace vies
