// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vies/common.hpp"

namespace vies {

/// Free-space outgoing scalar kernel g(x) = exp(ik|x|)/(4 pi |x|).
inline Complex scalar_green(const Vec3& x, double k) {
  double r = x.norm();
  if (r == 0.0) throw SingularityError("scalar_green evaluated at |x| = 0");
  return std::exp(iu * (k * r)) / (4.0 * pi * r);
}

/// grad g = g(r) (ik - 1/r) x/r. Odd under x -> -x.
inline CVec3 grad_scalar_green(const Vec3& x, double k) {
  double r = x.norm();
  if (r == 0.0) throw SingularityError("grad_scalar_green evaluated at |x| = 0");
  Complex g = std::exp(iu * (k * r)) / (4.0 * pi * r);
  Complex radial = g * (iu * k - 1.0 / r);
  return (radial / r) * x.cast<Complex>();
}

/// Radial decomposition of the second derivatives,
///   d_i d_j g = a(r) delta_ij + b(r) rhat_i rhat_j,
/// with a = g (ikr - 1)/r^2 and b = g (3 - 3ikr - k^2 r^2)/r^2.
/// (Check: trace = 3a + b = -k^2 g, the Helmholtz identity away from 0.)
struct GreenRadial {
  Complex g;
  Complex a;
  Complex b;
};

inline GreenRadial green_radial(double r, double k) {
  Complex g = std::exp(iu * (k * r)) / (4.0 * pi * r);
  double r2 = r * r;
  Complex ikr = iu * (k * r);
  GreenRadial out;
  out.g = g;
  out.a = g * (ikr - 1.0) / r2;
  out.b = g * (3.0 - 3.0 * ikr - k * k * r2) / r2;
  return out;
}

/// Hessian of g as a full 3x3 (symmetric) matrix.
inline Mat3c hessian_scalar_green(const Vec3& x, double k) {
  double r = x.norm();
  if (r == 0.0) throw SingularityError("hessian_scalar_green evaluated at |x| = 0");
  GreenRadial rad = green_radial(r, k);
  Vec3 rh = x / r;
  Mat3c out = rad.b * (rh * rh.transpose()).cast<Complex>();
  out.diagonal().array() += rad.a;
  return out;
}

/// Symmetric complex 3x3 value of the dyadic kernel. Construction fills both
/// triangles from one, so G_ij == G_ji holds exactly.
struct DyadicValue {
  Mat3c entries;

  static DyadicValue from_lower(const Mat3c& m) {
    DyadicValue v;
    v.entries = m;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) v.entries(i, j) = v.entries(j, i);
    return v;
  }
};

/// Dyadic kernel G_ij(x) = g delta_ij + (1/k^2) d_i d_j g, via the radial
/// closed form above.
inline DyadicValue green_tensor(const Vec3& x, double k) {
  double r = x.norm();
  if (r == 0.0) throw SingularityError("green_tensor evaluated at |x| = 0");
  if (!(k > 0.0)) throw ParameterError("green_tensor requires k > 0");
  GreenRadial rad = green_radial(r, k);
  double k2 = k * k;
  Vec3 rh = x / r;
  Mat3c m = (rad.b / k2) * (rh * rh.transpose()).cast<Complex>();
  m.diagonal().array() += rad.g + rad.a / k2;
  return DyadicValue::from_lower(m);
}

/// Fourier-space form: Gt_ij = delta_ij/((2pi)^3 (xi^2-k^2))
///                            - xi_i xi_j/((2pi)^3 k^2 (xi^2-k^2)).
/// Derivation-level cross-check only; never used on the main solve path.
inline DyadicValue green_tensor_fourier(const Vec3& xi, double k) {
  if (!(k > 0.0)) throw ParameterError("green_tensor_fourier requires k > 0");
  double xi2 = xi.squaredNorm();
  double denom = xi2 - k * k;
  if (denom == 0.0)
    throw SingularityError("green_tensor_fourier evaluated on the resonant sphere |xi| = k");
  double c = 1.0 / (8.0 * pi * pi * pi);
  Mat3c m = (-c / (k * k * denom)) * (xi * xi.transpose()).cast<Complex>();
  m.diagonal().array() += c / denom;
  return DyadicValue::from_lower(m);
}

}  // namespace vies
