// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vies/common.hpp"
#include "vies/medium.hpp"

namespace vies {

/// Incident plane wave E0(x) = amplitude * e * exp(i k d.x), with real unit
/// direction d and complex unit polarization e, e.d = 0 (unconjugated dot).
struct PlaneWave {
  Vec3 direction = Vec3::UnitZ();
  CVec3 polarization = CVec3::UnitX();
  Complex amplitude{1.0, 0.0};

  PlaneWave() = default;
  PlaneWave(const Vec3& d, const CVec3& e, Complex amp = Complex(1.0, 0.0))
      : direction(d), polarization(e), amplitude(amp) {
    validate();
  }

  void validate() const {
    if (std::abs(direction.norm() - 1.0) > 1e-12)
      throw ParameterError("plane wave direction must be a unit vector");
    if (std::abs(polarization.norm() - 1.0) > 1e-12)
      throw ParameterError("plane wave polarization must be a unit vector");
    Complex ed = polarization.dot(direction.cast<Complex>().conjugate());
    // Eigen's dot conjugates the first argument; undo to get the plain e.d.
    ed = std::conj(ed);
    if (std::abs(ed) > 1e-12)
      throw ParameterError("plane wave polarization must be orthogonal to direction");
  }
};

inline CVec3 incident_field(const PlaneWave& pw, double k, const Vec3& x) {
  Complex phase = std::exp(iu * (k * pw.direction.dot(x)));
  return pw.amplitude * phase * pw.polarization;
}

/// H of the incident wave: curl E0 / (i omega mu0) = (k/(omega mu0)) (d x e) E0-phase.
inline CVec3 incident_field_H(const PlaneWave& pw, double k, double omega, double mu0,
                              const Vec3& x) {
  Complex phase = std::exp(iu * (k * pw.direction.dot(x)));
  CVec3 dxe = pw.direction.cast<Complex>().cross(pw.polarization);
  return (k / (omega * mu0)) * pw.amplitude * phase * dxe;
}

}  // namespace vies
