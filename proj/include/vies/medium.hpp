// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vies/common.hpp"

namespace vies {

/// Time convention: fields carry exp(-i omega t). With it the complex interior
/// permittivity eps' = eps + i sigma/omega has Im >= 0 for sigma >= 0, and the
/// outgoing kernel is exp(ik|x|)/(4 pi |x|).
struct MediumParams {
  double omega = 0.0;   // angular frequency, rad/s
  double eps0 = vacuum_eps0;  // exterior permittivity, F/m
  double mu0 = vacuum_mu0;    // permeability (everywhere), H/m
  double eps = vacuum_eps0;   // interior permittivity, F/m
  double sigma = 0.0;         // interior conductivity, S/m

  Complex eps_prime() const { return Complex(eps, sigma / omega); }
};

struct Wavenumbers {
  double k = 0.0;       // exterior wavenumber, +sqrt(omega^2 eps0 mu0)
  Complex K{0.0, 0.0};  // interior wavenumber, branch Im K >= 0
  Complex gamma{0.0, 0.0};   // (K^2 - k^2)/k^2
  Complex contrast{0.0, 0.0};  // p = K^2 - k^2

  bool lossless() const { return gamma.imag() == 0.0; }
};

/// Principal square root restricted to the upper half plane (Im >= 0), so
/// waves decay in lossy media.
inline Complex sqrt_upper(Complex z) {
  Complex r = std::sqrt(z);
  if (r.imag() < 0.0) r = -r;
  return r;
}

inline Wavenumbers derive_wavenumbers(const MediumParams& m) {
  require_finite(m.omega, "omega");
  require_finite(m.eps0, "eps0");
  require_finite(m.mu0, "mu0");
  require_finite(m.eps, "eps");
  require_finite(m.sigma, "sigma");
  if (m.omega <= 0.0) throw ParameterError("omega must be > 0");
  if (m.eps0 <= 0.0) throw ParameterError("eps0 must be > 0");
  if (m.mu0 <= 0.0) throw ParameterError("mu0 must be > 0");
  if (m.sigma < 0.0) throw ParameterError("sigma must be >= 0");

  Wavenumbers w;
  double k2 = m.omega * m.omega * m.eps0 * m.mu0;
  Complex K2 = m.omega * m.omega * m.eps_prime() * m.mu0;
  w.k = std::sqrt(k2);
  // Exact zero contrast when the interior matches the exterior.
  if (m.eps == m.eps0 && m.sigma == 0.0) {
    w.K = Complex(w.k, 0.0);
    w.gamma = Complex(0.0, 0.0);
    w.contrast = Complex(0.0, 0.0);
    return w;
  }
  w.K = sqrt_upper(K2);
  w.contrast = K2 - k2;
  w.gamma = w.contrast / k2;
  return w;
}

/// Builds a medium from omega and relative interior permittivity (eps_r may be
/// complex; its imaginary part is folded into sigma via eps' = eps + i sigma/omega).
inline MediumParams medium_from_relative(double omega, Complex eps_r,
                                         double eps0 = vacuum_eps0,
                                         double mu0 = vacuum_mu0) {
  MediumParams m;
  m.omega = omega;
  m.eps0 = eps0;
  m.mu0 = mu0;
  m.eps = eps_r.real() * eps0;
  m.sigma = eps_r.imag() * eps0 * omega;
  return m;
}

}  // namespace vies
