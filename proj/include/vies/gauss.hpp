// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "vies/common.hpp"
#include "vies/geometry.hpp"

namespace vies {

/// 1D Gauss-Legendre nodes/weights on [0, 1], computed by Newton iteration on
/// the Legendre recurrence.
struct Gauss1D {
  std::vector<double> node;
  std::vector<double> weight;
};

inline Gauss1D gauss_legendre_unit(int order) {
  if (order < 1) throw ParameterError("quadrature order must be >= 1");
  Gauss1D q;
  q.node.resize(order);
  q.weight.resize(order);
  int n = order;
  auto legendre = [n](double x, double& p, double& pm1) {
    p = 1.0;
    pm1 = 0.0;
    for (int j = 0; j < n; ++j) {
      double pm2 = pm1;
      pm1 = p;
      p = ((2.0 * j + 1.0) * x * pm1 - j * pm2) / (j + 1.0);
    }
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p = 0.0, pm1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(x, p, pm1);
      double dp = n * (x * p - pm1) / (x * x - 1.0);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(x, p, pm1);
    double dp = n * (x * p - pm1) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1,1] -> [0,1]; nodes come out in decreasing x.
    q.node[i] = 0.5 * (1.0 - x);
    q.weight[i] = 0.5 * w;
    q.node[n - 1 - i] = 0.5 * (1.0 + x);
    q.weight[n - 1 - i] = 0.5 * w;
  }
  return q;
}

inline const Gauss1D& gauss_unit_cached(int order) {
  static std::map<int, Gauss1D> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, gauss_legendre_unit(order)).first;
  return it->second;
}

struct CellPoint {
  Vec3 position;
  double weight;
};

/// Tensor-product Gauss points over an axis-aligned box.
inline std::vector<CellPoint> tensor_rule(const AxisBox& box, int order) {
  const Gauss1D& q = gauss_unit_cached(order);
  Vec3 ext = box.extent();
  double scale = ext.prod();
  std::vector<CellPoint> pts;
  pts.reserve(static_cast<std::size_t>(order) * order * order);
  for (int iz = 0; iz < order; ++iz)
    for (int iy = 0; iy < order; ++iy)
      for (int ix = 0; ix < order; ++ix) {
        Vec3 p = box.lo + ext.cwiseProduct(Vec3(q.node[ix], q.node[iy], q.node[iz]));
        pts.push_back({p, scale * q.weight[ix] * q.weight[iy] * q.weight[iz]});
      }
  return pts;
}

/// Quadrature configuration for cell integrals: smooth order, the boosted
/// order used near kernel singularities, and the activation radius for the
/// singular treatment (in units of h).
struct QuadratureRule {
  int order = 3;
  int near_order = 5;
  double near_field_radius = 2.0;

  QuadratureRule() = default;
  QuadratureRule(int order, int near_order, double near_field_radius)
      : order(order), near_order(near_order), near_field_radius(near_field_radius) {
    if (order < 1 || near_order < 1) throw ParameterError("quadrature orders must be >= 1");
    if (!(near_field_radius >= 0.0))
      throw ParameterError("near field radius must be >= 0");
  }

  /// Points for a unit cell [0,h]^3 (weights sum to h^3).
  std::vector<CellPoint> unit_cell_points(double h) const {
    return tensor_rule(AxisBox{Vec3::Zero(), Vec3::Constant(h)}, order);
  }
};

/// Distance from a point to an axis-aligned box (0 if inside).
inline double distance_to_box(const Vec3& x, const AxisBox& box) {
  Vec3 d = (box.lo - x).cwiseMax(x - box.hi).cwiseMax(Vec3::Zero());
  return d.norm();
}

}  // namespace vies
