// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vies/common.hpp"

namespace vies {

struct AxisBox {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  Vec3 center() const { return 0.5 * (lo + hi); }
  Vec3 extent() const { return hi - lo; }
  bool contains(const Vec3& x) const {
    return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
  }
};

/// Surface sample used by the boundary diagnostic: point on S with outward normal.
struct SurfacePoint {
  Vec3 position;
  Vec3 normal;  // unit, pointing into the exterior
};

/// The scatterer body D: a pure inside/outside predicate plus a finite
/// bounding box. Canonical shapes also expose an analytic surface sampler;
/// custom predicates do not, and the boundary diagnostic is skipped for them.
class ScattererShape {
 public:
  using Predicate = std::function<bool(const Vec3&)>;
  using SurfaceSampler = std::function<SurfacePoint(const Vec3& unit_dir)>;

  ScattererShape(std::string description, AxisBox bounding_box, Predicate inside,
                 SurfaceSampler surface = nullptr)
      : description_(std::move(description)),
        box_(bounding_box),
        inside_(std::move(inside)),
        surface_(std::move(surface)) {
    if (!(box_.extent().array() > 0.0).all())
      throw ParameterError("bounding box must have positive extent");
    if (!box_.extent().allFinite()) throw ParameterError("bounding box must be finite");
  }

  bool inside(const Vec3& x) const { return box_.contains(x) && inside_(x); }
  const AxisBox& bounding_box() const { return box_; }
  const std::string& description() const { return description_; }

  bool has_surface_sampler() const { return static_cast<bool>(surface_); }
  SurfacePoint surface_point(const Vec3& unit_dir) const {
    if (!surface_) throw ParameterError("shape has no analytic surface sampler");
    return surface_(unit_dir);
  }

  static ScattererShape sphere(double radius, const Vec3& center = Vec3::Zero()) {
    if (!(radius > 0.0)) throw ParameterError("sphere radius must be > 0");
    AxisBox box{center.array() - radius, center.array() + radius};
    auto inside = [center, radius](const Vec3& x) {
      return (x - center).squaredNorm() < radius * radius;
    };
    auto surf = [center, radius](const Vec3& dir) {
      Vec3 n = dir.normalized();
      return SurfacePoint{center + radius * n, n};
    };
    return ScattererShape("sphere", box, inside, surf);
  }

  static ScattererShape box(const Vec3& half_extent, const Vec3& center = Vec3::Zero()) {
    if (!(half_extent.array() > 0.0).all())
      throw ParameterError("box half extents must be > 0");
    AxisBox bb{center - half_extent, center + half_extent};
    auto inside = [center, half_extent](const Vec3& x) {
      return ((x - center).cwiseAbs().array() < half_extent.array()).all();
    };
    auto surf = [center, half_extent](const Vec3& dir) {
      Vec3 d = dir.normalized();
      // Scale the ray until it exits the box; normal from the face hit.
      double t = std::numeric_limits<double>::infinity();
      int face = 0;
      for (int a = 0; a < 3; ++a) {
        if (d[a] == 0.0) continue;
        double ta = half_extent[a] / std::abs(d[a]);
        if (ta < t) {
          t = ta;
          face = a;
        }
      }
      Vec3 p = center + t * d;
      Vec3 n = Vec3::Zero();
      n[face] = d[face] > 0.0 ? 1.0 : -1.0;
      return SurfacePoint{p, n};
    };
    return ScattererShape("box", bb, inside, surf);
  }

  static ScattererShape ellipsoid(const Vec3& semi_axes, const Vec3& center = Vec3::Zero()) {
    if (!(semi_axes.array() > 0.0).all())
      throw ParameterError("ellipsoid semi-axes must be > 0");
    AxisBox bb{center - semi_axes, center + semi_axes};
    auto inside = [center, semi_axes](const Vec3& x) {
      Vec3 u = (x - center).cwiseQuotient(semi_axes);
      return u.squaredNorm() < 1.0;
    };
    auto surf = [center, semi_axes](const Vec3& dir) {
      Vec3 d = dir.normalized();
      // Point where the ray from the center exits the ellipsoid.
      double s = 1.0 / d.cwiseQuotient(semi_axes).norm();
      Vec3 p = center + s * d;
      Vec3 n = (p - center).cwiseQuotient(semi_axes.cwiseProduct(semi_axes)).normalized();
      return SurfacePoint{p, n};
    };
    return ScattererShape("ellipsoid", bb, inside, surf);
  }

  static ScattererShape custom(std::string description, AxisBox box, Predicate inside) {
    return ScattererShape(std::move(description), box, std::move(inside));
  }

 private:
  std::string description_;
  AxisBox box_;
  Predicate inside_;
  SurfaceSampler surface_;
};

/// Uniform axis-aligned voxelization of D. Cells are h^3 cubes; a cell is
/// interior iff its center satisfies the inside predicate. Interior nodes are
/// grid nodes all of whose 8 adjacent cells are interior; they carry the
/// basis (which therefore vanishes on the staircase boundary).
class ScattererGrid {
 public:
  Vec3 origin = Vec3::Zero();
  double h = 0.0;
  Vec3i dims = Vec3i::Zero();  // number of cells per axis

  std::vector<Vec3i> interior_cells;
  std::vector<Vec3i> interior_nodes;

  Vec3 node_position(const Vec3i& n) const { return origin + h * n.cast<double>(); }
  Vec3 cell_center(const Vec3i& c) const {
    return origin + h * (c.cast<double>() + Vec3::Constant(0.5));
  }
  AxisBox cell_box(const Vec3i& c) const {
    Vec3 lo = origin + h * c.cast<double>();
    return AxisBox{lo, lo + Vec3::Constant(h)};
  }
  double cell_volume() const { return h * h * h; }

  bool cell_index_valid(const Vec3i& c) const {
    return (c.array() >= 0).all() && (c.array() < dims.array()).all();
  }

  bool cell_interior(const Vec3i& c) const {
    if (!cell_index_valid(c)) return false;
    int lin = (c.z() * dims.y() + c.y()) * dims.x() + c.x();
    return cell_mask_[static_cast<std::size_t>(lin)];
  }

  /// Cell containing x, clamped classification; nullopt if outside the grid.
  std::optional<Vec3i> locate_cell(const Vec3& x) const {
    Vec3 u = (x - origin) / h;
    Vec3i c(static_cast<int>(std::floor(u.x())), static_cast<int>(std::floor(u.y())),
            static_cast<int>(std::floor(u.z())));
    if (!cell_index_valid(c)) return std::nullopt;
    return c;
  }

  /// True when x lies in an interior cell (the discrete D).
  bool inside_voxelized(const Vec3& x) const {
    auto c = locate_cell(x);
    return c && cell_interior(*c);
  }

  /// True when some cell within the 3x3x3 cell neighborhood of x differs in
  /// interior status from x's own cell: x is within ~h of the staircase surface.
  bool near_staircase_boundary(const Vec3& x) const {
    auto c0 = locate_cell(x);
    bool base = c0 ? cell_interior(*c0) : false;
    Vec3i c = c0 ? *c0 : Vec3i::Zero();
    if (!c0) return false;
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (cell_interior(c + Vec3i(dx, dy, dz)) != base) return true;
    return false;
  }

  friend ScattererGrid voxelize(const ScattererShape& shape, double h);

 private:
  std::vector<bool> cell_mask_;
};

/// Voxelizes the shape on a grid of spacing h centered on the bounding box.
/// Deterministic for identical inputs. Throws GeometryError if no cell center
/// lies inside D.
inline ScattererGrid voxelize(const ScattererShape& shape, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("grid spacing must be > 0");
  const AxisBox& bb = shape.bounding_box();
  if (h >= bb.extent().minCoeff())
    throw ParameterError("grid spacing must be smaller than the shortest bounding box edge");

  ScattererGrid g;
  g.h = h;
  for (int a = 0; a < 3; ++a) {
    // Round to the nearest cell count so an exactly commensurate box tiles
    // exactly; otherwise cover the box symmetrically.
    double edge = bb.extent()[a];
    int n = static_cast<int>(std::ceil(edge / h - 1e-9));
    g.dims[a] = n;
  }
  g.origin = bb.center() - 0.5 * h * g.dims.cast<double>();

  g.cell_mask_.assign(static_cast<std::size_t>(g.dims.x()) * g.dims.y() * g.dims.z(), false);
  for (int cz = 0; cz < g.dims.z(); ++cz)
    for (int cy = 0; cy < g.dims.y(); ++cy)
      for (int cx = 0; cx < g.dims.x(); ++cx) {
        Vec3i c(cx, cy, cz);
        if (shape.inside(g.cell_center(c))) {
          g.cell_mask_[static_cast<std::size_t>((cz * g.dims.y() + cy) * g.dims.x() + cx)] =
              true;
          g.interior_cells.push_back(c);
        }
      }
  if (g.interior_cells.empty()) throw GeometryError("empty scatterer: no interior cells");

  // Nodes with all 8 adjacent cells interior. Node (i,j,k) touches cells
  // (i-1..i, j-1..j, k-1..k), so candidates run over 1..dims-1 per axis.
  for (int nz = 1; nz < g.dims.z(); ++nz)
    for (int ny = 1; ny < g.dims.y(); ++ny)
      for (int nx = 1; nx < g.dims.x(); ++nx) {
        bool all = true;
        for (int dz = -1; dz <= 0 && all; ++dz)
          for (int dy = -1; dy <= 0 && all; ++dy)
            for (int dx = -1; dx <= 0 && all; ++dx)
              all = g.cell_interior(Vec3i(nx + dx, ny + dy, nz + dz));
        if (all) g.interior_nodes.push_back(Vec3i(nx, ny, nz));
      }
  return g;
}

}  // namespace vies
