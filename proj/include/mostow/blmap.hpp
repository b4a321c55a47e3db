#pragma once

#include <span>
#include <variant>
#include <vector>

#include "mostow/boundary_homeo.hpp"
#include "mostow/geometry.hpp"

namespace mostow {

// Horizontal stretch (z,t) -> (Az,t) for an invertible real 2x2 matrix A.
// Pulling the metric back gives pointwise length distortion between the
// singular values of A, so max(sigma_max, 1/sigma_min, 1) certifies the map.
struct LinearStretch {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  double sigma_min = 1, sigma_max = 1;

  static LinearStretch from_matrix(double m00, double m01, double m10, double m11);
  static LinearStretch diag(double sx, double sy) { return from_matrix(sx, 0, 0, sy); }

  Complex apply(Complex z) const;
  double bl_constant() const;
};

using BLPrimitive = std::variant<MobiusMap, LinearStretch>;

// Composition of certified bi-Lipschitz primitives (isometries and stretches),
// applied in sequence order, with the product upper bound K.
struct BLMap {
  std::vector<BLPrimitive> primitives;
  double K = 1.0;

  static BLMap identity() { return {}; }
  PointH3 operator()(const PointH3& p) const;
};

BLMap make_stretch(double m00, double m01, double m10, double m11);
BLMap make_stretch_diag(double sx, double sy);
BLMap make_isometry(const MobiusMap& g);
BLMap compose_bl(std::span<const BLMap> maps);

// Closed-form boundary extension: stretches become their planar affine
// action, isometry primitives keep their sphere action.
BoundaryHomeo boundary_of_bl(const BLMap& H);

// Pushes (zeta, t) (or (0, 1/t) for zeta = infinity) through H and reads off
// a sphere estimate per height; estimates converge to boundary_of_bl(H)(zeta).
std::vector<SpherePoint> estimate_boundary_extension(const BLMap& H,
                                                     const SpherePoint& zeta,
                                                     std::span<const double> heights);

}  // namespace mostow
