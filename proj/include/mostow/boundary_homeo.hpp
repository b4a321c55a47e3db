#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mostow/geometry.hpp"

namespace mostow {

// z -> T(z) + w for an invertible real-linear T of the plane.
struct RealAffine {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Complex shift{};

  static RealAffine from_matrix(double m00, double m01, double m10, double m11,
                                Complex shift = {});
  static RealAffine diag(double sx, double sy) { return from_matrix(sx, 0, 0, sy); }
  Complex apply(Complex z) const;
  Complex apply_inverse(Complex z) const;
  double det() const { return m00 * m11 - m01 * m10; }
};

// z -> z |z|^(a-1), a > 0; fixes 0 and infinity.
struct RadialPower {
  double exponent = 1.0;
  Complex apply(Complex z) const;
  Complex apply_inverse(Complex z) const;
};

enum class ShearProfile { Abs, Square, Sine, Cantor };
double shear_profile_value(ShearProfile p, double x);
std::string shear_profile_name(ShearProfile p);
ShearProfile shear_profile_by_name(const std::string& name);

// x + iy -> x + i(y + sign*g(x)); fixes infinity.
struct Shear {
  ShearProfile profile = ShearProfile::Abs;
  double sign = 1.0;
  Complex apply(Complex z) const;
  Complex apply_inverse(Complex z) const { return Complex(z.real(), z.imag() - sign * shear_profile_value(profile, z.real())); }
};

using BoundaryPrimitive = std::variant<MobiusMap, RealAffine, RadialPower, Shear>;

// Sphere homeomorphism given as a pipeline of invertible primitives, applied
// in sequence order.
struct BoundaryHomeo {
  std::vector<BoundaryPrimitive> primitives;

  static BoundaryHomeo identity() { return {}; }
  static BoundaryHomeo single(BoundaryPrimitive p) { return {{std::move(p)}}; }

  SpherePoint apply(const SpherePoint& p) const;
  Complex apply(Complex z) const;  // throws if the image is infinite
  SpherePoint apply_inverse(const SpherePoint& p) const;
  BoundaryHomeo then(const BoundaryHomeo& next) const;
  bool fixes_infinity() const;
};

}  // namespace mostow
