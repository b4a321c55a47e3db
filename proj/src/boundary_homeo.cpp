#include "mostow/boundary_homeo.hpp"

#include <cmath>
#include <stdexcept>

#include "mostow/scalar_functions.hpp"

namespace mostow {

RealAffine RealAffine::from_matrix(double m00, double m01, double m10, double m11,
                                   Complex shift) {
  RealAffine a{m00, m01, m10, m11, shift};
  if (std::abs(a.det()) < 1e-14)
    throw std::invalid_argument("RealAffine: singular matrix");
  return a;
}

Complex RealAffine::apply(Complex z) const {
  return Complex(m00 * z.real() + m01 * z.imag(), m10 * z.real() + m11 * z.imag()) + shift;
}

Complex RealAffine::apply_inverse(Complex z) const {
  Complex w = z - shift;
  double inv = 1.0 / det();
  return Complex(inv * (m11 * w.real() - m01 * w.imag()),
                 inv * (-m10 * w.real() + m00 * w.imag()));
}

Complex RadialPower::apply(Complex z) const {
  double r = std::abs(z);
  if (r == 0.0) return z;
  return z * std::pow(r, exponent - 1.0);
}

Complex RadialPower::apply_inverse(Complex z) const {
  double r = std::abs(z);
  if (r == 0.0) return z;
  return z * std::pow(r, 1.0 / exponent - 1.0);
}

double shear_profile_value(ShearProfile p, double x) {
  switch (p) {
    case ShearProfile::Abs: return std::abs(x);
    case ShearProfile::Square: return x * x;
    case ShearProfile::Sine: return std::sin(x);
    case ShearProfile::Cantor: return cantor_staircase(x, 10);
  }
  throw std::logic_error("unreachable");
}

std::string shear_profile_name(ShearProfile p) {
  switch (p) {
    case ShearProfile::Abs: return "abs";
    case ShearProfile::Square: return "square";
    case ShearProfile::Sine: return "sine";
    case ShearProfile::Cantor: return "cantor";
  }
  throw std::logic_error("unreachable");
}

ShearProfile shear_profile_by_name(const std::string& name) {
  if (name == "abs") return ShearProfile::Abs;
  if (name == "square") return ShearProfile::Square;
  if (name == "sine") return ShearProfile::Sine;
  if (name == "cantor") return ShearProfile::Cantor;
  throw std::invalid_argument("unknown shear profile: " + name);
}

Complex Shear::apply(Complex z) const {
  return Complex(z.real(), z.imag() + sign * shear_profile_value(profile, z.real()));
}

namespace {

SpherePoint apply_primitive(const BoundaryPrimitive& prim, const SpherePoint& p) {
  if (const auto* mob = std::get_if<MobiusMap>(&prim)) return (*mob)(p);
  if (p.is_infinity()) return p;  // the planar primitives all fix infinity
  Complex z = p.value();
  if (const auto* aff = std::get_if<RealAffine>(&prim)) return SpherePoint(aff->apply(z));
  if (const auto* pow = std::get_if<RadialPower>(&prim)) return SpherePoint(pow->apply(z));
  return SpherePoint(std::get<Shear>(prim).apply(z));
}

SpherePoint apply_primitive_inverse(const BoundaryPrimitive& prim, const SpherePoint& p) {
  if (const auto* mob = std::get_if<MobiusMap>(&prim)) return mob->inverse()(p);
  if (p.is_infinity()) return p;
  Complex z = p.value();
  if (const auto* aff = std::get_if<RealAffine>(&prim)) return SpherePoint(aff->apply_inverse(z));
  if (const auto* pow = std::get_if<RadialPower>(&prim)) return SpherePoint(pow->apply_inverse(z));
  return SpherePoint(std::get<Shear>(prim).apply_inverse(z));
}

}  // namespace

SpherePoint BoundaryHomeo::apply(const SpherePoint& p) const {
  SpherePoint cur = p;
  for (const BoundaryPrimitive& prim : primitives) cur = apply_primitive(prim, cur);
  return cur;
}

Complex BoundaryHomeo::apply(Complex z) const {
  SpherePoint image = apply(SpherePoint(z));
  if (image.is_infinity()) throw std::domain_error("BoundaryHomeo: image at infinity");
  return image.value();
}

SpherePoint BoundaryHomeo::apply_inverse(const SpherePoint& p) const {
  SpherePoint cur = p;
  for (auto it = primitives.rbegin(); it != primitives.rend(); ++it)
    cur = apply_primitive_inverse(*it, cur);
  return cur;
}

BoundaryHomeo BoundaryHomeo::then(const BoundaryHomeo& next) const {
  BoundaryHomeo out = *this;
  out.primitives.insert(out.primitives.end(), next.primitives.begin(),
                        next.primitives.end());
  return out;
}

bool BoundaryHomeo::fixes_infinity() const {
  return apply(SpherePoint::infinity()).is_infinity();
}

}  // namespace mostow
