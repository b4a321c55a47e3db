#include "mostow/blmap.hpp"

#include <cmath>
#include <stdexcept>

namespace mostow {

LinearStretch LinearStretch::from_matrix(double m00, double m01, double m10,
                                         double m11) {
  double det = m00 * m11 - m01 * m10;
  if (std::abs(det) < 1e-14) throw std::invalid_argument("LinearStretch: singular matrix");
  LinearStretch s{m00, m01, m10, m11};
  // singular values of a 2x2 matrix from the eigenvalues of A^T A
  double tr = m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11;
  double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det * det));
  s.sigma_max = std::sqrt(0.5 * (tr + disc));
  s.sigma_min = std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
  if (!(s.sigma_min > 0.0)) throw std::invalid_argument("LinearStretch: singular matrix");
  return s;
}

Complex LinearStretch::apply(Complex z) const {
  return Complex(m00 * z.real() + m01 * z.imag(), m10 * z.real() + m11 * z.imag());
}

double LinearStretch::bl_constant() const {
  return std::max({sigma_max, 1.0 / sigma_min, 1.0});
}

PointH3 BLMap::operator()(const PointH3& p) const {
  PointH3 cur = p;
  for (const BLPrimitive& prim : primitives) {
    if (const auto* mob = std::get_if<MobiusMap>(&prim))
      cur = (*mob)(cur);
    else
      cur = PointH3(std::get<LinearStretch>(prim).apply(cur.z), cur.t);
  }
  return cur;
}

BLMap make_stretch(double m00, double m01, double m10, double m11) {
  LinearStretch s = LinearStretch::from_matrix(m00, m01, m10, m11);
  return BLMap{{s}, s.bl_constant()};
}

BLMap make_stretch_diag(double sx, double sy) { return make_stretch(sx, 0, 0, sy); }

BLMap make_isometry(const MobiusMap& g) { return BLMap{{g.normalized()}, 1.0}; }

BLMap compose_bl(std::span<const BLMap> maps) {
  if (maps.empty()) throw std::invalid_argument("compose_bl: empty sequence");
  BLMap out;
  for (const BLMap& m : maps) {
    out.primitives.insert(out.primitives.end(), m.primitives.begin(),
                          m.primitives.end());
    out.K *= m.K;
  }
  return out;
}

BoundaryHomeo boundary_of_bl(const BLMap& H) {
  BoundaryHomeo h;
  for (const BLPrimitive& prim : H.primitives) {
    if (const auto* mob = std::get_if<MobiusMap>(&prim)) {
      h.primitives.emplace_back(*mob);
    } else {
      const LinearStretch& s = std::get<LinearStretch>(prim);
      h.primitives.emplace_back(RealAffine::from_matrix(s.m00, s.m01, s.m10, s.m11));
    }
  }
  return h;
}

std::vector<SpherePoint> estimate_boundary_extension(const BLMap& H,
                                                     const SpherePoint& zeta,
                                                     std::span<const double> heights) {
  // reference image scale at unit height; bounded orbits stay near it while
  // probes into a pole escape past every threshold
  double ref = zeta.is_infinity() ? 0.0 : H(PointH3(zeta.value(), 1.0)).norm_sq();
  std::vector<SpherePoint> estimates;
  estimates.reserve(heights.size());
  for (double t : heights) {
    if (!(t > 0.0)) throw std::invalid_argument("heights must be positive");
    PointH3 probe = zeta.is_infinity() ? PointH3(Complex(0, 0), 1.0 / t)
                                       : PointH3(zeta.value(), t);
    PointH3 image = H(probe);
    double escape = zeta.is_infinity() ? 1.0 / t : std::max(1.0 / t, 16.0 * (1.0 + ref));
    if (image.norm_sq() > escape)
      estimates.push_back(SpherePoint::infinity());
    else
      estimates.push_back(SpherePoint(image.z));
  }
  return estimates;
}

}  // namespace mostow
