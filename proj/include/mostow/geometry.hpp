#pragma once

#include <complex>
#include <stdexcept>

namespace mostow {

using Complex = std::complex<double>;

// Point (z,t) of the upper half-space model: horizontal complex part z and
// height t > 0.
struct PointH3 {
  Complex z;
  double t;

  PointH3(Complex z_, double t_) : z(z_), t(t_) { validate(); }
  PointH3(double x, double y, double t_) : z(x, y), t(t_) { validate(); }

  // Euclidean distance from the origin of the model, sqrt(|z|^2 + t^2).
  double norm() const;
  double norm_sq() const { return std::norm(z) + t * t; }

 private:
  void validate() const;
};

// Riemann-sphere point: a finite complex value or the tagged point at
// infinity. Infinity is never encoded as a large float.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(Complex v) : value_(v) { validate(); }
  SpherePoint(double x, double y = 0.0) : value_(x, y) { validate(); }

  static SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }
  Complex value() const {
    if (infinite_) throw std::domain_error("SpherePoint: value() at infinity");
    return value_;
  }

  bool same_point(const SpherePoint& o, double eps = 0.0) const;

 private:
  void validate() const;
  Complex value_{};
  bool infinite_ = false;
};

// Chordal metric on the sphere (stereographic, diameter 2). Used wherever a
// uniform notion of closeness including infinity is needed.
double chordal(const SpherePoint& a, const SpherePoint& b);

// Normalized conformal transformation z -> (az+b)/(cz+d), ad-bc = 1, with an
// orientation flag (reversing maps conjugate their argument first). Acts on
// the sphere by the Moebius formula and on H^3 by the Poincare extension.
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
  bool conjugate_first = false;

  static MobiusMap identity() { return {}; }
  // z -> az + b, a != 0 (an isometry of H^3 acting by (z,t) -> (az+b, |a|t))
  static MobiusMap affine(Complex a, Complex b);
  // homothety fixing `fixed`, scaling distances by s > 0
  static MobiusMap homothety(double scale, Complex fixed);
  // z -> -1/z
  static MobiusMap inversion();

  MobiusMap normalized() const;       // rescale so ad-bc = 1
  double det_residual() const;        // |ad - bc - 1|
  MobiusMap inverse() const;

  SpherePoint operator()(const SpherePoint& p) const;
  PointH3 operator()(const PointH3& p) const;
};

// outer after inner
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

// Geodesic of H^3 given by its two distinct ideal endpoints: a vertical line
// when one endpoint is infinity, otherwise a semicircle meeting the boundary
// at right angles. Carries a unit-speed parametrization oriented from `from`
// (s -> -inf) to `to` (s -> +inf).
struct Geodesic {
  SpherePoint from, to;
  bool vertical = false;
  Complex foot{};            // vertical: the finite endpoint
  bool foot_is_from = true;  // vertical: which end is finite
  Complex center{};          // semicircle
  double radius = 0.0;       // semicircle, half the endpoint distance
  Complex dir{};             // semicircle: unit vector from->to
};

Geodesic geodesic_from_endpoints(const SpherePoint& a, const SpherePoint& b);
// unique geodesic through two distinct interior points, oriented p -> q
Geodesic geodesic_through(const PointH3& p, const PointH3& q);
PointH3 geodesic_point(const Geodesic& g, double s);
// parameter of (the horizontal projection of) a point lying on g
double geodesic_param(const Geodesic& g, const PointH3& p);

// hyperbolic distance, cosh d = 1 + (|z1-z2|^2 + (t1-t2)^2) / (2 t1 t2)
double dist_h3(const PointH3& p, const PointH3& q);

// nearest-point projection onto the axis {0} x (0,inf): p -> (0, ||p||)
PointH3 project_vertical(const PointH3& p);

struct GeodesicFoot {
  double distance;
  PointH3 foot;
};
GeodesicFoot dist_to_geodesic(const PointH3& p, const Geodesic& g);

// Moebius map carrying (a,b,c) to (0,1,inf); inputs pairwise distinct.
MobiusMap normalize_triple(const SpherePoint& a, const SpherePoint& b,
                           const SpherePoint& c);

// chart sending g.from -> 0 and g.to -> inf (so g itself goes to the axis)
MobiusMap axis_chart(const Geodesic& g);

}  // namespace mostow
