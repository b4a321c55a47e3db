#include "mostow/geometry.hpp"

#include <cmath>

#include "mostow/tolerances.hpp"

namespace mostow {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void PointH3::validate() const {
  if (!(t > 0.0) || !std::isfinite(t) || !finite(z))
    throw std::domain_error("PointH3: height must be finite and positive");
}

double PointH3::norm() const { return std::sqrt(norm_sq()); }

void SpherePoint::validate() const {
  if (!finite(value_)) throw std::domain_error("SpherePoint: non-finite value");
}

bool SpherePoint::same_point(const SpherePoint& o, double eps) const {
  if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
  return std::abs(value_ - o.value_) <= eps;
}

double chordal(const SpherePoint& a, const SpherePoint& b) {
  auto lift = [](const SpherePoint& p, double& x, double& y, double& z) {
    if (p.is_infinity()) {
      x = y = 0.0;
      z = 1.0;
      return;
    }
    Complex v = p.value();
    double n = std::norm(v);
    x = 2.0 * v.real() / (n + 1.0);
    y = 2.0 * v.imag() / (n + 1.0);
    z = (n - 1.0) / (n + 1.0);
  };
  double ax, ay, az, bx, by, bz;
  lift(a, ax, ay, az);
  lift(b, bx, by, bz);
  return std::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by) +
                   (az - bz) * (az - bz));
}

MobiusMap MobiusMap::affine(Complex a, Complex b) {
  if (std::abs(a) == 0.0) throw std::invalid_argument("affine: a must be nonzero");
  Complex s = std::sqrt(a);
  return MobiusMap{s, b / s, 0.0, 1.0 / s};
}

MobiusMap MobiusMap::homothety(double scale, Complex fixed) {
  if (!(scale > 0.0)) throw std::invalid_argument("homothety: scale must be > 0");
  // z -> scale*(z - fixed) + fixed
  return affine(scale, fixed * (1.0 - scale));
}

MobiusMap MobiusMap::inversion() { return MobiusMap{0.0, -1.0, 1.0, 0.0}; }

MobiusMap MobiusMap::normalized() const {
  Complex det = a * d - b * c;
  if (std::abs(det) < 1e-14) throw std::invalid_argument("MobiusMap: singular coefficients");
  Complex s = std::sqrt(det);
  return MobiusMap{a / s, b / s, c / s, d / s, conjugate_first};
}

double MobiusMap::det_residual() const { return std::abs(a * d - b * c - 1.0); }

MobiusMap MobiusMap::inverse() const {
  // (d,-b,-c,a) undoes the matrix; an initial conjugation is undone by
  // conjugating the inverse's coefficients and conjugating first again.
  MobiusMap inv{d, -b, -c, a, conjugate_first};
  if (conjugate_first) {
    inv.a = std::conj(inv.a);
    inv.b = std::conj(inv.b);
    inv.c = std::conj(inv.c);
    inv.d = std::conj(inv.d);
  }
  return inv;
}

SpherePoint MobiusMap::operator()(const SpherePoint& p) const {
  double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (p.is_infinity()) {
    if (std::abs(c) <= tol::pole_chart * scale) return SpherePoint::infinity();
    return SpherePoint(a / c);
  }
  Complex z = p.value();
  if (conjugate_first) z = std::conj(z);
  Complex den = c * z + d;
  if (std::abs(den) >= tol::pole_chart * scale) return SpherePoint((a * z + b) / den);
  // near the pole: evaluate 1/(image) in the inverted chart, which is small
  // and accurate, then flip back; an exact zero is the tagged infinity
  Complex num = a * z + b;
  Complex w = den / num;
  if (std::abs(w) == 0.0) return SpherePoint::infinity();
  return SpherePoint(1.0 / w);
}

PointH3 MobiusMap::operator()(const PointH3& p) const {
  Complex z = conjugate_first ? std::conj(p.z) : p.z;
  double t = p.t;
  Complex den = c * z + d;
  double denom = std::norm(den) + std::norm(c) * t * t;
  Complex nz = ((a * z + b) * std::conj(den) + a * std::conj(c) * t * t) / denom;
  double nt = t / denom;  // |ad-bc| = 1 after normalization
  return PointH3(nz, nt);
}

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) {
  // outer(inner(z)): if outer conjugates first, its conjugation passes
  // through inner's matrix entrywise.
  Complex ia = inner.a, ib = inner.b, ic = inner.c, id = inner.d;
  if (outer.conjugate_first) {
    ia = std::conj(ia);
    ib = std::conj(ib);
    ic = std::conj(ic);
    id = std::conj(id);
  }
  MobiusMap m;
  m.a = outer.a * ia + outer.b * ic;
  m.b = outer.a * ib + outer.b * id;
  m.c = outer.c * ia + outer.d * ic;
  m.d = outer.c * ib + outer.d * id;
  m.conjugate_first = outer.conjugate_first != inner.conjugate_first;
  return m.normalized();
}

Geodesic geodesic_from_endpoints(const SpherePoint& a, const SpherePoint& b) {
  if (a.same_point(b)) throw std::invalid_argument("geodesic: endpoints coincide");
  Geodesic g;
  g.from = a;
  g.to = b;
  if (a.is_infinity() || b.is_infinity()) {
    g.vertical = true;
    g.foot_is_from = !a.is_infinity();
    g.foot = g.foot_is_from ? a.value() : b.value();
    return g;
  }
  g.vertical = false;
  Complex za = a.value(), zb = b.value();
  g.center = 0.5 * (za + zb);
  g.radius = 0.5 * std::abs(zb - za);
  g.dir = (zb - za) / std::abs(zb - za);
  return g;
}

Geodesic geodesic_through(const PointH3& p, const PointH3& q) {
  Complex dz = q.z - p.z;
  double scale = std::max(p.t, q.t);
  if (std::abs(dz) <= 1e-12 * scale) {
    if (std::abs(q.t - p.t) / scale <= 1e-12)
      throw std::invalid_argument("geodesic_through: points coincide");
    // vertical line; orient so that p -> q matches from -> to
    return q.t > p.t ? geodesic_from_endpoints(SpherePoint(p.z), SpherePoint::infinity())
                     : geodesic_from_endpoints(SpherePoint::infinity(), SpherePoint(p.z));
  }
  // work in the vertical plane through p and q
  Complex u = dz / std::abs(dz);
  double xq = std::abs(dz);
  double xc = (xq * xq + q.t * q.t - p.t * p.t) / (2.0 * xq);
  double rho = std::sqrt(xc * xc + p.t * p.t);
  SpherePoint e1(p.z + (xc - rho) * u);
  SpherePoint e2(p.z + (xc + rho) * u);
  // from -> to should run in the direction of increasing parameter from p to q
  return geodesic_from_endpoints(e1, e2);
}

PointH3 geodesic_point(const Geodesic& g, double s) {
  if (g.vertical) {
    double t = g.foot_is_from ? std::exp(s) : std::exp(-s);
    return PointH3(g.foot, t);
  }
  // angle substitution: tanh(s) along the diameter, sech(s) in height
  return PointH3(g.center + g.radius * std::tanh(s) * g.dir,
                 g.radius / std::cosh(s));
}

double geodesic_param(const Geodesic& g, const PointH3& p) {
  if (g.vertical) return g.foot_is_from ? std::log(p.t) : -std::log(p.t);
  double x = ((p.z - g.center) / g.dir).real() / g.radius;
  x = std::max(-1.0, std::min(1.0, x));
  return std::atanh(x);
}

double dist_h3(const PointH3& p, const PointH3& q) {
  double rho2 = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
  // 2 asinh(rho / (2 sqrt(t1 t2))) is the stable form of the acosh formula
  return 2.0 * std::asinh(0.5 * std::sqrt(rho2 / (p.t * q.t)));
}

PointH3 project_vertical(const PointH3& p) { return PointH3(Complex(0, 0), p.norm()); }

MobiusMap axis_chart(const Geodesic& g) {
  const SpherePoint& a = g.from;
  const SpherePoint& b = g.to;
  if (a.is_infinity()) {
    // z -> 1/(z - b)
    return MobiusMap{0.0, 1.0, 1.0, -b.value()}.normalized();
  }
  if (b.is_infinity()) {
    // z -> z - a
    return MobiusMap{1.0, -a.value(), 0.0, 1.0};
  }
  // z -> (z - a)/(z - b)
  return MobiusMap{1.0, -a.value(), 1.0, -b.value()}.normalized();
}

GeodesicFoot dist_to_geodesic(const PointH3& p, const Geodesic& g) {
  // transport g to the axis, use sinh d = |z|/t there, pull the foot back
  MobiusMap chart = axis_chart(g);
  PointH3 q = chart(p);
  double dist = std::asinh(std::abs(q.z) / q.t);
  PointH3 foot_axis = project_vertical(q);
  PointH3 foot = chart.inverse()(foot_axis);
  return {dist, foot};
}

MobiusMap normalize_triple(const SpherePoint& a, const SpherePoint& b,
                           const SpherePoint& c) {
  if (a.same_point(b) || b.same_point(c) || a.same_point(c))
    throw std::invalid_argument("normalize_triple: points must be pairwise distinct");
  MobiusMap m;
  if (a.is_infinity()) {
    // z -> (b-c)/(z-c)
    m = MobiusMap{0.0, b.value() - c.value(), 1.0, -c.value()};
  } else if (b.is_infinity()) {
    // z -> (z-a)/(z-c)
    m = MobiusMap{1.0, -a.value(), 1.0, -c.value()};
  } else if (c.is_infinity()) {
    // z -> (z-a)/(b-a)
    m = MobiusMap{1.0, -a.value(), 0.0, b.value() - a.value()};
  } else {
    Complex za = a.value(), zb = b.value(), zc = c.value();
    m = MobiusMap{zb - zc, -za * (zb - zc), zb - za, -zc * (zb - za)};
  }
  m = m.normalized();
  if (chordal(m(a), SpherePoint(0.0)) > tol::triple_eval ||
      chordal(m(b), SpherePoint(1.0)) > tol::triple_eval ||
      chordal(m(c), SpherePoint::infinity()) > tol::triple_eval)
    throw std::runtime_error("normalize_triple: evaluation check failed");
  return m;
}

}  // namespace mostow
