#include "mostow/morse.hpp"

#include <cmath>
#include <stdexcept>

#include "mostow/tolerances.hpp"

namespace mostow {

TubeReport tube_check(const PathH3& beta, double r) {
  if (!(r > 1.0)) throw std::invalid_argument("tube_check: requires r > 1");
  TubeReport rep;
  rep.r = r;
  rep.bound = std::exp(-r + 1.0);

  PathLengths len = path_lengths(beta);
  ProjectedLengths proj = projected_path_lengths(beta);
  rep.path_length = len.hyperbolic;
  rep.euclid_length = len.euclidean;
  rep.projected_length = proj.hyperbolic;
  rep.euclid_projected = proj.euclidean;

  rep.min_clearance = min_axis_clearance(beta);
  rep.valid = rep.min_clearance >= r;

  rep.ratio = rep.projected_length / rep.path_length;
  rep.pass = rep.ratio <= rep.bound * (1.0 + tol::tube_slack);
  rep.euclid_pass = rep.euclid_projected <= rep.euclid_length * (1.0 + 1e-12);
  return rep;
}

MorseReport segment_deviation(const BLMap& H, const PointH3& p, const PointH3& q,
                              int samples) {
  if (samples < 2) throw std::invalid_argument("segment_deviation: need >= 2 samples");
  Geodesic source = geodesic_through(p, q);  // throws on a degenerate segment
  double s0 = geodesic_param(source, p);
  double s1 = geodesic_param(source, q);

  MorseReport rep;
  rep.K = H.K;
  rep.C = 4.0 * H.K * H.K * H.K + 2.0 * H.K;
  rep.bound = rep.C;
  rep.segment_begin = p;
  rep.segment_end = q;

  PointH3 ia = H(p);
  PointH3 ib = H(q);
  if (dist_h3(ia, ib) < 1e-9) {
    rep.degenerate = true;
    rep.observed_deviation = 0.0;
    rep.pass = true;
    return rep;
  }
  Geodesic chord = geodesic_through(ia, ib);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double s = s0 + (s1 - s0) * static_cast<double>(i) / (samples - 1);
    PointH3 image = H(geodesic_point(source, s));
    worst = std::max(worst, dist_to_geodesic(image, chord).distance);
  }
  rep.observed_deviation = worst;
  rep.pass = worst <= rep.bound + tol::morse_abs;
  return rep;
}

std::vector<MorseReport> morse_window_check(const BLMap& H, const Geodesic& gamma,
                                            std::span<const double> window_radii,
                                            double spacing) {
  for (std::size_t i = 0; i < window_radii.size(); ++i) {
    if (!(window_radii[i] > 0.0) || (i > 0 && window_radii[i] <= window_radii[i - 1]))
      throw std::invalid_argument("morse_window_check: radii must be positive increasing");
  }
  BoundaryHomeo h = boundary_of_bl(H);
  Geodesic limit = geodesic_from_endpoints(h.apply(gamma.from), h.apply(gamma.to));

  std::vector<MorseReport> out;
  out.reserve(window_radii.size());
  for (double R : window_radii) {
    MorseReport rep;
    rep.K = H.K;
    rep.C = 4.0 * H.K * H.K * H.K + 2.0 * H.K;
    rep.bound = rep.C + 1.0;
    rep.segment_begin = geodesic_point(gamma, -R);
    rep.segment_end = geodesic_point(gamma, R);
    int samples = std::max(2, static_cast<int>(std::ceil(2.0 * R / spacing)) + 1);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      double s = -R + 2.0 * R * static_cast<double>(i) / (samples - 1);
      PointH3 image = H(geodesic_point(gamma, s));
      worst = std::max(worst, dist_to_geodesic(image, limit).distance);
    }
    rep.observed_deviation = worst;
    rep.pass = worst <= rep.bound + tol::morse_abs;
    out.push_back(rep);
  }
  return out;
}

std::optional<TriangleCore> triangle_core(double R, const CoreGrid& grid) {
  if (R < 0.0) throw std::invalid_argument("triangle_core: R must be nonnegative");
  Geodesic side_a = geodesic_from_endpoints(SpherePoint(0.0), SpherePoint::infinity());
  Geodesic side_b = geodesic_from_endpoints(SpherePoint(1.0), SpherePoint::infinity());
  Geodesic side_c = geodesic_from_endpoints(SpherePoint(0.0), SpherePoint(1.0));

  std::vector<PointH3> core;
  for (int i = 0; i < grid.re_steps; ++i) {
    double x = grid.re_min + (grid.re_max - grid.re_min) * i / (grid.re_steps - 1);
    for (int j = 0; j < grid.im_steps; ++j) {
      double y = grid.im_min + (grid.im_max - grid.im_min) * j / (grid.im_steps - 1);
      for (int k = 0; k < grid.t_steps; ++k) {
        double t = std::exp(grid.log_t_min +
                            (grid.log_t_max - grid.log_t_min) * k / (grid.t_steps - 1));
        PointH3 p(Complex(x, y), t);
        if (dist_to_geodesic(p, side_a).distance <= R &&
            dist_to_geodesic(p, side_b).distance <= R &&
            dist_to_geodesic(p, side_c).distance <= R)
          core.push_back(p);
      }
    }
  }
  if (core.empty()) return std::nullopt;

  TriangleCore res;
  res.count = static_cast<int>(core.size());
  res.re_min = res.re_max = core[0].z.real();
  res.im_min = res.im_max = core[0].z.imag();
  res.t_min = res.t_max = core[0].t;
  for (const PointH3& p : core) {
    res.re_min = std::min(res.re_min, p.z.real());
    res.re_max = std::max(res.re_max, p.z.real());
    res.im_min = std::min(res.im_min, p.z.imag());
    res.im_max = std::max(res.im_max, p.z.imag());
    res.t_min = std::min(res.t_min, p.t);
    res.t_max = std::max(res.t_max, p.t);
  }
  // maximize the cosh argument instead of the distance itself
  double best = 0.0;
  for (std::size_t i = 0; i < core.size(); ++i) {
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      double rho2 = std::norm(core[i].z - core[j].z) +
                    (core[i].t - core[j].t) * (core[i].t - core[j].t);
      best = std::max(best, rho2 / (core[i].t * core[j].t));
    }
  }
  res.diameter = std::acosh(1.0 + 0.5 * best);
  return res;
}

}  // namespace mostow
