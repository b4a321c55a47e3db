#include "mostow/zoom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "mostow/tolerances.hpp"

namespace mostow {

Complex zoom_step(const BoundaryHomeo& h, Complex z, long n, Complex w) {
  if (n < 1) throw std::invalid_argument("zoom_step: n >= 1 required");
  Complex hz = h.apply(z);
  double nn = static_cast<double>(n);
  return hz + nn * (h.apply(z + (w - z) / nn) - hz);
}

std::vector<double> default_derivative_schedule() {
  std::vector<double> steps;
  for (int k = 4; k <= 40; ++k) steps.push_back(std::ldexp(1.0, -k));
  return steps;
}

DerivativeEstimate directional_derivative(const BoundaryHomeo& h, Complex z,
                                          Complex v,
                                          std::span<const double> schedule) {
  if (std::abs(v) == 0.0) throw std::invalid_argument("directional_derivative: v != 0");
  std::vector<double> fallback;
  if (schedule.empty()) {
    fallback = default_derivative_schedule();
    schedule = fallback;
  }
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (!(schedule[i] < schedule[i - 1]) || !(schedule[i] > 0.0))
      throw std::invalid_argument("directional_derivative: schedule must decrease to 0");

  DerivativeEstimate est;
  SpherePoint base_pt = h.apply(SpherePoint(z));
  if (base_pt.is_infinity()) return est;  // pole at the base point
  Complex base = base_pt.value();

  auto finite_quotient = [&](double t, double side, Complex& out) {
    SpherePoint img = h.apply(SpherePoint(z + side * v * t));
    if (img.is_infinity()) return false;
    out = (img.value() - base) / (side * t);
    return std::isfinite(out.real()) && std::isfinite(out.imag());
  };

  Complex prev{};
  bool have_prev = false;
  for (double t : schedule) {
    Complex fwd, bwd;
    if (!finite_quotient(t, +1.0, fwd) || !finite_quotient(t, -1.0, bwd)) {
      est.converged = false;  // pole or overflow along the way
      return est;
    }
    est.steps.push_back(t);
    est.value = fwd;
    if (have_prev) est.residuals.push_back(std::abs(fwd - prev));
    prev = fwd;
    have_prev = true;

    std::size_t m = est.residuals.size();
    if (m >= 3) {
      double r0 = est.residuals[m - 3], r1 = est.residuals[m - 2], r2 = est.residuals[m - 1];
      bool small = r0 < tol::deriv_residual && r1 < tol::deriv_residual && r2 < tol::deriv_residual;
      bool settling = r1 <= r0 * 1.25 + 1e-15 && r2 <= r1 * 1.25 + 1e-15;
      if (small && settling) {
        double scale = std::max(1.0, std::abs(fwd));
        est.two_sided_ok = std::abs(fwd - bwd) <= tol::deriv_agree * scale;
        est.converged = est.two_sided_ok;
        return est;
      }
    }
  }
  est.converged = false;
  return est;
}

std::vector<Complex> default_directions() {
  std::vector<Complex> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
  for (Complex& d : dirs) d /= std::abs(d);
  return dirs;
}

AsteriskReport asterisk_test(const BoundaryHomeo& h, Complex z,
                             std::span<const Complex> directions, double tol_d1) {
  std::vector<Complex> fallback;
  if (directions.empty()) {
    fallback = default_directions();
    directions = fallback;
  }
  bool has_one = false;
  for (Complex d : directions)
    if (std::abs(d - Complex(1, 0)) < 1e-12) has_one = true;
  if (!has_one) throw std::invalid_argument("asterisk_test: directions must include 1");

  AsteriskReport rep;
  bool all_converged = true;
  for (Complex d : directions) {
    DerivativeEstimate est = directional_derivative(h, z, d);
    if (!est.converged) all_converged = false;
    if (std::abs(d - Complex(1, 0)) < 1e-12) rep.d1 = est.value;
    rep.derivatives.emplace_back(d, std::move(est));
  }
  rep.is_asterisk = all_converged && std::abs(rep.d1) > tol_d1;
  return rep;
}

std::vector<ScanEntry> asterisk_scan(const BoundaryHomeo& h, const GridSpec& grid,
                                     std::span<const Complex> directions,
                                     double tol_d1) {
  std::vector<ScanEntry> passing;
  const double eps = grid.spacing * 1e-9;
  for (double x = grid.re_min; x <= grid.re_max + eps; x += grid.spacing) {
    for (double y = grid.im_min; y <= grid.im_max + eps; y += grid.spacing) {
      Complex z(x, y);
      AsteriskReport rep = asterisk_test(h, z, directions, tol_d1);
      if (rep.is_asterisk) passing.push_back({z, std::move(rep)});
    }
  }
  return passing;
}

GoodLineReport good_line_test(const BoundaryHomeo& h, const LineSpec& L,
                              int samples, double tol, double window) {
  if (samples < 3) throw std::invalid_argument("good_line_test: need >= 3 samples");
  Complex dir = L.direction / std::abs(L.direction);

  std::vector<double> s(samples);
  std::vector<Complex> val(samples);
  for (int i = 0; i < samples; ++i) {
    s[i] = -window + 2.0 * window * i / (samples - 1);
    val[i] = h.apply(L.point + s[i] * dir);
  }
  // least squares val ~ offset + slope * s
  double s_mean = 0;
  Complex v_mean{};
  for (int i = 0; i < samples; ++i) {
    s_mean += s[i];
    v_mean += val[i];
  }
  s_mean /= samples;
  v_mean /= static_cast<double>(samples);
  double den = 0;
  Complex num{};
  for (int i = 0; i < samples; ++i) {
    den += (s[i] - s_mean) * (s[i] - s_mean);
    num += (s[i] - s_mean) * (val[i] - v_mean);
  }
  GoodLineReport rep;
  rep.fit.slope = num / den;
  rep.fit.offset = v_mean - rep.fit.slope * s_mean;
  for (int i = 0; i < samples; ++i)
    rep.max_residual = std::max(rep.max_residual,
                                std::abs(val[i] - (rep.fit.offset + rep.fit.slope * s[i])));
  rep.good = rep.max_residual < tol;
  return rep;
}

ConformalFitResult conformal_fit(const BoundaryHomeo& h,
                                 std::span<const Complex> sample_points) {
  std::size_t n = sample_points.size();
  if (n < 4) throw std::invalid_argument("conformal_fit: need >= 4 samples");
  std::size_t i0 = 0, i1 = n / 3, i2 = (2 * n) / 3;
  SpherePoint p0(sample_points[i0]), p1(sample_points[i1]), p2(sample_points[i2]);
  SpherePoint q0 = h.apply(p0), q1 = h.apply(p1), q2 = h.apply(p2);
  // normalize_triple throws on coincident source or image points
  MobiusMap to_std = normalize_triple(p0, p1, p2);
  MobiusMap img_to_std = normalize_triple(q0, q1, q2);
  ConformalFitResult res;
  res.mobius = compose(img_to_std.inverse(), to_std);

  for (std::size_t i = 0; i < n; ++i) {
    SpherePoint expect = h.apply(SpherePoint(sample_points[i]));
    SpherePoint got = res.mobius(SpherePoint(sample_points[i]));
    res.max_residual = std::max(res.max_residual, chordal(expect, got));
  }
  return res;
}

GoodDirectionsReport good_directions_check(const BoundaryHomeo& h, Complex base,
                                           Complex dir1, Complex dir2,
                                           int lines_per_direction, int samples,
                                           double tol) {
  GoodDirectionsReport rep;
  auto run_direction = [&](Complex dir, Complex offset_dir, double& worst) {
    bool all_good = true;
    for (int k = 0; k < lines_per_direction; ++k) {
      double off = lines_per_direction == 1
                       ? 0.0
                       : -0.5 + static_cast<double>(k) / (lines_per_direction - 1);
      GoodLineReport r = good_line_test(h, {base + off * offset_dir, dir}, samples, tol);
      worst = std::max(worst, r.max_residual);
      all_good = all_good && r.good;
    }
    return all_good;
  };
  Complex d1 = dir1 / std::abs(dir1), d2 = dir2 / std::abs(dir2);
  rep.dir1_good = run_direction(d1, d2, rep.dir1_worst_residual);
  rep.dir2_good = run_direction(d2, d1, rep.dir2_worst_residual);
  if (rep.dir1_good && rep.dir2_good) {
    std::vector<Complex> circle;
    for (int i = 0; i < 16; ++i) {
      double th = 2.0 * M_PI * i / 16;
      circle.push_back(base + Complex(std::cos(th), std::sin(th)));
    }
    rep.fit = conformal_fit(h, circle);
  }
  return rep;
}

namespace {

// winding number of the closed polyline around c (nonzero = inside); a
// candidate sitting exactly on a sample counts as boundary-inside
int winding_number(const std::vector<Complex>& pts, Complex c) {
  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Complex a = pts[i] - c;
    Complex b = pts[(i + 1) % pts.size()] - c;
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0) return 1;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

double clearance(const std::vector<Complex>& pts, Complex c) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex p : pts) best = std::min(best, std::abs(p - c));
  return best;
}

// smallest enclosing disk, Welzl's algorithm with a deterministic shuffle
struct Disk2 {
  Complex center{};
  double r = 0;
  bool contains(Complex p) const { return std::abs(p - center) <= r * (1.0 + 1e-12); }
};

Disk2 disk_from(Complex a, Complex b) { return {0.5 * (a + b), 0.5 * std::abs(a - b)}; }

Disk2 disk_from(Complex a, Complex b, Complex c) {
  double ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag(), cx = c.real(), cy = c.imag();
  double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (std::abs(d) < 1e-30) {
    // collinear: fall back to the widest pair
    Disk2 best = disk_from(a, b);
    for (Disk2 cand : {disk_from(a, c), disk_from(b, c)})
      if (cand.r > best.r) best = cand;
    return best;
  }
  double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
               (cx * cx + cy * cy) * (ay - by)) / d;
  double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
               (cx * cx + cy * cy) * (bx - ax)) / d;
  Complex center(ux, uy);
  return {center, std::abs(a - center)};
}

Disk2 enclosing_disk(std::vector<Complex> pts) {
  // deterministic pseudo-shuffle
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = pts.size(); i > 1; --i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    std::swap(pts[i - 1], pts[state % i]);
  }
  Disk2 d{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (d.contains(pts[i])) continue;
    d = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (d.contains(pts[j])) continue;
      d = disk_from(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (d.contains(pts[k])) continue;
        d = disk_from(pts[i], pts[j], pts[k]);
      }
    }
  }
  return d;
}

}  // namespace

DiskRatioReport disk_ratio(const BoundaryHomeo& h, Complex center, double radius,
                           int resolution) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk_ratio: radius must be > 0");
  if (resolution < 8) throw std::invalid_argument("disk_ratio: resolution too small");

  std::vector<Complex> img(resolution);
  for (int i = 0; i < resolution; ++i) {
    double th = 2.0 * M_PI * i / resolution;
    SpherePoint p = h.apply(SpherePoint(center + radius * Complex(std::cos(th), std::sin(th))));
    if (p.is_infinity()) throw std::domain_error("disk_ratio: pole on the disk boundary");
    img[i] = p.value();
    if (!std::isfinite(img[i].real()) || !std::isfinite(img[i].imag()))
      throw std::domain_error("disk_ratio: non-finite image");
  }
  SpherePoint center_img = h.apply(SpherePoint(center));
  if (center_img.is_infinity() || winding_number(img, center_img.value()) == 0)
    throw std::domain_error("disk_ratio: pole inside the disk");

  Disk2 outer = enclosing_disk(img);

  // candidate centers: the enclosing-disk center (exact for circles and
  // ellipses), the sample centroid, the image of the source center, and a
  // coarse grid over the bounding box; clearance maximized over the inside
  // ones, with no finer search that could slip through sampling gaps
  std::vector<Complex> candidates = {outer.center, center_img.value()};
  Complex centroid{};
  for (Complex p : img) centroid += p;
  candidates.push_back(centroid / static_cast<double>(resolution));
  double xmin = img[0].real(), xmax = xmin, ymin = img[0].imag(), ymax = ymin;
  for (Complex p : img) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const int grid_n = 32;
  for (int i = 0; i <= grid_n; ++i)
    for (int j = 0; j <= grid_n; ++j)
      candidates.emplace_back(xmin + (xmax - xmin) * i / grid_n,
                              ymin + (ymax - ymin) * j / grid_n);

  double best = 0.0;
  for (Complex c : candidates) {
    if (winding_number(img, c) == 0) continue;
    best = std::max(best, clearance(img, c));
  }
  if (best == 0.0) best = clearance(img, center_img.value());

  DiskRatioReport rep;
  rep.inner = 2.0 * best;
  rep.outer = 2.0 * outer.r;
  rep.ratio = rep.outer / rep.inner;
  return rep;
}

TamenessReport tameness_probe(const IsometrySequence& pre, const IsometrySequence& post,
                              const BLMap& H, const PointH3& p, int n_max,
                              double ball_radius) {
  if (n_max < 1) throw std::invalid_argument("tameness_probe: n_max >= 1");
  TamenessReport rep;
  for (int n = 1; n <= n_max; ++n) {
    PointH3 q = pre(n)(H(post(n)(p)));
    rep.sup_seen = std::max(rep.sup_seen, dist_h3(q, p));
  }
  rep.bounded = rep.sup_seen <= ball_radius;
  return rep;
}

std::pair<IsometrySequence, IsometrySequence> zoom_isometries(const BoundaryHomeo& h,
                                                              Complex z) {
  Complex hz = h.apply(z);
  IsometrySequence pre = [hz](int n) {
    return MobiusMap::homothety(static_cast<double>(n), hz);
  };
  IsometrySequence post = [z](int n) {
    return MobiusMap::homothety(1.0 / static_cast<double>(n), z);
  };
  return {pre, post};
}

}  // namespace mostow
