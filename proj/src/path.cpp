#include "mostow/path.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mostow/tolerances.hpp"

namespace mostow {

PathH3::PathH3(std::vector<PointH3> pts) : samples(std::move(pts)) {
  if (samples.size() < 2) throw std::invalid_argument("PathH3: need at least 2 samples");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    double gap = std::abs(samples[i].z - samples[i - 1].z) +
                 std::abs(samples[i].t - samples[i - 1].t);
    if (gap == 0.0) throw std::invalid_argument("PathH3: consecutive samples coincide");
  }
}

namespace {

PointH3 lerp(const PointH3& p, const PointH3& q, double u) {
  return PointH3(p.z + u * (q.z - p.z), p.t + u * (q.t - p.t));
}

// Refine f over one chord: sum f on 2^k sub-chords, doubling k until stable.
template <typename ChordSum>
double refine_chord(const PointH3& p, const PointH3& q, ChordSum&& sum_at) {
  int n = 1;
  double prev = sum_at(p, q, n);
  while (n < tol::max_refine_segments) {
    n *= 2;
    double cur = sum_at(p, q, n);
    if (std::abs(cur - prev) <= tol::integrate_rel * std::max(std::abs(cur), 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

double hyp_chord_sum(const PointH3& p, const PointH3& q, int n) {
  double total = 0.0;
  PointH3 a = p;
  for (int i = 1; i <= n; ++i) {
    PointH3 b = lerp(p, q, static_cast<double>(i) / n);
    total += dist_h3(a, b);
    a = b;
  }
  return total;
}

}  // namespace

PathLengths path_lengths(const PathH3& path) {
  double hyp = 0.0, euc = 0.0;
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    const PointH3& p = path.samples[i - 1];
    const PointH3& q = path.samples[i];
    hyp += refine_chord(p, q, hyp_chord_sum);
    euc += std::sqrt(std::norm(q.z - p.z) + (q.t - p.t) * (q.t - p.t));
  }
  return {hyp, euc};
}

ProjectedLengths projected_path_lengths(const PathH3& path) {
  // the projected path is the polyline through the projected samples; on the
  // axis its lengths are the total variations of log-norm and norm
  double hyp = 0.0, euc = 0.0;
  double prev = path.samples[0].norm();
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    double cur = path.samples[i].norm();
    hyp += std::abs(std::log(cur / prev));
    euc += std::abs(cur - prev);
    prev = cur;
  }
  return {hyp, euc};
}

double min_axis_clearance(const PathH3& path) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < path.samples.size(); ++i) {
    const PointH3& p = path.samples[i - 1];
    const PointH3& q = path.samples[i];
    const int n = 256;
    for (int k = 0; k <= n; ++k) {
      PointH3 m = lerp(p, q, static_cast<double>(k) / n);
      best = std::min(best, std::asinh(std::abs(m.z) / m.t));
    }
  }
  return best;
}

}  // namespace mostow
