#include "mostow/func_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mostow {

PartialPartition::PartialPartition(std::vector<std::pair<double, double>> xs)
    : intervals(std::move(xs)) {
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    auto [lo, hi] = intervals[i];
    if (!(lo >= 0.0 && hi <= 1.0 && hi > lo))
      throw std::invalid_argument("PartialPartition: intervals must be increasing in [0,1]");
    if (i > 0 && intervals[i - 1].second > lo)
      throw std::invalid_argument("PartialPartition: interiors overlap");
  }
}

double PartialPartition::total_length() const {
  double s = 0;
  for (auto [lo, hi] : intervals) s += hi - lo;
  return s;
}

double image_endpoint_length(const Func1D& f, const PartialPartition& partition) {
  double s = 0;
  for (auto [lo, hi] : partition.intervals) s += std::abs(f(hi) - f(lo));
  return s;
}

std::vector<ACModulusRow> ac_modulus(const Func1D& f,
                                     const std::vector<double>& delta_grid,
                                     int max_level) {
  if (max_level < 1 || max_level > 22)
    throw std::invalid_argument("ac_modulus: max_level out of range");
  // per level: rises of the 2^m dyadic intervals, sorted descending, prefixed
  std::vector<std::vector<double>> prefix(max_level + 1);
  for (int m = 1; m <= max_level; ++m) {
    std::size_t n = std::size_t(1) << m;
    std::vector<double> rises(n);
    double h = std::ldexp(1.0, -m);
    double prev = f(0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double cur = f(static_cast<double>(i + 1) * h);
      rises[i] = std::abs(cur - prev);
      prev = cur;
    }
    std::sort(rises.begin(), rises.end(), std::greater<double>());
    prefix[m].assign(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[m][i + 1] = prefix[m][i] + rises[i];
  }

  std::vector<ACModulusRow> table;
  for (double delta : delta_grid) {
    if (!(delta > 0.0)) throw std::invalid_argument("ac_modulus: delta must be positive");
    ACModulusRow row{delta, 0.0, 0};
    for (int m = 1; m <= max_level; ++m) {
      // as many level-m intervals as fit in the length budget
      auto count = static_cast<std::size_t>(std::floor(delta * std::ldexp(1.0, m) + 1e-12));
      count = std::min(count, (std::size_t(1) << m));
      double best = prefix[m][count];
      if (best > row.sup_image) {
        row.sup_image = best;
        row.best_level = m;
      }
    }
    table.push_back(row);
  }
  return table;
}

PartialPartition cantor_partition(int depth) {
  if (depth < 1 || depth > 16) throw std::invalid_argument("cantor_partition: depth out of range");
  std::vector<std::pair<double, double>> intervals = {{0.0, 1.0}};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::pair<double, double>> next;
    next.reserve(intervals.size() * 2);
    for (auto [lo, hi] : intervals) {
      double third = (hi - lo) / 3.0;
      next.emplace_back(lo, lo + third);
      next.emplace_back(hi - third, hi);
    }
    intervals = std::move(next);
  }
  return PartialPartition(std::move(intervals));
}

VariationResult variation_decompose(const Func1D& f, int samples) {
  if (samples < 2) throw std::invalid_argument("variation_decompose: need >= 2 samples");
  // samples quantized to multiples of 2^-40 so that every running sum below
  // is exactly representable: monotonicity and the reconstruction identity
  // then hold bitwise, not just to rounding
  auto sample = [&](double x) {
    double v = f(x);
    if (!(std::abs(v) < 1e6)) throw std::domain_error("variation_decompose: huge value");
    return std::ldexp(std::round(std::ldexp(v, 40)), -40);
  };
  auto discrete_variation = [&](int n) {
    double v = 0, prev = sample(0.0);
    for (int i = 1; i <= n; ++i) {
      double cur = sample(static_cast<double>(i) / n);
      v += std::abs(cur - prev);
      prev = cur;
    }
    return v;
  };

  VariationResult res;
  int n = samples - 1;
  res.x.resize(samples);
  res.f_samples.resize(samples);
  res.f_plus.resize(samples);
  res.f_minus.resize(samples);
  double running = 0, prev = sample(0.0);
  res.x[0] = 0.0;
  res.f_samples[0] = prev;
  res.f_plus[0] = 0.0;
  res.f_minus[0] = -prev;
  for (int i = 1; i <= n; ++i) {
    double xi = static_cast<double>(i) / n;
    double cur = sample(xi);
    running += std::abs(cur - prev);
    res.x[i] = xi;
    res.f_samples[i] = cur;
    res.f_plus[i] = running;
    res.f_minus[i] = running - cur;  // nondecreasing: increments |df| - df >= 0
    prev = cur;
  }
  res.total_variation = running;

  // refinement probe: a BV function's discrete variation settles; keep
  // flagging while doubling still adds a visible fraction
  double v2 = discrete_variation(2 * n);
  double v4 = discrete_variation(4 * n);
  res.unbounded_variation = v4 > v2 * 1.02 + 1e-9 && v2 > running * 1.02 + 1e-9;
  return res;
}

DyadicSet differentiability_profile(const Func1D& f, double a, double b,
                                    const std::vector<int>& scales, int grid_level) {
  if (!(0.0 <= a && a < b)) throw std::invalid_argument("differentiability_profile: need 0 <= a < b");
  DyadicSet witnesses(1, grid_level);
  std::uint32_t n = witnesses.side();
  for (std::uint32_t i = 0; i < n; ++i) {
    double p = (static_cast<double>(i) + 0.5) * std::ldexp(1.0, -grid_level);
    bool witness = true;
    for (int k : scales) {
      double len = std::ldexp(1.0, -k);
      bool shallow = false, steep = false;
      for (double side : {-1.0, 1.0}) {
        double lo = std::min(p, p + side * len);
        double hi = std::max(p, p + side * len);
        if (lo < 0.0 || hi > 1.0) continue;
        double rise = std::abs(f(hi) - f(lo));
        if (rise < a * len) shallow = true;
        if (rise > b * len) steep = true;
      }
      if (!shallow || !steep) {
        witness = false;
        break;
      }
    }
    if (witness) witnesses.insert(DyadicSet::key1(i));
  }
  return witnesses;
}

ImageCover image_null_check(const Func1D& f, const DyadicSet& A, double eps,
                            int samples_per_cell) {
  if (A.dim() != 1) throw std::invalid_argument("image_null_check: needs d=1");
  if (samples_per_cell < 2) throw std::invalid_argument("image_null_check: need >= 2 samples");
  std::vector<std::pair<double, double>> covers;
  double w = std::ldexp(1.0, -A.level());
  for (std::uint64_t key : A.keys()) {
    double lo = static_cast<double>(key) * w;
    double vmin = f(lo), vmax = vmin;
    for (int s = 1; s <= samples_per_cell; ++s) {
      double v = f(lo + w * s / samples_per_cell);
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
    covers.emplace_back(vmin, vmax);
  }
  std::sort(covers.begin(), covers.end());
  ImageCover out;
  for (auto [lo, hi] : covers) {
    if (!out.intervals.empty() && lo <= out.intervals.back().second)
      out.intervals.back().second = std::max(out.intervals.back().second, hi);
    else
      out.intervals.emplace_back(lo, hi);
  }
  for (auto [lo, hi] : out.intervals) out.total_length += hi - lo;
  out.pass = out.total_length < eps;
  return out;
}

}  // namespace mostow
