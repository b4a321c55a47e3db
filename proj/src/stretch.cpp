#include "mostow/stretch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mostow/diskpack.hpp"

namespace mostow {

IntervalFunction length_interval_function() {
  return {"length", [](double lo, double hi) { return hi - lo; }, true};
}

IntervalFunction sqrt_interval_function() {
  return {"sqrt", [](double lo, double hi) { return std::sqrt(hi - lo); }, true};
}

StretchReport stretch_classify(const IntervalFunction& A, double p, int N_max,
                               const std::vector<int>& scales) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("stretch_classify: p must be in [0,1]");
  if (N_max < 1) throw std::invalid_argument("stretch_classify: N_max >= 1");

  double best_ratio = 0;
  std::vector<std::pair<int, double>> ratios;  // (scale, A/|J|)
  for (int k : scales) {
    double half = std::ldexp(1.0, -k - 1);
    double lo = std::max(0.0, p - half);
    double hi = std::min(1.0, p + half);
    if (!(hi > lo)) continue;
    double ratio = A.A(lo, hi) / (hi - lo);
    ratios.emplace_back(k, ratio);
    best_ratio = std::max(best_ratio, ratio);
  }

  StretchReport rep;
  rep.stretchy = true;
  for (int N = 1; N <= N_max; ++N) {
    StretchVerdict v;
    v.N = N;
    v.best_ratio = best_ratio;
    for (auto [k, ratio] : ratios) {
      if (ratio >= static_cast<double>(N)) {
        v.stretched = true;
        v.witness_scale = k;
        break;
      }
    }
    if (!v.stretched && rep.stiff_N == 0) {
      rep.stiff_N = N;
      rep.stretchy = false;
    }
    rep.per_N.push_back(v);
  }
  return rep;
}

IntervalFunction strip_alpha(const BoundaryHomeo& h, int raster_level,
                             int pack_resolution) {
  return {"strip_alpha",
          [h, raster_level, pack_resolution](double lo, double hi) {
            if (!(hi > lo)) return 0.0;
            // bounding box of the image strip from a dense sample
            const int nx = 64, ny = 8;
            double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
            bool first = true;
            for (int i = 0; i <= nx; ++i) {
              for (int j = 0; j <= ny; ++j) {
                Complex z(static_cast<double>(i) / nx,
                          lo + (hi - lo) * static_cast<double>(j) / ny);
                SpherePoint img = h.apply(SpherePoint(z));
                if (img.is_infinity())
                  throw std::domain_error("strip_alpha: pole inside the strip");
                Complex w = img.value();
                if (first) {
                  xmin = xmax = w.real();
                  ymin = ymax = w.imag();
                  first = false;
                } else {
                  xmin = std::min(xmin, w.real());
                  xmax = std::max(xmax, w.real());
                  ymin = std::min(ymin, w.imag());
                  ymax = std::max(ymax, w.imag());
                }
              }
            }
            // uniform rescale of the window into [0,1]^2 keeps disks round
            double span = std::max(xmax - xmin, ymax - ymin);
            if (!(span > 0)) return 0.0;
            span *= 1.0 + 1e-9;
            DyadicSet raster(2, raster_level);
            std::uint32_t side = raster.side();
            double w_cell = 1.0 / side;
            for (std::uint32_t i = 0; i < side; ++i) {
              for (std::uint32_t j = 0; j < side; ++j) {
                // corner + center probes must all pull back into the strip
                bool inside = true;
                for (auto [du, dv] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0},
                                      {1.0, 1.0}, {0.5, 0.5}}) {
                  Complex win((i + du) * w_cell, (j + dv) * w_cell);
                  Complex plane(xmin + win.real() * span, ymin + win.imag() * span);
                  SpherePoint pre = h.apply_inverse(SpherePoint(plane));
                  if (pre.is_infinity()) {
                    inside = false;
                    break;
                  }
                  Complex u = pre.value();
                  if (!(u.real() >= 0.0 && u.real() <= 1.0 && u.imag() >= lo &&
                        u.imag() <= hi)) {
                    inside = false;
                    break;
                  }
                }
                if (inside) raster.insert(DyadicSet::key2(i, j));
              }
            }
            DiskPacking pack = inner_disk_measure(raster, pack_resolution);
            return pack.total_area * span * span;
          },
          true};
}

StiffLineReport stiff_line_ac_check(const BoundaryHomeo& h, double y,
                                    Complex projection,
                                    const std::vector<int>& scales,
                                    const std::vector<double>& delta_grid,
                                    int N_max, int raster_level,
                                    int pack_resolution) {
  if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("stiff_line_ac_check: y in (0,1)");
  StiffLineReport rep;
  rep.y = y;

  IntervalFunction A = strip_alpha(h, raster_level, pack_resolution);
  rep.stretch = stretch_classify(A, y, N_max, scales);

  Complex u = projection / std::abs(projection);
  Func1D restricted{"projected_line", [h, y, u](double x) {
                      Complex img = h.apply(Complex(x, y));
                      return (img * std::conj(u)).real();
                    }};
  rep.modulus = ac_modulus(restricted, delta_grid);

  const int n = 1 << 12;
  for (int i = 0; i < n; ++i) {
    double x0 = static_cast<double>(i) / n, x1 = static_cast<double>(i + 1) / n;
    rep.slope_bound = std::max(rep.slope_bound,
                               std::abs(restricted(x1) - restricted(x0)) * n);
  }

  rep.ac_consistent = true;
  for (const ACModulusRow& row : rep.modulus)
    if (row.sup_image > rep.slope_bound * row.delta * 1.05) rep.ac_consistent = false;
  return rep;
}

}  // namespace mostow
