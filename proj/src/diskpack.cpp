#include "mostow/diskpack.hpp"

#include <cmath>
#include <stdexcept>

namespace mostow {

// Centers and radii are multiples of 2^-12 bounded by 2, so every product
// below carries at most ~26 significant bits: the double arithmetic is exact
// and the admission decisions match the dyadic ones bit for bit.
DiskPacking inner_disk_measure(const DyadicSet& S, int resolution) {
  if (S.dim() != 2) throw std::invalid_argument("inner_disk_measure: needs d=2");
  if (resolution < 1 || resolution > 12)
    throw std::invalid_argument("inner_disk_measure: resolution out of range");
  if (S.level() > 12) throw std::invalid_argument("inner_disk_measure: level too deep");

  DiskPacking pack;
  if (S.empty()) return pack;

  const int L = S.level();
  const std::uint32_t side = S.side();
  const double w = std::ldexp(1.0, -L);

  std::vector<std::uint8_t> occ(static_cast<std::size_t>(side) * side, 0);
  for (std::uint64_t key : S.keys())
    occ[static_cast<std::size_t>(DyadicSet::key_i(key)) * side + DyadicSet::key_j(key)] = 1;
  std::vector<std::uint32_t> pre((side + 1) * (side + 1), 0);
  for (std::uint32_t i = 0; i < side; ++i)
    for (std::uint32_t j = 0; j < side; ++j)
      pre[(i + 1) * (side + 1) + (j + 1)] = pre[i * (side + 1) + (j + 1)] +
                                            pre[(i + 1) * (side + 1) + j] -
                                            pre[i * (side + 1) + j] +
                                            occ[static_cast<std::size_t>(i) * side + j];
  auto box_full = [&](std::uint32_t i0, std::uint32_t i1, std::uint32_t j0, std::uint32_t j1) {
    std::uint32_t want = (i1 - i0) * (j1 - j0);
    std::uint32_t got = pre[i1 * (side + 1) + j1] - pre[i0 * (side + 1) + j1] -
                        pre[i1 * (side + 1) + j0] + pre[i0 * (side + 1) + j0];
    return got == want;
  };

  auto cell_dist_sq = [&](double cx, double cy, std::uint32_t i, std::uint32_t j) {
    double lox = i * w, loy = j * w;
    double dx = cx < lox ? lox - cx : (cx > lox + w ? cx - (lox + w) : 0.0);
    double dy = cy < loy ? loy - cy : (cy > loy + w ? cy - (loy + w) : 0.0);
    return dx * dx + dy * dy;
  };

  auto disk_inside = [&](double cx, double cy, double r) {
    if (cx - r < 0.0 || cx + r > 1.0 || cy - r < 0.0 || cy + r > 1.0) return false;
    auto clamp_idx = [&](double v) {
      long long i = static_cast<long long>(std::floor(v * side));
      return static_cast<std::uint32_t>(std::max(0ll, std::min<long long>(i, side - 1)));
    };
    std::uint32_t i0 = clamp_idx(cx - r), i1 = clamp_idx(cx + r);
    std::uint32_t j0 = clamp_idx(cy - r), j1 = clamp_idx(cy + r);
    if (box_full(i0, i1 + 1, j0, j1 + 1)) return true;
    double r2 = r * r;
    for (std::uint32_t i = i0; i <= i1; ++i)
      for (std::uint32_t j = j0; j <= j1; ++j) {
        if (occ[static_cast<std::size_t>(i) * side + j]) continue;
        // an unoccupied cell meeting the open disk disqualifies the center
        if (cell_dist_sq(cx, cy, i, j) < r2) return false;
      }
    return true;
  };

  struct DD {
    double cx, cy, r;
  };
  std::vector<DD> picked;
  const double grid_w = std::ldexp(1.0, -resolution);
  const long long grid_n = 1ll << resolution;

  for (int k = 1; k <= resolution; ++k) {
    double r = std::ldexp(1.0, -k);
    for (long long p = 0; p <= grid_n; ++p) {
      double cx = p * grid_w;
      if (cx - r < 0.0 || cx + r > 1.0) continue;
      for (long long q = 0; q <= grid_n; ++q) {
        double cy = q * grid_w;
        bool clear = true;
        for (const DD& d : picked) {
          double dx = cx - d.cx, dy = cy - d.cy, rr = r + d.r;
          if (dx * dx + dy * dy < rr * rr) {  // open disks: tangency allowed
            clear = false;
            break;
          }
        }
        if (!clear || !disk_inside(cx, cy, r)) continue;
        picked.push_back({cx, cy, r});
        pack.disks.push_back({Dyadic(p, resolution), Dyadic(q, resolution), Dyadic(1, k)});
      }
    }
  }

  for (const DD& d : picked) pack.total_area += M_PI * d.r * d.r;
  return pack;
}

}  // namespace mostow
