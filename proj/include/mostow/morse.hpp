#pragma once

#include <optional>
#include <vector>

#include "mostow/blmap.hpp"
#include "mostow/path.hpp"

namespace mostow {

// e^{-r+1} projection bound for paths clear of the axis by r > 1.
struct TubeReport {
  double r = 0;
  double path_length = 0;
  double projected_length = 0;
  double bound = 0;          // e^{-r+1}
  double ratio = 0;          // projected / path
  bool pass = false;         // ratio <= bound * (1 + tol)
  double min_clearance = 0;  // inf over the refined path of dist to the axis
  bool valid = false;        // min_clearance >= r
  double euclid_length = 0;
  double euclid_projected = 0;
  bool euclid_pass = false;  // projection does not increase Euclidean length
};

TubeReport tube_check(const PathH3& beta, double r);

// Finite-segment deviation bound C = 4K^3 + 2K and the Morse constant C + 1.
struct MorseReport {
  double K = 1;
  double C = 6;              // 4K^3 + 2K
  double bound = 6;          // C for segments, C+1 for window checks
  double observed_deviation = 0;
  PointH3 segment_begin{Complex(0, 0), 1.0};
  PointH3 segment_end{Complex(0, 0), 1.0};
  bool pass = false;
  bool degenerate = false;   // image endpoints too close to span a chord
};

// Deviation of the image of the geodesic segment [p,q] from the geodesic
// through the image endpoints; sampled at `samples` points.
MorseReport segment_deviation(const BLMap& H, const PointH3& p, const PointH3& q,
                              int samples);

// Deviation of the image of gamma over nested windows [-R, R] from the
// limiting chord geodesic (through the boundary-extension images of the
// endpoints), each checked against C + 1.
std::vector<MorseReport> morse_window_check(const BLMap& H, const Geodesic& gamma,
                                            std::span<const double> window_radii,
                                            double spacing = 0.01);

// Grid search for the set of points within R of all three sides of the ideal
// triangle with vertices 0, 1, infinity.
struct CoreGrid {
  double re_min = -2, re_max = 3;
  double im_min = -2, im_max = 2;
  double log_t_min = -3 * 2.302585092994046, log_t_max = 3 * 2.302585092994046;
  // spacings chosen so the grid contains (0.5, 0, 1), the natural core seed
  int re_steps = 21, im_steps = 17, t_steps = 25;
};

struct TriangleCore {
  int count = 0;
  double diameter = 0;  // hyperbolic, exact over the discrete core
  double re_min = 0, re_max = 0, im_min = 0, im_max = 0, t_min = 0, t_max = 0;
};

std::optional<TriangleCore> triangle_core(double R, const CoreGrid& grid = {});

}  // namespace mostow
