#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mostow/boundary_homeo.hpp"
#include "mostow/func_analysis.hpp"

namespace mostow {

// Nonnegative interval function J -> A(J); superadditive on disjoint families
// when declared (spot-checked by the test suite, not enforced here).
struct IntervalFunction {
  std::string name;
  std::function<double(double lo, double hi)> A;
  bool superadditive = true;
};

IntervalFunction length_interval_function();        // A(J) = |J|
IntervalFunction sqrt_interval_function();          // A(J) = sqrt(|J|)

// For each N <= N_max, searches the centered intervals around p at the given
// scales (clipped to [0,1]) for one with A(J) >= N |J|.
struct StretchVerdict {
  int N = 0;
  bool stretched = false;
  int witness_scale = -1;   // scale exponent of the first witness
  double best_ratio = 0;    // max over scales of A(J) / |J|
};

struct StretchReport {
  std::vector<StretchVerdict> per_N;
  bool stretchy = false;  // every N <= N_max has a stretched witness
  int stiff_N = 0;        // smallest N with no witness (0 if none)
};

StretchReport stretch_classify(const IntervalFunction& A, double p, int N_max,
                               const std::vector<int>& scales);

// A(J) = alpha(h([0,1] x J)) estimated by disk packing on a rasterized image
// of the strip (resolution-limited; the packing itself is exact).
IntervalFunction strip_alpha(const BoundaryHomeo& h, int raster_level = 6,
                             int pack_resolution = 6);

// Stiffness of y for the strip measure of h, combined with the adversarial
// AC modulus of the projected restriction x -> Re(conj(projection) h(x+iy)).
struct StiffLineReport {
  double y = 0;
  StretchReport stretch;
  std::vector<ACModulusRow> modulus;
  double slope_bound = 0;   // sup of |d/dx projection(h)| over the line
  bool ac_consistent = false;  // modulus <= slope_bound * delta * 1.05 throughout
};

StiffLineReport stiff_line_ac_check(const BoundaryHomeo& h, double y,
                                    Complex projection,
                                    const std::vector<int>& scales,
                                    const std::vector<double>& delta_grid,
                                    int N_max = 8, int raster_level = 6,
                                    int pack_resolution = 6);

}  // namespace mostow
