#pragma once

#include <vector>

#include "mostow/geometry.hpp"

namespace mostow {

// Polygonal path in H^3: t-positive samples joined by straight Euclidean
// chords. Carrier for the numeric hyperbolic/Euclidean arc lengths.
struct PathH3 {
  std::vector<PointH3> samples;

  explicit PathH3(std::vector<PointH3> pts);
};

struct PathLengths {
  double hyperbolic;  // sum of refined chord lengths under ds_E / t
  double euclidean;   // sum of chord lengths
};

// Adaptive chord-sum refinement, halving until the relative change drops
// below tol::integrate_rel (segment budget tol::max_refine_segments).
PathLengths path_lengths(const PathH3& path);

// Lengths of the polyline through the projected samples (0, ||sample||): on
// the axis these are the total variations of log||.|| and ||.|| over the
// vertex sequence. Both are dominated by the corresponding path lengths.
struct ProjectedLengths {
  double hyperbolic;
  double euclidean;
};
ProjectedLengths projected_path_lengths(const PathH3& path);

// smallest clearance from the axis {0} x (0,inf) over the refined path
double min_axis_clearance(const PathH3& path);

}  // namespace mostow
