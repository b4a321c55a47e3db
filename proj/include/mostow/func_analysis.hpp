#pragma once

#include <utility>
#include <vector>

#include "mostow/dyadic.hpp"
#include "mostow/scalar_functions.hpp"

namespace mostow {

// Finite list of intervals of [0,1] with pairwise disjoint interiors.
struct PartialPartition {
  std::vector<std::pair<double, double>> intervals;

  explicit PartialPartition(std::vector<std::pair<double, double>> xs);
  double total_length() const;  // |I|
};

// |I'|: sum over the partition of the interval bounded by the endpoint
// values f(lo), f(hi).
double image_endpoint_length(const Func1D& f, const PartialPartition& partition);

// Adversarial absolute-continuity modulus: for each delta, the largest |I'|
// over equal-size dyadic-endpoint partitions of total length <= delta,
// maximized over levels up to max_level. A non-vanishing column as delta
// shrinks is evidence against absolute continuity.
struct ACModulusRow {
  double delta = 0;
  double sup_image = 0;  // best |I'| found
  int best_level = 0;
};
std::vector<ACModulusRow> ac_modulus(const Func1D& f,
                                     const std::vector<double>& delta_grid,
                                     int max_level = 14);

// The level-`depth` ternary intervals of the Cantor set as a partial
// partition: small total length, endpoint rises summing to one.
PartialPartition cantor_partition(int depth);

// f = f_plus - f_minus on the sample grid: f_plus the running discrete
// variation, f_minus = f_plus - f; both nondecreasing. Samples are quantized
// to the 2^-40 grid so the reconstruction identity is bitwise exact.
struct VariationResult {
  std::vector<double> x;
  std::vector<double> f_samples;  // quantized values the identity refers to
  std::vector<double> f_plus;
  std::vector<double> f_minus;
  double total_variation = 0;
  bool unbounded_variation = false;  // variation still growing under refinement
};
VariationResult variation_decompose(const Func1D& f, int samples);

// Grid points carrying both an a-shallow and a b-steep one-sided interval at
// every requested scale, reported as a 1-dimensional dyadic set.
DyadicSet differentiability_profile(const Func1D& f, double a, double b,
                                    const std::vector<int>& scales, int grid_level);

// Interval cover of f(A) from the sampled envelope of f on each cell of A.
struct ImageCover {
  std::vector<std::pair<double, double>> intervals;  // merged, sorted
  double total_length = 0;
  bool pass = false;  // total_length < eps
};
ImageCover image_null_check(const Func1D& f, const DyadicSet& A, double eps,
                            int samples_per_cell = 64);

}  // namespace mostow
