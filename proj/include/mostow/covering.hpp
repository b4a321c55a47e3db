#pragma once

#include <functional>
#include <vector>

#include "mostow/dyadic.hpp"

namespace mostow {

// Closed interval with exact dyadic endpoints.
struct DInterval {
  Dyadic lo, hi;
  Dyadic length() const { return hi - lo; }
};

struct CenteredInterval {
  Dyadic center, half_length;
  DInterval interval() const { return {center - half_length, center + half_length}; }
};

// Interval family over a 1-dimensional dyadic target: every member is
// centered at a point of the target and the members cover the target.
struct IntervalFamily {
  std::vector<CenteredInterval> intervals;
  DyadicSet target;
};

// throws when the centering or coverage condition fails
void validate_besicovich(const IntervalFamily& family);

struct BesicovichResult {
  std::vector<int> picked;   // indices into the family, in pick order
  Dyadic total_length;       // sum of picked lengths
  Dyadic mu_S;
  bool bound_ok = false;     // total_length >= mu_S / 3, exactly
  bool tripled_covers = false;  // union of tripled picks contains the target
};

// Greedy selection, always a largest interval disjoint from the previous
// picks; ties go to the smallest left endpoint. All conclusions exact.
BesicovichResult besicovich_select(const IntervalFamily& family);

// Renewable family: for a left endpoint p and a cap, yields an interval
// [p, p+len] with 0 < len < max_length, endpoints dyadic.
using RenewableFamily = std::function<DInterval(const Dyadic& left, const Dyadic& max_length)>;

RenewableFamily all_dyadic_intervals();

struct VitaliResult {
  std::vector<DInterval> picked;  // pairwise non-overlapping (disjoint interiors)
  Dyadic symdiff;                 // mu(S symdiff union(picked)), exact
  Dyadic lambda;                  // clearance scale used
};

// Frontier-greedy selection from the renewable family until the symmetric
// difference drops under eps. Exact dyadic bookkeeping throughout.
VitaliResult vitali_select(const DyadicSet& S, const RenewableFamily& family,
                           const Dyadic& eps);

}  // namespace mostow
