#include "mostow/covering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mostow {

namespace {

// maximal runs of consecutive occupied cells, as exact intervals
std::vector<DInterval> runs_of(const DyadicSet& s) {
  std::vector<DInterval> runs;
  Dyadic w = Dyadic::pow2(-s.level());
  const auto& keys = s.keys();
  std::size_t i = 0;
  while (i < keys.size()) {
    std::size_t j = i;
    while (j + 1 < keys.size() && keys[j + 1] == keys[j] + 1) ++j;
    Dyadic lo = Dyadic(static_cast<long long>(keys[i]), 0) * w;
    Dyadic hi = Dyadic(static_cast<long long>(keys[j]) + 1, 0) * w;
    runs.push_back({lo, hi});
    i = j + 1;
  }
  return runs;
}

// length of A minus the union of xs, both exact
Dyadic difference_length(const std::vector<DInterval>& a, std::vector<DInterval> xs) {
  std::sort(xs.begin(), xs.end(),
            [](const DInterval& p, const DInterval& q) { return p.lo < q.lo; });
  Dyadic total(0);
  for (const DInterval& seg : a) {
    Dyadic cur = seg.lo;
    for (const DInterval& x : xs) {
      if (x.hi <= cur) continue;
      if (x.lo >= seg.hi) break;
      Dyadic cut_lo = max(x.lo, cur);
      if (cut_lo > cur) total = total + (min(cut_lo, seg.hi) - cur);
      cur = max(cur, min(x.hi, seg.hi));
      if (!(cur < seg.hi)) break;
    }
    if (cur < seg.hi) total = total + (seg.hi - cur);
  }
  return total;
}

bool point_in_set(const DyadicSet& s, const Dyadic& p) {
  // membership in the union of closed cells
  Dyadic w = Dyadic::pow2(-s.level());
  for (std::uint64_t key : s.keys()) {
    Dyadic lo = Dyadic(static_cast<long long>(key), 0) * w;
    if (p >= lo && p <= lo + w) return true;
  }
  return false;
}

}  // namespace

void validate_besicovich(const IntervalFamily& family) {
  if (family.target.dim() != 1)
    throw std::invalid_argument("besicovich: target must be 1-dimensional");
  for (const CenteredInterval& ci : family.intervals) {
    if (!(ci.half_length > Dyadic(0)))
      throw std::invalid_argument("besicovich: intervals need positive length");
    if (!point_in_set(family.target, ci.center))
      throw std::invalid_argument("besicovich: interval center outside the target");
  }
  // coverage: the target must sit inside the union of the family
  std::vector<DInterval> members;
  members.reserve(family.intervals.size());
  for (const CenteredInterval& ci : family.intervals) members.push_back(ci.interval());
  if (difference_length(runs_of(family.target), members) > Dyadic(0))
    throw std::invalid_argument("besicovich: family does not cover the target");
}

BesicovichResult besicovich_select(const IntervalFamily& family) {
  validate_besicovich(family);

  std::vector<int> order(family.intervals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const CenteredInterval& ia = family.intervals[a];
    const CenteredInterval& ib = family.intervals[b];
    int c = compare(ia.half_length, ib.half_length);
    if (c != 0) return c > 0;  // longer first
    c = compare(ia.interval().lo, ib.interval().lo);
    if (c != 0) return c < 0;  // then leftmost
    return a < b;
  });

  BesicovichResult res;
  res.mu_S = family.target.measure();
  res.total_length = Dyadic(0);
  std::vector<DInterval> picked;
  for (int idx : order) {
    DInterval cand = family.intervals[idx].interval();
    bool disjoint = true;
    for (const DInterval& p : picked) {
      if (!(cand.hi < p.lo || p.hi < cand.lo)) {  // closed intervals touching overlap
        disjoint = false;
        break;
      }
    }
    if (disjoint) {
      picked.push_back(cand);
      res.picked.push_back(idx);
      res.total_length = res.total_length + cand.length();
    }
  }

  res.bound_ok = Dyadic(3) * res.total_length >= res.mu_S;
  std::vector<DInterval> tripled;
  tripled.reserve(picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i) {
    const CenteredInterval& ci = family.intervals[res.picked[i]];
    tripled.push_back({ci.center - Dyadic(3) * ci.half_length,
                       ci.center + Dyadic(3) * ci.half_length});
  }
  res.tripled_covers = difference_length(runs_of(family.target), tripled) == Dyadic(0);
  return res;
}

RenewableFamily all_dyadic_intervals() {
  return [](const Dyadic& left, const Dyadic& max_length) -> DInterval {
    // largest power of two strictly below the cap
    Dyadic len = Dyadic::pow2(-1);
    while (!(len < max_length)) len = len * Dyadic::pow2(-1);
    return {left, left + len};
  };
}

VitaliResult vitali_select(const DyadicSet& S, const RenewableFamily& family,
                           const Dyadic& eps) {
  if (S.dim() != 1) throw std::invalid_argument("vitali_select: needs d=1");
  if (!(eps > Dyadic(0))) throw std::invalid_argument("vitali_select: eps must be positive");

  VitaliResult res;
  std::vector<DInterval> uncovered = runs_of(S);
  if (uncovered.empty()) {
    res.symdiff = Dyadic(0);
    res.lambda = eps;
    return res;
  }

  // clearance scale: intervals this short starting in S spill at most
  // lambda past each of the R runs, keeping mu(T - S) <= R * lambda < eps/4
  long long runs = static_cast<long long>(uncovered.size());
  Dyadic lambda = Dyadic::pow2(-1);
  while (!(Dyadic(4 * runs) * lambda < eps)) lambda = lambda * Dyadic::pow2(-1);
  res.lambda = lambda;

  Dyadic half_eps = eps * Dyadic(1, 1);
  int guard = 0;
  while (!uncovered.empty()) {
    Dyadic remaining(0);
    for (const DInterval& seg : uncovered) remaining = remaining + seg.length();
    if (remaining < half_eps) break;
    if (++guard > 2000000) throw std::runtime_error("vitali_select: generator stalled");

    DInterval comp = uncovered.front();
    DInterval pick = family(comp.lo, lambda);
    if (pick.lo != comp.lo || !(pick.length() > Dyadic(0)) || !(pick.length() < lambda))
      throw std::invalid_argument("vitali_select: generator returned an invalid interval");
    res.picked.push_back(pick);

    // advance the frontier
    std::vector<DInterval> next;
    for (const DInterval& seg : uncovered) {
      if (seg.hi <= pick.hi) continue;
      next.push_back({max(seg.lo, pick.hi), seg.hi});
    }
    uncovered = std::move(next);
  }

  // picks are pairwise non-overlapping, so both differences are exact sums
  std::vector<DInterval> s_runs = runs_of(S);
  res.symdiff = difference_length(s_runs, res.picked) +
                difference_length(res.picked, s_runs);
  return res;
}

}  // namespace mostow
