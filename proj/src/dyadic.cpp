#include "mostow/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mostow {

namespace {

using i128 = __int128;

constexpr int kMaxExp = 62;

void check_exp(int e) {
  if (e < 0 || e > kMaxExp) throw std::overflow_error("Dyadic: exponent out of range");
}

long long narrow(i128 v) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
    throw std::overflow_error("Dyadic: numerator overflow");
  return static_cast<long long>(v);
}

}  // namespace

Dyadic::Dyadic(long long n, int e) : num(n), exp(e) {
  check_exp(e);
  *this = normalized();
}

Dyadic Dyadic::pow2(int e) {
  if (e >= 0) {
    if (e > 62) throw std::overflow_error("Dyadic: pow2 too large");
    return Dyadic(1ll << e, 0);
  }
  check_exp(-e);
  return Dyadic(1, -e);
}

Dyadic Dyadic::normalized() const {
  Dyadic r = *this;
  while (r.exp > 0 && (r.num & 1) == 0) {
    r.num >>= 1;
    --r.exp;
  }
  if (r.num == 0) r.exp = 0;
  return r;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num), -exp); }

std::string Dyadic::to_string() const {
  if (exp == 0) return std::to_string(num);
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp, b.exp);
  check_exp(e);
  i128 an = static_cast<i128>(a.num) << (e - a.exp);
  i128 bn = static_cast<i128>(b.num) << (e - b.exp);
  return Dyadic(narrow(an + bn), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  check_exp(a.exp + b.exp);
  return Dyadic(narrow(static_cast<i128>(a.num) * b.num), a.exp + b.exp);
}

int compare(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp, b.exp);
  i128 an = static_cast<i128>(a.num) << (e - a.exp);
  i128 bn = static_cast<i128>(b.num) << (e - b.exp);
  if (an < bn) return -1;
  if (an > bn) return 1;
  return 0;
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

DyadicSet::DyadicSet(int d, int level) : d_(d), level_(level) {
  if (d != 1 && d != 2) throw std::invalid_argument("DyadicSet: d must be 1 or 2");
  if (level < 0 || level > 24) throw std::invalid_argument("DyadicSet: level out of range");
}

DyadicSet DyadicSet::full(int d, int level) {
  DyadicSet s(d, level);
  std::uint32_t n = s.side();
  if (d == 1) {
    s.cells_.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) s.cells_.push_back(key1(i));
  } else {
    s.cells_.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) s.cells_.push_back(key2(i, j));
  }
  std::sort(s.cells_.begin(), s.cells_.end());
  return s;
}

DyadicSet DyadicSet::from_cells_1d(int level, std::vector<std::uint32_t> cells) {
  DyadicSet s(1, level);
  for (std::uint32_t i : cells) s.insert(key1(i));
  return s;
}

DyadicSet DyadicSet::from_cells_2d(int level,
                                   std::vector<std::pair<std::uint32_t, std::uint32_t>> cells) {
  DyadicSet s(2, level);
  for (auto [i, j] : cells) s.insert(key2(i, j));
  return s;
}

void DyadicSet::check_key(std::uint64_t key) const {
  std::uint32_t n = side();
  if (d_ == 1) {
    if (key >= n) throw std::out_of_range("DyadicSet: cell index out of range");
  } else {
    if (key_i(key) >= n || key_j(key) >= n)
      throw std::out_of_range("DyadicSet: cell index out of range");
  }
}

bool DyadicSet::contains(std::uint64_t key) const {
  return std::binary_search(cells_.begin(), cells_.end(), key);
}

void DyadicSet::insert(std::uint64_t key) {
  check_key(key);
  auto it = std::lower_bound(cells_.begin(), cells_.end(), key);
  if (it == cells_.end() || *it != key) cells_.insert(it, key);
}

Dyadic DyadicSet::measure() const {
  return Dyadic(static_cast<long long>(cells_.size()), 0) * Dyadic::pow2(-d_ * level_);
}

DyadicSet DyadicSet::complement() const {
  DyadicSet all = full(d_, level_);
  DyadicSet out(d_, level_);
  std::set_difference(all.cells_.begin(), all.cells_.end(), cells_.begin(), cells_.end(),
                      std::back_inserter(out.cells_));
  return out;
}

DyadicSet DyadicSet::unite(const DyadicSet& o) const {
  if (o.d_ != d_ || o.level_ != level_) throw std::invalid_argument("DyadicSet: level mismatch");
  DyadicSet out(d_, level_);
  std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                 std::back_inserter(out.cells_));
  return out;
}

DyadicSet DyadicSet::intersect(const DyadicSet& o) const {
  if (o.d_ != d_ || o.level_ != level_) throw std::invalid_argument("DyadicSet: level mismatch");
  DyadicSet out(d_, level_);
  std::set_intersection(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                        std::back_inserter(out.cells_));
  return out;
}

DyadicSet DyadicSet::refined(int extra_levels) const {
  if (extra_levels < 0) throw std::invalid_argument("refined: negative level change");
  DyadicSet out(d_, level_ + extra_levels);
  std::uint32_t f = 1u << extra_levels;
  for (std::uint64_t key : cells_) {
    if (d_ == 1) {
      std::uint32_t i = static_cast<std::uint32_t>(key);
      for (std::uint32_t a = 0; a < f; ++a) out.cells_.push_back(key1(i * f + a));
    } else {
      std::uint32_t i = key_i(key), j = key_j(key);
      for (std::uint32_t a = 0; a < f; ++a)
        for (std::uint32_t b = 0; b < f; ++b) out.cells_.push_back(key2(i * f + a, j * f + b));
    }
  }
  std::sort(out.cells_.begin(), out.cells_.end());
  return out;
}

std::uint32_t DyadicSet::row_count(std::uint32_t j) const {
  if (d_ != 2) throw std::logic_error("row_count: needs d=2");
  std::uint32_t count = 0;
  for (std::uint64_t key : cells_)
    if (key_j(key) == j) ++count;
  return count;
}

std::vector<std::uint32_t> DyadicSet::row_counts() const {
  if (d_ != 2) throw std::logic_error("row_counts: needs d=2");
  std::vector<std::uint32_t> counts(side(), 0);
  for (std::uint64_t key : cells_) ++counts[key_j(key)];
  return counts;
}

Dyadic outer_measure(const DyadicSet& s) { return s.measure(); }

FubiniReport fubini_check(const DyadicSet& S, const Dyadic& t) {
  if (S.dim() != 2) throw std::invalid_argument("fubini_check: needs d=2");
  if (!(t > Dyadic(0)) || t > Dyadic(1))
    throw std::invalid_argument("fubini_check: t must lie in (0,1]");
  FubiniReport rep{S.measure(), DyadicSet(1, S.level()), Dyadic(0)};
  Dyadic cell = Dyadic::pow2(-S.level());
  std::vector<std::uint32_t> counts = S.row_counts();
  for (std::uint32_t j = 0; j < S.side(); ++j) {
    Dyadic slice = Dyadic(counts[j], 0) * cell;
    if (slice > t) rep.F_t.insert(DyadicSet::key1(j));
  }
  rep.mu_F = rep.F_t.measure();
  rep.vacuous = !(rep.mu_S < t * t);
  rep.pass = rep.vacuous || rep.mu_F <= t;
  return rep;
}

namespace {

// exact measure of S intersected with the closed interval [lo, hi]
Dyadic measure_in_interval(const DyadicSet& S, const Dyadic& lo, const Dyadic& hi) {
  Dyadic total(0);
  Dyadic w = Dyadic::pow2(-S.level());
  for (std::uint64_t key : S.keys()) {
    Dyadic a = Dyadic(static_cast<long long>(key), 0) * w;
    Dyadic b = a + w;
    Dyadic left = max(a, lo);
    Dyadic right = min(b, hi);
    if (right > left) total = total + (right - left);
  }
  return total;
}

}  // namespace

std::vector<PorosityVerdict> porosity_check(const DyadicSet& S, const Dyadic& delta,
                                            const std::vector<int>& scales) {
  if (S.dim() != 1) throw std::invalid_argument("porosity_check: needs d=1");
  if (!(delta > Dyadic(0)) || !(delta < Dyadic(1)))
    throw std::invalid_argument("porosity_check: delta must lie in (0,1)");
  std::vector<PorosityVerdict> out;
  for (std::uint64_t key : S.keys()) {
    PorosityVerdict v;
    // cell midpoint (2i+1) / 2^{L+1}
    v.point = Dyadic(2 * static_cast<long long>(key) + 1, S.level() + 1);
    v.porous = true;
    for (int k : scales) {
      Dyadic half = Dyadic::pow2(-k - 1);
      Dyadic lo = max(v.point - half, Dyadic(0));
      Dyadic hi = min(v.point + half, Dyadic(1));
      Dyadic inside = measure_in_interval(S, lo, hi);
      Dyadic len = hi - lo;
      v.densities.push_back(inside.to_double() / len.to_double());
      // porous at this scale iff mu(J cap S) < (1-delta)|J|
      if (!(inside < (Dyadic(1) - delta) * len)) v.porous = false;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mostow
