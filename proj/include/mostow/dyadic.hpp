#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mostow {

// Exact dyadic rational num / 2^exp, num a signed 64-bit integer, exp >= 0.
// All measure-kit bookkeeping runs on these; no floating point enters the
// covering and Fubini checks.
struct Dyadic {
  long long num = 0;
  int exp = 0;

  Dyadic() = default;
  Dyadic(long long n) : num(n) {}
  Dyadic(long long n, int e);

  static Dyadic pow2(int e);  // 2^e, e may be negative

  Dyadic normalized() const;
  double to_double() const;
  std::string to_string() const;  // "num/2^exp"

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.exp); }

  // exact three-way comparison
  friend int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

// Finite-resolution subset of [0,1]^d, d in {1,2}: occupied dyadic cells of
// side 2^-L, indexed by integers in [0, 2^L). Measure is exact.
class DyadicSet {
 public:
  DyadicSet(int d, int level);
  static DyadicSet full(int d, int level);
  static DyadicSet from_cells_1d(int level, std::vector<std::uint32_t> cells);
  static DyadicSet from_cells_2d(int level, std::vector<std::pair<std::uint32_t, std::uint32_t>> cells);

  int dim() const { return d_; }
  int level() const { return level_; }
  std::uint32_t side() const { return 1u << level_; }
  std::size_t cell_count() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<std::uint64_t>& keys() const { return cells_; }

  static std::uint64_t key1(std::uint32_t i) { return i; }
  static std::uint64_t key2(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }
  static std::uint32_t key_i(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }
  static std::uint32_t key_j(std::uint64_t k) { return static_cast<std::uint32_t>(k & 0xffffffffu); }

  bool contains(std::uint64_t key) const;
  void insert(std::uint64_t key);

  Dyadic measure() const;  // |cells| * 2^{-dL}

  DyadicSet complement() const;
  DyadicSet unite(const DyadicSet& o) const;
  DyadicSet intersect(const DyadicSet& o) const;
  DyadicSet refined(int extra_levels) const;  // same set at a deeper level

  // d=2 only: number of occupied cells in row j (second index)
  std::uint32_t row_count(std::uint32_t j) const;
  std::vector<std::uint32_t> row_counts() const;  // all rows in one pass

 private:
  void check_key(std::uint64_t key) const;
  int d_;
  int level_;
  std::vector<std::uint64_t> cells_;  // sorted unique
};

Dyadic outer_measure(const DyadicSet& s);

// Horizontal-slice check: if mu(S) < t^2 then the rows with slice measure
// exceeding t have total measure at most t. Exact; pass is vacuous when the
// hypothesis fails.
struct FubiniReport {
  Dyadic mu_S;
  DyadicSet F_t;
  Dyadic mu_F;
  bool vacuous = false;
  bool pass = false;
};
FubiniReport fubini_check(const DyadicSet& S, const Dyadic& t);

// Density of S in centered intervals around each occupied cell's midpoint,
// clipped to the ambient [0,1]. A point is flagged delta-porous when the
// density test mu(J cap S) < (1-delta)|J| holds at every requested scale.
struct PorosityVerdict {
  Dyadic point;
  bool porous = false;
  std::vector<double> densities;  // one per scale, informational
};
std::vector<PorosityVerdict> porosity_check(const DyadicSet& S, const Dyadic& delta,
                                            const std::vector<int>& scales);

}  // namespace mostow
