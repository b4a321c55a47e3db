#pragma once

#include <vector>

#include "mostow/dyadic.hpp"

namespace mostow {

// Greedy packing of disjoint disks inside a planar dyadic set: centers on a
// 2^-resolution grid, dyadic radii tried largest first. The admission tests
// (disk inside the set, disjoint from earlier picks) run on exact dyadic
// arithmetic; only the reported area uses floating point. The total is a
// certified lower bound for the inner disk measure.
struct DiskPacking {
  struct Disk {
    Dyadic cx, cy, radius;
  };
  std::vector<Disk> disks;
  double total_area = 0;
};

DiskPacking inner_disk_measure(const DyadicSet& S, int resolution);

}  // namespace mostow
