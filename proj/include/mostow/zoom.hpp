#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mostow/blmap.hpp"
#include "mostow/boundary_homeo.hpp"

namespace mostow {

// h_n(w) = f_n(h(g_n(w))) where g_n fixes z and scales by 1/n and f_n fixes
// h(z) and scales by n. Rescales h about z to expose its linear behavior.
Complex zoom_step(const BoundaryHomeo& h, Complex z, long n, Complex w);

struct DerivativeEstimate {
  Complex value{};                 // last forward quotient at the stop index
  std::vector<double> steps;       // step sizes actually used
  std::vector<double> residuals;   // successive forward-quotient differences
  bool converged = false;
  bool two_sided_ok = false;       // forward and backward quotients agree
};

std::vector<double> default_derivative_schedule();  // t_k = 2^-k, k = 4..40

// Difference quotients (h(z + vt) - h(z)) / t along the schedule, stopping
// early once the last three residuals sit under tol::deriv_residual without
// growing. One-sided kinks are caught by the backward-quotient comparison.
DerivativeEstimate directional_derivative(const BoundaryHomeo& h, Complex z,
                                          Complex v,
                                          std::span<const double> schedule = {});

std::vector<Complex> default_directions();  // {1, i, 1+i, 1-i, 2+i, 1+2i} normalized

struct AsteriskReport {
  bool is_asterisk = false;
  Complex d1{};  // derivative in direction 1
  std::vector<std::pair<Complex, DerivativeEstimate>> derivatives;
};

// All requested rational-direction derivatives converge and D_1 h(z) != 0.
AsteriskReport asterisk_test(const BoundaryHomeo& h, Complex z,
                             std::span<const Complex> directions = {},
                             double tol_d1 = 1e-6);

struct GridSpec {
  double re_min = 0, re_max = 1, im_min = 0, im_max = 1;
  double spacing = 0.25;
};

struct ScanEntry {
  Complex point;
  AsteriskReport report;
};

std::vector<ScanEntry> asterisk_scan(const BoundaryHomeo& h, const GridSpec& grid,
                                     std::span<const Complex> directions = {},
                                     double tol_d1 = 1e-6);

struct LineSpec {
  Complex point;
  Complex direction;  // normalized internally
};

struct AffineFit {
  Complex offset{};  // value at parameter 0
  Complex slope{};   // per unit parameter
};

struct GoodLineReport {
  bool good = false;
  AffineFit fit;
  double max_residual = 0;
};

// Least-squares affine fit of h restricted to L over [-window, window].
GoodLineReport good_line_test(const BoundaryHomeo& h, const LineSpec& L,
                              int samples = 33, double tol = 1e-7,
                              double window = 1.0);

struct ConformalFitResult {
  MobiusMap mobius;
  double max_residual = 0;
};

// Moebius map through three spread-out samples, residual over the rest. A
// small residual certifies membership in the conformal group.
ConformalFitResult conformal_fit(const BoundaryHomeo& h,
                                 std::span<const Complex> sample_points);

// Runs good_line_test on parallel lines in two directions through `base`;
// when both directions pass, fits a conformal map on a circle of samples.
struct GoodDirectionsReport {
  bool dir1_good = false;
  bool dir2_good = false;
  double dir1_worst_residual = 0;
  double dir2_worst_residual = 0;
  std::optional<ConformalFitResult> fit;
};

GoodDirectionsReport good_directions_check(const BoundaryHomeo& h, Complex base,
                                           Complex dir1, Complex dir2,
                                           int lines_per_direction = 3,
                                           int samples = 33, double tol = 1e-7);

struct DiskRatioReport {
  double inner = 0;  // diameter of the inscribed disk found
  double outer = 0;  // diameter of the smallest enclosing disk
  double ratio = 0;
};

// Inner/outer disk diameters of the image of the disk |z - center| <= radius,
// from `resolution` boundary samples. Throws if the image wraps a pole.
DiskRatioReport disk_ratio(const BoundaryHomeo& h, Complex center, double radius,
                           int resolution = 1024);

struct TamenessReport {
  bool bounded = false;
  double sup_seen = 0;  // sup_n dist(f_n(H(g_n(p))), p)
};

using IsometrySequence = std::function<MobiusMap(int)>;

// Evaluates f_n o H o g_n at p for n <= n_max; flags the orbit bounded when
// it stays inside the ball of the given radius about p. Heuristic witness,
// not a proof.
TamenessReport tameness_probe(const IsometrySequence& pre,
                              const IsometrySequence& post, const BLMap& H,
                              const PointH3& p, int n_max = 1024,
                              double ball_radius = 5.0);

// The zoom sequence of (h, z) realized as isometry pairs: post = g_n scales
// by 1/n about z, pre = f_n scales by n about h(z).
std::pair<IsometrySequence, IsometrySequence> zoom_isometries(const BoundaryHomeo& h,
                                                              Complex z);

}  // namespace mostow
