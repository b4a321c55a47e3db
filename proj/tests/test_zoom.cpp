#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mostow/rng.hpp"
#include "mostow/zoom.hpp"

using namespace mostow;

namespace {

BoundaryHomeo radial2() { return BoundaryHomeo::single(RadialPower{2.0}); }

BoundaryHomeo affine_homeo(Complex a, Complex b) {
  return BoundaryHomeo::single(MobiusMap::affine(a, b));
}

}  // namespace

TEST_CASE("zoom step") {
  BoundaryHomeo id = BoundaryHomeo::identity();
  CHECK(std::abs(zoom_step(id, Complex(0.3, 0.1), 17, Complex(2, -1)) - Complex(2, -1)) < 1e-12);

  // affine maps are n-independent fixed points of the rescaling
  BoundaryHomeo aff = affine_homeo(Complex(2, 1), Complex(-0.5, 0.25));
  Complex z(0.2, -0.4), w(1.5, 0.5);
  Complex expect = aff.apply(z) + Complex(2, 1) * (w - z);
  for (long n : {1l, 10l, 1000l})
    REQUIRE(std::abs(zoom_step(aff, z, n, w) - expect) < 1e-12);

  // z -> 1/(1-z) at 0 has derivative 1: h_n(0.5) approaches 1.5
  BoundaryHomeo cayleyish = BoundaryHomeo::single(MobiusMap{0.0, 1.0, -1.0, 1.0});
  double err = std::abs(zoom_step(cayleyish, 0.0, 1000, Complex(0.5, 0)) - Complex(1.5, 0));
  CHECK(err < 5e-3);

  // consistency at the base point
  CHECK(std::abs(zoom_step(cayleyish, Complex(0.1, 0.1), 7, Complex(0.1, 0.1)) -
                 cayleyish.apply(Complex(0.1, 0.1))) < 1e-12);

  CHECK_THROWS_AS(zoom_step(id, 0.0, 0, 0.0), std::invalid_argument);
}

TEST_CASE("directional derivatives") {
  // affine: exact quotients, zero residuals
  BoundaryHomeo aff = affine_homeo(Complex(3, -2), Complex(1, 1));
  DerivativeEstimate est = directional_derivative(aff, Complex(0.7, 0.2), Complex(1, 0));
  CHECK(est.converged);
  CHECK(std::abs(est.value - Complex(3, -2)) < 1e-9);
  // quotients of an affine map are constant; only rounding noise remains
  for (double r : est.residuals) CHECK(r < 1e-9);

  // radial power a=2 behaves like x|x|: slope 2 at 1, slope 0 at 0
  DerivativeEstimate at1 = directional_derivative(radial2(), Complex(1, 0), Complex(1, 0));
  CHECK(at1.converged);
  CHECK(std::abs(at1.value - Complex(2, 0)) < 1e-5);

  // high-precision one-sided oracle at x=1
  long double t = 1e-6L;
  long double oracle = ((1.0L + t) * (1.0L + t) - 1.0L) / t;
  CHECK(std::abs(static_cast<double>(oracle) - 2.0) < 1e-5);

  DerivativeEstimate at0 = directional_derivative(radial2(), Complex(0, 0), Complex(1, 0));
  CHECK(at0.converged);
  CHECK(std::abs(at0.value) < 1e-6);

  // one-sided kink: forward and backward quotients disagree
  BoundaryHomeo kink = BoundaryHomeo::single(Shear{ShearProfile::Abs});
  DerivativeEstimate bad = directional_derivative(kink, Complex(0, 0), Complex(1, 0));
  CHECK_FALSE(bad.converged);
  CHECK_FALSE(bad.two_sided_ok);
  // along the shear fiber the map is a translation
  DerivativeEstimate good = directional_derivative(kink, Complex(0, 0), Complex(0, 1));
  CHECK(good.converged);

  CHECK_THROWS_AS(directional_derivative(aff, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("asterisk tests") {
  CHECK_FALSE(asterisk_test(radial2(), Complex(0, 0)).is_asterisk);
  AsteriskReport at1 = asterisk_test(radial2(), Complex(1, 0));
  CHECK(at1.is_asterisk);
  CHECK(std::abs(at1.d1 - Complex(2, 0)) < 1e-5);
  CHECK(asterisk_test(affine_homeo(Complex(1, 3), 0.0), Complex(-4, 2)).is_asterisk);

  std::vector<Complex> no_one = {Complex(0, 1)};
  CHECK_THROWS_AS(asterisk_test(radial2(), 0.0, no_one), std::invalid_argument);
}

TEST_CASE("asterisk scans") {
  GridSpec unit{0, 1, 0, 1, 0.25};
  auto all = asterisk_scan(BoundaryHomeo::identity(), unit);
  CHECK(all.size() == 25);

  GridSpec centered{-0.5, 0.5, -0.5, 0.5, 0.5};
  auto rp = asterisk_scan(radial2(), centered);
  CHECK(rp.size() == 8);  // every grid point except the origin
  for (const ScanEntry& e : rp) CHECK(std::abs(e.point) > 1e-12);

  // abs shear: the kink line x=0 fails, everything else passes
  GridSpec wide{-1, 1, -1, 1, 0.5};
  auto sh = asterisk_scan(BoundaryHomeo::single(Shear{ShearProfile::Abs}), wide);
  CHECK(sh.size() == 20);  // 25 minus the 5 points with x = 0
  for (const ScanEntry& e : sh) CHECK(std::abs(e.point.real()) > 1e-12);
}

TEST_CASE("good lines") {
  BoundaryHomeo aff = affine_homeo(Complex(2, 0), Complex(0, 1));
  GoodLineReport g = good_line_test(aff, {Complex(0.5, 0.5), Complex(1, 1)});
  CHECK(g.good);
  CHECK(g.max_residual < 1e-12);

  BoundaryHomeo kink = BoundaryHomeo::single(Shear{ShearProfile::Abs});
  GoodLineReport bent = good_line_test(kink, {Complex(0, 0), Complex(1, 0)});
  CHECK_FALSE(bent.good);
  CHECK(bent.max_residual > 0.3);  // best affine fit of |x| misses by about 1/2

  GoodLineReport fiber = good_line_test(kink, {Complex(0.25, 0), Complex(0, 1)});
  CHECK(fiber.good);

  // verdicts stable under direction rescaling and sample-count changes
  for (double scale : {0.5, 3.0, -1.0}) {
    GoodLineReport r = good_line_test(aff, {Complex(0.5, 0.5), scale * Complex(1, 1)}, 65);
    REQUIRE(r.good);
    GoodLineReport rb = good_line_test(kink, {Complex(0, 0), scale * Complex(1, 0)}, 65);
    REQUIRE_FALSE(rb.good);
  }

  // full affine reparametrizations: shifted base points along the same line,
  // rescaled directions, different sample counts; globally-affine maps stay
  // good, the square shear stays bent on every window of every slanted line
  BoundaryHomeo square = BoundaryHomeo::single(Shear{ShearProfile::Square});
  Rng rng(271828);
  for (int i = 0; i < 50; ++i) {
    Complex d = std::polar(1.0, rng.uniform(0.0, 2 * M_PI));
    Complex p(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double shift = rng.uniform(-2.0, 2.0);
    double scale = rng.uniform(0.2, 4.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    int n = 17 + 2 * static_cast<int>(rng.below(40));
    GoodLineReport base_fit = good_line_test(aff, {p, d}, n);
    GoodLineReport re_fit = good_line_test(aff, {p + shift * d, scale * d}, n);
    REQUIRE(base_fit.good == re_fit.good);
    if (std::abs(d.real()) > 0.3) {
      GoodLineReport bent0 = good_line_test(square, {p, d}, n);
      GoodLineReport bent1 = good_line_test(square, {p + shift * d, scale * d}, n);
      REQUIRE_FALSE(bent0.good);
      REQUIRE_FALSE(bent1.good);
    }
  }
}

TEST_CASE("conformal fit") {
  std::vector<Complex> circle;
  for (int i = 0; i < 16; ++i) circle.push_back(std::polar(1.0, 2 * M_PI * i / 16));

  BoundaryHomeo mob = BoundaryHomeo::single(MobiusMap{2.0, 1.0, 1.0, 1.0}.normalized());
  ConformalFitResult fit = conformal_fit(mob, circle);
  CHECK(fit.max_residual < 1e-9);

  ConformalFitResult idf = conformal_fit(BoundaryHomeo::identity(), circle);
  CHECK(idf.max_residual < 1e-12);

  // a genuine stretch maps circles to non-circular ellipses
  ConformalFitResult bad = conformal_fit(
      BoundaryHomeo::single(RealAffine::diag(2, 1)), circle);
  CHECK(bad.max_residual >= 0.1);

  std::vector<Complex> degenerate = {Complex(0, 0), Complex(0, 0), Complex(1, 0), Complex(2, 0)};
  CHECK_THROWS(conformal_fit(mob, degenerate));
}

TEST_CASE("two-direction consistency") {
  GoodDirectionsReport idr = good_directions_check(BoundaryHomeo::identity(),
                                                   Complex(0.25, 0.25), Complex(1, 0), Complex(0, 1));
  CHECK(idr.dir1_good);
  CHECK(idr.dir2_good);
  REQUIRE(idr.fit.has_value());
  CHECK(idr.fit->max_residual < 1e-9);

  GoodDirectionsReport str = good_directions_check(
      BoundaryHomeo::single(RealAffine::diag(2, 1)), Complex(0.25, 0.25), Complex(1, 0), Complex(0, 1));
  CHECK(str.dir1_good);
  CHECK(str.dir2_good);
  REQUIRE(str.fit.has_value());
  CHECK(str.fit->max_residual >= 0.1);  // correctly rejected by the circle criterion
}

TEST_CASE("disk ratios") {
  DiskRatioReport id = disk_ratio(BoundaryHomeo::identity(), Complex(0, 0), 1.0, 1000);
  CHECK(id.ratio >= 1.0);
  CHECK(id.ratio <= 1.0 + 1e-6);

  DiskRatioReport st = disk_ratio(BoundaryHomeo::single(RealAffine::diag(2, 1)),
                                  Complex(0, 0), 1.0, 1000);
  CHECK(st.ratio >= 2.0);
  CHECK(st.ratio <= 2.02);

  // a generic diagonal stretch lands on its singular value ratio within 1%
  DiskRatioReport st32 = disk_ratio(BoundaryHomeo::single(RealAffine::diag(3, 2)),
                                    Complex(0.5, -0.25), 0.75, 1000);
  CHECK(st32.ratio >= 1.5 * 0.99);
  CHECK(st32.ratio <= 1.5 * 1.01);

  // Moebius maps send disks to disks
  BoundaryHomeo mob = BoundaryHomeo::single(MobiusMap{2.0, 1.0, 1.0, 1.0}.normalized());
  DiskRatioReport mr = disk_ratio(mob, Complex(1, 0), 0.5, 1000);
  CHECK(mr.ratio <= 1.0 + 1e-6);

  // pole inside the disk
  CHECK_THROWS_AS(disk_ratio(mob, Complex(-1, 0), 0.5, 256), std::domain_error);
}

TEST_CASE("tameness probe") {
  BLMap id = BLMap::identity();
  PointH3 base(Complex(0, 0), 1.0);
  IsometrySequence constant = [](int) { return MobiusMap::identity(); };
  TamenessReport still = tameness_probe(constant, constant, id, base);
  CHECK(still.bounded);
  CHECK(still.sup_seen == 0.0);

  // f_n = z -> nz: the orbit of (0,1) runs up the axis
  IsometrySequence blowup = [](int n) { return MobiusMap::affine(static_cast<double>(n), 0.0); };
  TamenessReport escape = tameness_probe(blowup, constant, id, base);
  CHECK_FALSE(escape.bounded);
  CHECK(escape.sup_seen == doctest::Approx(std::log(1024.0)).epsilon(1e-9));

  // zoom sequence of an affine boundary map: the realized orbit is constant
  BoundaryHomeo aff = affine_homeo(Complex(2, 0), Complex(1, 0));
  BLMap realized = compose_bl(std::vector<BLMap>{
      make_stretch_diag(2, 2), make_isometry(MobiusMap::affine(1.0, Complex(1, 0)))});
  auto [pre, post] = zoom_isometries(aff, Complex(0.5, 0));
  TamenessReport tame = tameness_probe(pre, post, realized, base);
  CHECK(tame.bounded);
}
