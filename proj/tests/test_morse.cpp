#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mostow/morse.hpp"
#include "mostow/rng.hpp"

using namespace mostow;

TEST_CASE("tube check on reference paths") {
  // arc of constant norm: the projection collapses to a point
  std::vector<PointH3> arc;
  for (int i = 0; i <= 32; ++i) arc.emplace_back(std::polar(1.0, 0.05 * i), 0.1);
  for (PointH3& p : arc) {
    double n = p.norm();
    p = PointH3(p.z / n, p.t / n);
  }
  TubeReport collapsed = tube_check(PathH3(arc), 2.0);
  CHECK(collapsed.valid);
  CHECK(collapsed.projected_length < 1e-9);
  CHECK(collapsed.pass);
  CHECK(collapsed.euclid_pass);

  // straight low chord: lengths agree with the integration oracle
  PathH3 chord({PointH3(Complex(1, 0), 0.1), PointH3(Complex(2, 0), 0.1)});
  TubeReport t = tube_check(chord, 2.99);
  CHECK(t.valid);  // clearance asinh(10) ~ 2.998
  CHECK(t.min_clearance == doctest::Approx(std::asinh(10.0)).epsilon(1e-9));
  CHECK(t.path_length == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(t.projected_length == doctest::Approx(0.5 * std::log(4.01 / 1.01)).epsilon(1e-6));
  CHECK(t.pass);

  // bound field formula
  CHECK(tube_check(chord, 2.0).bound == doctest::Approx(std::exp(-1.0)));

  CHECK_THROWS_AS(tube_check(chord, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(tube_check(chord, 0.5), std::invalid_argument);

  // a path inside the forbidden tube is flagged invalid
  PathH3 close({PointH3(Complex(0.1, 0), 1.0), PointH3(Complex(0.2, 0), 1.0)});
  CHECK_FALSE(tube_check(close, 2.0).valid);
}

TEST_CASE("segment deviation bounds") {
  PointH3 p(Complex(-0.8, 0), 0.6);
  PointH3 q(Complex(0.8, 0), 0.6);

  MorseReport ident = segment_deviation(BLMap::identity(), p, q, 200);
  CHECK(ident.K == doctest::Approx(1.0));
  CHECK(ident.C == doctest::Approx(6.0));
  CHECK(ident.observed_deviation < 1e-7);
  CHECK(ident.pass);

  MorseReport k2 = segment_deviation(make_stretch_diag(2, 1), p, q, 1000);
  CHECK(k2.C == doctest::Approx(36.0));
  CHECK(k2.observed_deviation < 1.0);  // far under the bound for this family
  CHECK(k2.pass);

  CHECK_THROWS_AS(segment_deviation(BLMap::identity(), p, p, 100), std::invalid_argument);

  // a segment whose image endpoints almost coincide is reported degenerate
  PointH3 close_a(Complex(0, 0), 1.0);
  PointH3 close_b(Complex(1e-10, 0), 1.0);
  MorseReport deg = segment_deviation(BLMap::identity(), close_a, close_b, 10);
  CHECK(deg.degenerate);
  CHECK(deg.observed_deviation == 0.0);
  CHECK(deg.pass);
}

TEST_CASE("deviation is an isometry conjugation invariant") {
  Rng rng(1777);
  BLMap H = make_stretch_diag(2, 1);
  for (int i = 0; i < 40; ++i) {
    PointH3 p(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), std::exp(rng.uniform(-1, 1)));
    PointH3 q(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), std::exp(rng.uniform(-1, 1)));
    if (dist_h3(p, q) < 0.5) continue;
    MobiusMap f = MobiusMap::affine(std::polar(std::exp(rng.uniform(-0.5, 0.5)),
                                               rng.uniform(0.0, 2 * M_PI)),
                                    Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    MobiusMap g = MobiusMap::affine(std::polar(1.0, rng.uniform(0.0, 2 * M_PI)),
                                    Complex(rng.uniform(-1, 1), 0));
    std::vector<BLMap> conj = {make_isometry(f), H, make_isometry(g)};
    BLMap moved = compose_bl(conj);
    MorseReport base = segment_deviation(H, f(p), f(q), 400);
    MorseReport transported = segment_deviation(moved, p, q, 400);
    REQUIRE(std::abs(base.observed_deviation - transported.observed_deviation) < 1e-8);
  }
}

TEST_CASE("window checks against the limiting chord") {
  Geodesic gamma = geodesic_from_endpoints(SpherePoint(-1.0), SpherePoint(1.0));
  std::vector<double> radii = {2, 4, 8};

  auto ident = morse_window_check(BLMap::identity(), gamma, radii);
  REQUIRE(ident.size() == 3);
  for (const MorseReport& r : ident) {
    CHECK(r.bound == doctest::Approx(7.0));  // 4 + 2 + 1
    CHECK(r.observed_deviation < 1e-7);
    CHECK(r.pass);
  }

  auto k3 = morse_window_check(make_stretch_diag(3, 1), gamma, radii);
  for (const MorseReport& r : k3) {
    CHECK(r.bound == doctest::Approx(115.0));  // 4*27 + 6 + 1
    CHECK(r.pass);
  }
  // deviations grow toward the sup over the whole geodesic but stay bounded
  CHECK(k3[0].observed_deviation <= k3[2].observed_deviation + 1e-9);

  std::vector<double> bad = {2, 2};
  CHECK_THROWS_AS(morse_window_check(BLMap::identity(), gamma, bad), std::invalid_argument);
}

TEST_CASE("ideal triangle core") {
  CHECK_FALSE(triangle_core(0.0).has_value());

  auto core = triangle_core(0.7);
  REQUIRE(core.has_value());
  // the point (0.5, 1) sits within 0.7 of all three sides
  Geodesic a = geodesic_from_endpoints(SpherePoint(0.0), SpherePoint::infinity());
  Geodesic b = geodesic_from_endpoints(SpherePoint(1.0), SpherePoint::infinity());
  Geodesic c = geodesic_from_endpoints(SpherePoint(0.0), SpherePoint(1.0));
  PointH3 center(Complex(0.5, 0), 1.0);
  CHECK(dist_to_geodesic(center, a).distance == doctest::Approx(std::asinh(0.5)).epsilon(1e-9));
  CHECK(dist_to_geodesic(center, b).distance == doctest::Approx(std::asinh(0.5)).epsilon(1e-9));
  CHECK(dist_to_geodesic(center, c).distance == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(core->re_min <= 0.5);
  CHECK(core->re_max >= 0.5);
  CHECK(core->t_min <= 1.0);
  CHECK(core->t_max >= 1.0);

  // big R: nonempty with finite diameter, stable under grid refinement
  auto big = triangle_core(10.0);
  REQUIRE(big.has_value());
  CHECK(std::isfinite(big->diameter));
  CoreGrid fine;
  fine.re_steps = 31;
  fine.im_steps = 25;
  fine.t_steps = 37;
  auto big_fine = triangle_core(10.0, fine);
  REQUIRE(big_fine.has_value());
  CHECK(std::abs(big->diameter - big_fine->diameter) < 0.8);

  // monotone in R at fixed resolution
  auto small = triangle_core(0.5);
  if (small) CHECK(small->count <= core->count);
  CHECK(core->count <= triangle_core(1.0)->count);
}
