#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "mostow/boundary_homeo.hpp"
#include "mostow/rng.hpp"
#include "mostow/scalar_functions.hpp"

using namespace mostow;

TEST_CASE("primitive actions") {
  RealAffine aff = RealAffine::from_matrix(2, 0, 0, 1, Complex(1, 0));
  CHECK(std::abs(aff.apply(Complex(1, 1)) - Complex(3, 1)) < 1e-15);
  CHECK(std::abs(aff.apply_inverse(aff.apply(Complex(0.3, -0.8))) - Complex(0.3, -0.8)) < 1e-14);
  CHECK_THROWS_AS(RealAffine::from_matrix(1, 1, 2, 2), std::invalid_argument);

  RadialPower pw{2.0};
  CHECK(std::abs(pw.apply(Complex(2, 0)) - Complex(4, 0)) < 1e-14);
  CHECK(std::abs(pw.apply(Complex(0, 0))) == 0.0);
  CHECK(std::abs(pw.apply_inverse(pw.apply(Complex(0.5, 1.25))) - Complex(0.5, 1.25)) < 1e-14);

  Shear sh{ShearProfile::Abs};
  CHECK(std::abs(sh.apply(Complex(-2, 1)) - Complex(-2, 3)) < 1e-15);
  CHECK(std::abs(sh.apply_inverse(sh.apply(Complex(0.7, 0.1))) - Complex(0.7, 0.1)) < 1e-15);
}

TEST_CASE("planar primitives fix infinity") {
  for (const char* name : {"abs", "square", "sine", "cantor"}) {
    BoundaryHomeo h = BoundaryHomeo::single(Shear{shear_profile_by_name(name)});
    CHECK(h.fixes_infinity());
  }
  CHECK(BoundaryHomeo::single(RadialPower{0.5}).fixes_infinity());
  CHECK(BoundaryHomeo::single(RealAffine::diag(3, 2)).fixes_infinity());
  CHECK_FALSE(BoundaryHomeo::single(MobiusMap::inversion()).fixes_infinity());
}

TEST_CASE("pipelines invert") {
  BoundaryHomeo h;
  h.primitives.emplace_back(RealAffine::from_matrix(2, 1, 0, 1, Complex(0.5, 0)));
  h.primitives.emplace_back(RadialPower{1.5});
  h.primitives.emplace_back(Shear{ShearProfile::Square});
  h.primitives.emplace_back(MobiusMap::affine(Complex(0, 1), Complex(1, 1)));

  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    Complex z(rng.uniform(-2, 2), rng.uniform(-2, 2));
    SpherePoint back = h.apply_inverse(h.apply(SpherePoint(z)));
    REQUIRE_FALSE(back.is_infinity());
    REQUIRE(std::abs(back.value() - z) < 1e-9);
  }
}

TEST_CASE("cantor staircase values") {
  CHECK(cantor_staircase(0.0) == 0.0);
  CHECK(cantor_staircase(1.0) == 1.0);
  CHECK(cantor_staircase(1.0 / 3.0) == doctest::Approx(0.5));
  CHECK(cantor_staircase(0.5) == doctest::Approx(0.5));
  CHECK(cantor_staircase(2.0 / 3.0) == doctest::Approx(0.5));
  CHECK(cantor_staircase(1.0 / 9.0) == doctest::Approx(0.25));
  CHECK(cantor_staircase(7.0 / 9.0) == doctest::Approx(0.75));

  // monotone
  double prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    double v = cantor_staircase(i / 1000.0);
    REQUIRE(v >= prev - 1e-15);
    prev = v;
  }
}
