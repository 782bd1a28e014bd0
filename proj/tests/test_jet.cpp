#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "minemb/jet.hpp"

using minemb::Jet2;

TEST_CASE("frozen jet arithmetic") {
  const Jet2 sq = Jet2(3, 1, 0) * Jet2(3, 1, 0);
  CHECK(sq.a0 == 9.0);
  CHECK(sq.a1 == 6.0);
  CHECK(sq.a2 == 1.0);

  const Jet2 rt = sqrt(Jet2(4, 4, 1));
  CHECK(rt.a0 == 2.0);
  CHECK(rt.a1 == 1.0);
  CHECK(rt.a2 == 0.0);
}

TEST_CASE("variable jet and derivative accessors") {
  const Jet2 t = Jet2::variable(0.7);
  CHECK(t.value() == 0.7);
  CHECK(t.d1() == 1.0);
  CHECK(t.d2() == 0.0);
  const Jet2 cube = t * t * t;
  CHECK(cube.value() == doctest::Approx(0.343).epsilon(1e-14));
  CHECK(cube.d1() == doctest::Approx(3 * 0.49).epsilon(1e-14));
  CHECK(cube.d2() == doctest::Approx(6 * 0.7).epsilon(1e-14));
}

namespace {
double composite(double t) {
  return std::sin(t) * std::cos(2.0 * t) / std::sqrt(1.0 + t * t);
}
Jet2 composite(const Jet2& t) {
  return sin(t) * cos(2.0 * t) / sqrt(Jet2(1.0) + t * t);
}
}  // namespace

TEST_CASE("jet derivatives agree with central finite differences") {
  const double h = 1e-4;
  for (double t0 : {-1.3, -0.2, 0.0, 0.5, 2.1}) {
    const Jet2 j = composite(Jet2::variable(t0));
    const double fd1 = (composite(t0 + h) - composite(t0 - h)) / (2 * h);
    const double fd2 =
        (composite(t0 + h) - 2 * composite(t0) + composite(t0 - h)) / (h * h);
    CHECK(j.value() == doctest::Approx(composite(t0)).epsilon(1e-14));
    CHECK(std::abs(j.d1() - fd1) < 1e-6);
    CHECK(std::abs(j.d2() - fd2) < 1e-5);
  }
}

TEST_CASE("algebraic closure: inverse operations and trig identity") {
  const Jet2 x(0.8, -1.2, 0.4), y(1.7, 0.3, -0.9);
  const Jet2 div_round = (x / y) * y;
  CHECK(std::abs(div_round.a0 - x.a0) < 1e-13);
  CHECK(std::abs(div_round.a1 - x.a1) < 1e-13);
  CHECK(std::abs(div_round.a2 - x.a2) < 1e-13);

  const Jet2 sq_round = sqrt(y) * sqrt(y);
  CHECK(std::abs(sq_round.a0 - y.a0) < 1e-13);
  CHECK(std::abs(sq_round.a1 - y.a1) < 1e-13);
  CHECK(std::abs(sq_round.a2 - y.a2) < 1e-13);

  const Jet2 one = sin(x) * sin(x) + cos(x) * cos(x);
  CHECK(std::abs(one.a0 - 1.0) < 1e-13);
  CHECK(std::abs(one.a1) < 1e-13);
  CHECK(std::abs(one.a2) < 1e-13);
}

TEST_CASE("jet domain errors") {
  CHECK_THROWS_AS(Jet2(1, 0, 0) / Jet2(0, 1, 0), std::domain_error);
  CHECK_THROWS_AS(sqrt(Jet2(-1, 0, 0)), std::domain_error);
  CHECK_THROWS_AS(sqrt(Jet2(0, 1, 0)), std::domain_error);
}
