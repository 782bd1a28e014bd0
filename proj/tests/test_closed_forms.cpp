#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "minemb/closed_forms.hpp"

using namespace minemb;

namespace {
constexpr double kPi = 3.14159265358979323846;
const SigmaEntry* find_entry(const std::vector<SigmaEntry>& t,
                             const std::string& manifold) {
  for (const auto& e : t)
    if (e.manifold == manifold) return &e;
  return nullptr;
}
}  // namespace

TEST_CASE("unit sphere volumes") {
  CHECK(omega(1) == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(omega(2) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(omega(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(omega(4) == doctest::Approx(8 * kPi * kPi / 3).epsilon(1e-14));
  CHECK(log_omega(100) == doctest::Approx(std::log(omega(100))).epsilon(1e-13));
}

TEST_CASE("balanced product is the minimal one") {
  const ProductGeometry g = product_geometry(4, 2, std::sqrt(0.5));
  CHECK(g.minimal_radius);
  CHECK(g.h2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g.a2 == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(g.s == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(g.mu == doctest::Approx(4 * kPi * kPi).epsilon(1e-13));
  CHECK(g.yamabe_quotient == doctest::Approx(16 * kPi).epsilon(1e-13));
  CHECK(g.lambda_minimal == doctest::Approx(16 * kPi).epsilon(1e-13));

  const ProductGeometry m = minimal_product_geometry(5, 2);
  CHECK(m.r1 == doctest::Approx(std::sqrt(0.4)).epsilon(1e-15));
  CHECK(m.a2 == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(m.s == doctest::Approx(15.0).epsilon(1e-13));
}

TEST_CASE("non-minimal control point") {
  const ProductGeometry g = product_geometry(3, 1, 0.6);
  CHECK(g.h2 == doctest::Approx(1.0 / 36.0).epsilon(1e-13));
  CHECK(g.a2 == doctest::Approx(209.0 / 72.0).epsilon(1e-13));
  CHECK(g.s == doctest::Approx(3.125).epsilon(1e-13));
  // Contracted Gauss equation ties the four invariants together.
  CHECK(g.s == doctest::Approx(3.0 * 2.0 + g.h2 - g.a2).epsilon(1e-13));
  CHECK_FALSE(g.minimal_radius);
}

TEST_CASE("einstein radius data and the besse comparison") {
  const EinsteinData e = einstein_data(5, 2);
  CHECK(e.rbar == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-14));
  CHECK(volume_ratio_fn(5, 2, 0.0) ==
        doctest::Approx(0.4 * std::pow(0.6, 1.5)).epsilon(1e-13));
  CHECK(volume_ratio_fn(5, 2, 1.0) ==
        doctest::Approx((1.0 / 3.0) * std::pow(2.0 / 3.0, 1.5)).epsilon(1e-13));

  const BesseComparison b = besse_comparison(5, 2);
  CHECK(b.lambda_einstein < b.sigma);
  CHECK(std::abs(b.ratio - 0.99033) < 1e-4);
  const double expected =
      std::pow(volume_ratio_fn(5, 2, 1.0) / volume_ratio_fn(5, 2, 0.0), 0.4);
  CHECK(b.ratio == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(besse_comparison(6, 3), std::domain_error);
  CHECK_THROWS_AS(einstein_data(5, 1), std::domain_error);
}

TEST_CASE("radius profile: endpoint, critical point, frozen case") {
  const FProfile p = f_profile(4, 2, std::sqrt(0.5));
  CHECK(p.omega_factor == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.f == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(p.fprime) < 1e-10);

  for (int n : {5, 7, 12})
    for (int k = 1; k <= n - 1; ++k)
      CHECK(f_profile(n, k, std::sqrt(double(k) / n)).f ==
            doctest::Approx(double(n) * (n - 2)).epsilon(1e-12));

  CHECK(f_critical_radius(7, 3) ==
        doctest::Approx(std::sqrt(2.0 / 5.0)).epsilon(1e-9));
  CHECK_THROWS_AS(f_profile(4, 2, 1.0), std::domain_error);
}

TEST_CASE("projective catalog: frozen low-dimensional rows") {
  const ProjectiveGeometry r2 = projective_geometry(Field::R, 2);
  CHECK(r2.gn == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(r2.cn == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r2.k_real == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r2.mu == doctest::Approx(6 * kPi).epsilon(1e-13));
  CHECK(r2.a2 == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(r2.s == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK_FALSE(r2.sigma_valid);
  CHECK_FALSE(r2.has_k_hol);

  const ProjectiveGeometry c2 = projective_geometry(Field::C, 2);
  CHECK(c2.mu == doctest::Approx(4.5 * kPi * kPi).epsilon(1e-13));
  CHECK(c2.a2 == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(c2.s == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(c2.k_hol == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(c2.k_real == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(c2.sigma == doctest::Approx(24 * kPi / std::sqrt(2.0)).epsilon(1e-13));

  const ProjectiveGeometry h1 = projective_geometry(Field::H, 1);
  CHECK(h1.gn == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(h1.mu == doctest::Approx(8 * kPi * kPi / 3).epsilon(1e-13));
  CHECK(h1.a2 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(h1.s == doctest::Approx(12.0).epsilon(1e-13));
  CHECK(h1.k_hol == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_FALSE(h1.has_k_real);
  CHECK(h1.sigma == doctest::Approx(48 * kPi / std::sqrt(6.0)).epsilon(1e-13));

  const ProjectiveGeometry c1 = projective_geometry(Field::C, 1);
  CHECK(c1.k_hol == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c1.s == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(c1.codim == 0);

  const ProjectiveGeometry r3 = projective_geometry(Field::R, 3);
  CHECK(r3.sigma ==
        doctest::Approx(6 * std::pow(kPi, 4.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("projective catalog: structural identities across the sweep") {
  struct Range {
    Field f;
    int max_n;
  };
  for (const Range r : {Range{Field::R, 30}, Range{Field::C, 20},
                        Range{Field::H, 15}})
    for (int n = 1; n <= r.max_n; ++n) {
      const ProjectiveGeometry g = projective_geometry(r.f, n);
      CHECK(g.gn == doctest::Approx(2.0 * (n + 1.0) / n).epsilon(1e-14));
      CHECK(g.cn * g.rn * g.rn == doctest::Approx(g.gn).epsilon(1e-13));
      // Minimal-case contracted Gauss equation internal to the catalog.
      const double np = g.nprime;
      CHECK(std::abs(g.s - (np * (np - 1) - g.a2)) <=
            1e-12 * std::max(1.0, np * (np - 1)));
      CHECK(g.a2 >= 0.0);
    }
}

TEST_CASE("volume forms at the constant factor match only through n = 2") {
  for (Field f : {Field::R, Field::C, Field::H}) {
    for (int n = 1; n <= 2; ++n)
      CHECK(log_projective_volume_at_two_pow(f, n) ==
            doctest::Approx(projective_geometry(f, n).log_mu).epsilon(1e-13));
    CHECK(std::abs(log_projective_volume_at_two_pow(f, 3) -
                   projective_geometry(f, 3).log_mu) > 0.1);
  }
  // Worked values of the factored volume identity.
  const double r2q = 9.0 / 4.0;  // rn^4 at n = 2
  CHECK(projective_geometry(Field::C, 2).mu ==
        doctest::Approx(4.0 * (std::pow(kPi, 3) * r2q / (2 * kPi)))
            .epsilon(1e-13));
  CHECK(projective_geometry(Field::H, 1).mu ==
        doctest::Approx(16.0 * omega(7) / (2 * kPi * kPi)).epsilon(1e-13));
}

TEST_CASE("aubin bound, rigidity threshold, homothety bookkeeping") {
  CHECK(aubin_bound(4) ==
        doctest::Approx(12 * std::sqrt(8 * kPi * kPi / 3)).epsilon(1e-13));
  // The quaternionic line is the round 4-sphere: its sigma saturates Aubin.
  CHECK(projective_geometry(Field::H, 1).sigma ==
        doctest::Approx(aubin_bound(4)).epsilon(1e-12));
  CHECK(simons_threshold(4, 1) == doctest::Approx(4.0).epsilon(1e-15));

  const auto req = simons_records(Field::R, 2);
  REQUIRE(req.size() == 1);
  CHECK(req[0].name == "simons_equality");
  CHECK(req[0].pass);
  const auto rc2 = simons_records(Field::C, 2);
  REQUIRE(rc2.size() == 1);
  CHECK(rc2[0].name == "simons_gap");
  CHECK(rc2[0].pass);
  const auto rr1 = simons_records(Field::R, 1);
  REQUIRE(rr1.size() == 1);
  CHECK(rr1[0].pass);

  const double forced = forced_a2prime(4, 0.0, 4.0);
  CHECK(forced ==
        doctest::Approx(12.0 - 8.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(std::abs(homothety_residual(4, 0.0, 4.0, forced)) < 1e-14);

  for (int n = 3; n <= 60; ++n) {
    CHECK(a_gap(n) > 0.0);
    CHECK(a_gap(n) < 2.0);
  }
}

TEST_CASE("gap-bound rows at the sweep extremes") {
  const GapRowProduct row = gap_row_product(4, 2);
  CHECK(row.c == doctest::Approx(std::sqrt(2.0 / 3.0) / 2.0).epsilon(1e-13));
  CHECK(row.b ==
        doctest::Approx(2.0 * (1.0 - row.c * std::exp(-0.5))).epsilon(1e-13));
  CHECK(row.b > row.a);

  for (int k : {1, 30, 59})
    for (const auto& rec : gap_records_product(60, k)) {
      CHECK(rec.pass);
      CHECK(rec.margin > 0.0);
    }
  struct Extreme {
    Field f;
    int n;
  };
  for (const Extreme e : {Extreme{Field::R, 30}, Extreme{Field::C, 20},
                          Extreme{Field::H, 15}})
    for (const auto& rec : gap_records_field(e.f, e.n)) {
      CHECK(rec.pass);
      CHECK(rec.margin > 0.0);
    }
}

TEST_CASE("sigma table rows") {
  const std::vector<SigmaEntry> t = sigma_table(4);
  const SigmaEntry* s22 = find_entry(t, "S^2xS^2");
  REQUIRE(s22 != nullptr);
  CHECK(s22->value == doctest::Approx(16 * kPi).epsilon(1e-13));
  CHECK(s22->dimension == 4);
  const SigmaEntry* rp3 = find_entry(t, "RP^3");
  REQUIRE(rp3 != nullptr);
  CHECK(rp3->value ==
        doctest::Approx(6 * std::pow(kPi, 4.0 / 3.0)).epsilon(1e-13));
  const SigmaEntry* cp2 = find_entry(t, "CP^2");
  REQUIRE(cp2 != nullptr);
  CHECK(cp2->value ==
        doctest::Approx(24 * kPi / std::sqrt(2.0)).epsilon(1e-13));
  const SigmaEntry* hp1 = find_entry(t, "HP^1");
  REQUIRE(hp1 != nullptr);
  CHECK(hp1->value == doctest::Approx(aubin_bound(4)).epsilon(1e-13));
  CHECK_THROWS_AS(sigma_table(2), std::domain_error);
}

TEST_CASE("ricci infimum of minimal products") {
  CHECK(ricci_infimum_product(7, 3) ==
        doctest::Approx(14.0 / 3.0).epsilon(1e-14));
  CHECK(ricci_infimum_product(4, 2) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ricci_infimum_product(5, 1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ricci_infimum_product(7, 4) ==
        doctest::Approx(ricci_infimum_product(7, 3)).epsilon(1e-14));
  double prev = ricci_infimum_product(4, 2);
  for (int n = 5; n <= 100; ++n) {
    const double cur = ricci_infimum_product(n, 2);
    CHECK(cur > prev);
    prev = cur;
  }
}
