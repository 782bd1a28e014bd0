#include "minemb/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "minemb/closed_forms.hpp"
#include "minemb/embedding.hpp"
#include "minemb/extrinsic.hpp"
#include "minemb/rng.hpp"

namespace minemb {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string product_params(int n, int k, double r1) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " r1=" + num(r1);
}

std::string proj_params(Field f, int n) {
  return std::string("F=") + field_name(f) + " n=" + std::to_string(n);
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                           static_cast<long>(v.size()));
}

// Remembers the measured value farthest from its reference.
struct WorstTracker {
  double value = 0.0;
  double dev = -1.0;
  void update(double measured, double reference) {
    const double d = std::abs(measured - reference);
    if (d > dev) {
      dev = d;
      value = measured;
    }
  }
};

void require_samples(const CampaignConfig& cfg) {
  if (cfg.samples < 1) throw std::domain_error("campaign needs samples >= 1");
}

}  // namespace

int sampled_cap(Field f) {
  return f == Field::R ? 6 : (f == Field::C ? 4 : 3);
}

// --- minimality -----------------------------------------------------------------

namespace {

double max_mean_curvature(const Embedding& emb, const CampaignConfig& cfg,
                          std::uint64_t& ctr) {
  double worst = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    const FramePoint fp = emb.sample_frame(derive_seed(cfg.seed, ctr++));
    const ExtrinsicReport rep = measure(emb, fp);
    worst = std::max(worst, std::sqrt(rep.h2));
  }
  return worst;
}

}  // namespace

DiscrepancyLedger campaign_minimality(const CampaignConfig& cfg) {
  require_samples(cfg);
  DiscrepancyLedger led{"minimality", {}};
  std::uint64_t ctr = 0;

  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      ProductSphereEmbedding emb(ProductSphereSpec::minimal(n, k));
      led.add(make_less("minimal_mean_curvature",
                        product_params(n, k, emb.spec().r1),
                        max_mean_curvature(emb, cfg, ctr), cfg.tol_mean));
    }
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= sampled_cap(f); ++n) {
      ProjectiveEmbedding emb(ProjectiveSpec(f, n));
      led.add(make_less("minimal_mean_curvature", proj_params(f, n),
                        max_mean_curvature(emb, cfg, ctr), cfg.tol_mean));
    }

  // Designed negative control: at (3,1,0.6) the mean curvature is nonzero
  // with |H|^2 = 1/36; the campaign passes when that is detected.
  {
    ProductSphereEmbedding emb(ProductSphereSpec(3, 1, 0.6));
    double least = std::numeric_limits<double>::infinity();
    WorstTracker h2_track;
    for (int s = 0; s < cfg.samples; ++s) {
      const FramePoint fp = emb.sample_frame(derive_seed(cfg.seed, ctr++));
      const ExtrinsicReport rep = measure(emb, fp);
      least = std::min(least, std::sqrt(rep.h2));
      h2_track.update(rep.h2, 1.0 / 36.0);
    }
    led.add(make_greater("negative_control_detected",
                         product_params(3, 1, 0.6), least, cfg.tol_mean,
                         "a non-minimal radius must fail the minimality bound"));
    led.add(make_approx("negative_control_h2", product_params(3, 1, 0.6),
                        h2_track.value, 1.0 / 36.0, cfg.tol_mean));
  }
  return led;
}

DiscrepancyLedger campaign_minimality_product(const CampaignConfig& cfg, int n,
                                              int k, double r1) {
  require_samples(cfg);
  DiscrepancyLedger led{"minimality", {}};
  std::uint64_t ctr = 0;
  ProductSphereEmbedding emb(ProductSphereSpec(n, k, r1));
  led.add(make_less("minimal_mean_curvature", product_params(n, k, r1),
                    max_mean_curvature(emb, cfg, ctr), cfg.tol_mean));
  return led;
}

DiscrepancyLedger campaign_minimality_projective(const CampaignConfig& cfg,
                                                 Field f, int n) {
  require_samples(cfg);
  if (n > sampled_cap(f))
    throw std::domain_error("projective level beyond the sampling cap");
  DiscrepancyLedger led{"minimality", {}};
  std::uint64_t ctr = 0;
  ProjectiveEmbedding emb(ProjectiveSpec(f, n));
  led.add(make_less("minimal_mean_curvature", proj_params(f, n),
                    max_mean_curvature(emb, cfg, ctr), cfg.tol_mean));
  return led;
}

// --- closed-form match ----------------------------------------------------------

namespace {

void match_product(DiscrepancyLedger& led, const CampaignConfig& cfg,
                   std::uint64_t& ctr, int n, int k, double r1) {
  const ProductGeometry g = product_geometry(n, k, r1);
  ProductSphereEmbedding emb(ProductSphereSpec(n, k, r1));
  const std::string par = product_params(n, k, r1);
  WorstTracker h2t, a2t, st, riccit;
  double worst_gauss = 0.0;
  const double ricci_ref =
      g.minimal_radius ? ricci_infimum_product(n, k) : 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    const FramePoint fp = emb.sample_frame(derive_seed(cfg.seed, ctr++));
    const ExtrinsicReport rep = measure(emb, fp);
    h2t.update(rep.h2, g.h2);
    a2t.update(rep.a2, g.a2);
    st.update(rep.s_sum, g.s);
    worst_gauss = std::max(worst_gauss, std::abs(rep.s_sum - rep.s_gauss));
    if (g.minimal_radius) {
      double rmin = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rep.m; ++i)
        rmin = std::min(rmin, ricci_direction(rep, i));
      riccit.update(rmin, ricci_ref);
    }
  }
  led.add(make_approx("product_h2", par, h2t.value, g.h2, cfg.tol_match));
  led.add(make_approx("product_a2", par, a2t.value, g.a2, cfg.tol_match));
  led.add(make_approx("product_s", par, st.value, g.s, cfg.tol_match));
  led.add(make_less("gauss_identity", par, worst_gauss, cfg.tol_gauss));
  if (g.minimal_radius)
    led.add(make_approx("ricci_infimum", par, riccit.value, ricci_ref,
                        cfg.tol_match));
}

}  // namespace

DiscrepancyLedger campaign_closed_form_match(const CampaignConfig& cfg) {
  require_samples(cfg);
  DiscrepancyLedger led{"closed_form_match", {}};
  std::uint64_t ctr = 0;

  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      match_product(led, cfg, ctr, n, k, minimal_product_r1(n, k));
      Rng rng(derive_seed(cfg.seed, ctr++));
      match_product(led, cfg, ctr, n, k, 0.2 + 0.6 * rng.uniform());
    }

  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= sampled_cap(f); ++n) {
      const ProjectiveGeometry pg = projective_geometry(f, n);
      ProjectiveEmbedding emb(ProjectiveSpec(f, n));
      const int d = real_dim(f);
      const std::string par = proj_params(f, n);
      WorstTracker a2t, st, conft, kholt, krealt;
      double worst_gauss = 0.0, worst_defect = 0.0;
      for (int s = 0; s < cfg.samples; ++s) {
        const std::uint64_t sd = derive_seed(cfg.seed, ctr++);
        const FramePoint fp =
            d > 1 ? emb.adapted_frame(sd) : emb.sample_frame(sd);
        const ExtrinsicReport rep = measure(emb, fp);
        a2t.update(rep.a2, pg.a2);
        st.update(rep.s_sum, pg.s);
        conft.update(rep.conformal_factor, pg.cn);
        worst_defect = std::max(worst_defect, rep.conformal_defect);
        worst_gauss = std::max(worst_gauss, std::abs(rep.s_sum - rep.s_gauss));
        if (pg.has_k_hol)
          for (int t = 1; t < d; ++t)
            kholt.update(rep.sectional(0, t), pg.k_hol);
        if (pg.has_k_real) krealt.update(rep.sectional(0, d), pg.k_real);
      }
      led.add(make_approx("projective_a2", par, a2t.value, pg.a2,
                          cfg.tol_match));
      led.add(make_approx("projective_s", par, st.value, pg.s, cfg.tol_match));
      if (pg.has_k_hol)
        led.add(make_approx("k_holomorphic", par, kholt.value, pg.k_hol,
                            cfg.tol_match));
      if (pg.has_k_real)
        led.add(make_approx("k_real", par, krealt.value, pg.k_real,
                            cfg.tol_match));
      led.add(make_approx("conformal_factor", par, conft.value, pg.cn,
                          cfg.tol_conformal));
      led.add(make_reported(
          "conformal_factor_two_pow_deviation", par,
          std::abs(conft.value - std::pow(2.0, 2.0 / n)),
          "distance of the measured factor from the constant 2^{2/n}; the "
          "constant equals the true factor only for n <= 2"));
      led.add(make_less("conformal_defect", par, worst_defect,
                        cfg.tol_defect));
      led.add(make_less("gauss_identity", par, worst_gauss, cfg.tol_gauss));
    }
  return led;
}

// --- algebraic identities -------------------------------------------------------

DiscrepancyLedger campaign_algebraic_identities(const CampaignConfig& cfg) {
  require_samples(cfg);
  DiscrepancyLedger led{"algebraic_identities", {}};
  std::uint64_t ctr = 0;

  struct Level {
    Field f;
    int n;
  };
  std::vector<Level> levels;
  for (int n = 1; n <= 6; ++n) levels.push_back({Field::R, n});
  for (int n = 1; n <= 4; ++n) levels.push_back({Field::C, n});
  for (int n = 1; n <= 4; ++n) levels.push_back({Field::H, n});

  // Norm identity (on arbitrary, off-sphere vectors), quadratic homogeneity,
  // and invariance under the entrywise unit-scalar action.
  for (const Level& lv : levels) {
    ProjectiveEmbedding emb(ProjectiveSpec(lv.f, lv.n));
    const double r2 = domain_radius(lv.n) * domain_radius(lv.n);
    const double r4 = r2 * r2;
    const int dim = emb.domain_coords();
    double worst_norm = 0.0, worst_hom = 0.0, worst_inv = 0.0;
    Rng rng(derive_seed(cfg.seed, ctr++));
    for (int s = 0; s < cfg.samples; ++s) {
      Eigen::VectorXd v(dim);
      for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
      const Eigen::VectorXd w = emb.value(v);
      const double rhs = v.squaredNorm() * v.squaredNorm();
      worst_norm =
          std::max(worst_norm, std::abs(w.squaredNorm() * r4 - rhs) / rhs);

      const double t = 0.5 + rng.uniform();
      const Eigen::VectorXd wt = emb.value(t * v);
      worst_hom = std::max(worst_hom, (wt - t * t * w).norm() / w.norm());

      AlgebraElement lambda = AlgebraElement::zero(lv.f);
      double n2 = 0.0;
      do {
        for (int q = 0; q < real_dim(lv.f); ++q) lambda.c[q] = rng.gaussian();
        n2 = norm2(lambda);
      } while (n2 < 1e-6);
      const double inv_norm = 1.0 / std::sqrt(n2);
      for (int q = 0; q < 4; ++q) lambda.c[q] *= inv_norm;
      const HVector rotated = scalar_action(lambda, unflatten(lv.f, to_std(v)));
      const Eigen::VectorXd wr = emb.value(to_eigen(flatten(rotated)));
      worst_inv = std::max(worst_inv, (wr - w).norm() / w.norm());
    }
    const std::string par = proj_params(lv.f, lv.n);
    led.add(make_less("norm_identity", par, worst_norm, 1e-10));
    led.add(make_less("homogeneity_degree_two", par, worst_hom, 1e-13));
    led.add(make_less("unit_scalar_invariance", par, worst_inv, 1e-12));
  }

  // Fiber collapse and handedness independence need a fiber (d > 1).
  for (Field f : {Field::C, Field::H})
    for (int n = 1; n <= sampled_cap(f); ++n) {
      ProjectiveEmbedding std_emb((ProjectiveSpec(f, n)));
      ProjectiveEmbedding opp_emb(ProjectiveSpec(f, n), true);
      const std::string par = proj_params(f, n);
      double worst_d1 = 0.0, worst_d2 = 0.0, worst_flip = 0.0;
      for (int s = 0; s < cfg.samples; ++s) {
        const FramePoint fs = std_emb.sample_frame(derive_seed(cfg.seed, ctr++));
        const FramePoint fo = opp_emb.sample_frame(derive_seed(cfg.seed, ctr++));
        for (const auto& dir : fs.fiber) {
          const CurveJet cj = std_emb.jet_along(fs.base, dir);
          worst_d1 = std::max(worst_d1, cj.d1.norm());
          worst_d2 = std::max(worst_d2, cj.d2.norm());
        }
        for (const auto& dir : fo.fiber) {
          const CurveJet cj = opp_emb.jet_along(fo.base, dir);
          worst_d1 = std::max(worst_d1, cj.d1.norm());
          worst_d2 = std::max(worst_d2, cj.d2.norm());
        }
        const ExtrinsicReport rs = measure(std_emb, fs);
        const ExtrinsicReport ro = measure(opp_emb, fo);
        worst_flip = std::max({worst_flip, std::abs(rs.h2 - ro.h2),
                               std::abs(rs.a2 - ro.a2),
                               std::abs(rs.s_sum - ro.s_sum),
                               std::abs(rs.conformal_factor -
                                        ro.conformal_factor)});
      }
      led.add(make_less("fiber_collapse_d1", par, worst_d1, 1e-10));
      led.add(make_less("fiber_collapse_d2", par, worst_d2, 1e-10));
      led.add(make_less("handedness_invariance", par, worst_flip, 1e-10,
                        "scalar invariants under the flipped product table"));
    }

  // Inclusion commutativity across the nested-field towers.
  struct Pair {
    Field from, to;
  };
  for (const Pair& pr : {Pair{Field::R, Field::C}, Pair{Field::R, Field::H},
                         Pair{Field::C, Field::H}})
    for (int n = 1; n <= 4; ++n) {
      const int df = real_dim(pr.from), dt = real_dim(pr.to);
      ProjectiveEmbedding ef((ProjectiveSpec(pr.from, n)));
      ProjectiveEmbedding et((ProjectiveSpec(pr.to, n)));
      const std::vector<int> idx = inclusion_indices(pr.from, pr.to, n);
      double worst = 0.0;
      Rng rng(derive_seed(cfg.seed, ctr++));
      for (int s = 0; s < cfg.samples; ++s) {
        Eigen::VectorXd v(ef.domain_coords());
        for (int i = 0; i < v.size(); ++i) v[i] = rng.gaussian();
        Eigen::VectorXd lift = Eigen::VectorXd::Zero(et.domain_coords());
        for (int i = 0; i <= n; ++i)
          for (int t = 0; t < df; ++t) lift[i * dt + t] = v[i * df + t];
        const Eigen::VectorXd u = ef.value(v);
        Eigen::VectorXd expect = Eigen::VectorXd::Zero(et.image_coords());
        for (long i = 0; i < u.size(); ++i) expect[idx[i]] = u[i];
        worst = std::max(
            worst,
            (et.value(lift) - expect).lpNorm<Eigen::Infinity>());
      }
      led.add(make_less("inclusion_commutes",
                        std::string(field_name(pr.from)) + "->" +
                            field_name(pr.to) + " n=" + std::to_string(n),
                        worst, 1e-14));
    }

  // Dimension ladder: the recursion reproduces the closed forms.
  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= 12; ++n)
      led.add(make_approx(
          "dimension_ladder", proj_params(f, n),
          double(ProjectiveSpec::ladder_recursive(f, n)),
          double(ProjectiveSpec::ladder_closed_form(f, n)), 0.0));

  // Volume consistency: catalog volume = cn^{n'/2} * (total-space sphere
  // volume) / (fiber volume), checked in log space. A second record checks
  // the same identity verbatim at the constant factor 2^{2/n} against the
  // volume closed forms evaluated at that factor.
  struct VolRange {
    Field f;
    int max_n;
  };
  for (const VolRange& vr :
       {VolRange{Field::R, 12}, VolRange{Field::C, 8}, VolRange{Field::H, 6}})
    for (int n = 1; n <= vr.max_n; ++n) {
      const ProjectiveGeometry pg = projective_geometry(vr.f, n);
      const int d = real_dim(vr.f);
      const int big_d = (n + 1) * d;
      const double log_rn = log_domain_radius(n);
      double log_fiber = 0.0;
      switch (vr.f) {
        case Field::R:
          log_fiber = std::log(2.0);
          break;
        case Field::C:
          log_fiber = std::log(2.0 * M_PI) + log_rn;
          break;
        case Field::H:
          log_fiber = std::log(2.0 * M_PI * M_PI) + 3.0 * log_rn;
          break;
      }
      const double log_quotient =
          log_omega(big_d - 1) + (big_d - 1) * log_rn - log_fiber;
      const double log_cn = std::log(2.0 * (n + 1.0) / n) - 2.0 * log_rn;
      led.add(make_approx(
          "volume_consistency", proj_params(vr.f, n),
          std::exp(pg.log_mu - 0.5 * pg.nprime * log_cn - log_quotient), 1.0,
          1e-12));
      led.add(make_approx(
          "volume_consistency_two_pow", proj_params(vr.f, n),
          std::exp(log_projective_volume_at_two_pow(vr.f, n) -
                   (double(pg.nprime) / n) * std::log(2.0) - log_quotient),
          1.0, 1e-12,
          "volume identity stated with the constant factor 2^{2/n} in "
          "place of the true factor cn"));
    }
  return led;
}

// --- inequality sweeps ----------------------------------------------------------

DiscrepancyLedger campaign_inequalities(int n_max) {
  if (n_max < 4)
    throw std::domain_error("inequality sweep needs n_max >= 4");
  DiscrepancyLedger led{"inequalities", {}};

  for (int n = 3; n <= n_max; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (auto& r : gap_records_product(n, k)) led.add(std::move(r));

  for (int n = 3; n <= std::min(30, n_max); ++n)
    for (auto& r : gap_records_field(Field::R, n)) led.add(std::move(r));
  for (int n = 2; n <= std::min(20, n_max); ++n)
    for (auto& r : gap_records_field(Field::C, n)) led.add(std::move(r));
  for (int n = 2; n <= std::min(15, n_max); ++n)
    for (auto& r : gap_records_field(Field::H, n)) led.add(std::move(r));

  for (int n = 3; n <= std::min(60, n_max); ++n)
    for (int k = 1; k <= n - 1; ++k) {
      const ProductGeometry g = minimal_product_geometry(n, k);
      led.add(make_less("aubin_dominance_product", product_params(n, k, g.r1),
                        g.lambda_minimal, aubin_bound(n)));
    }

  for (int n = 3; n <= 10; ++n) {
    const ProjectiveGeometry pg = projective_geometry(Field::R, n);
    led.add(make_less("aubin_dominance_projective", proj_params(Field::R, n),
                      pg.sigma, aubin_bound(pg.nprime)));
  }
  for (int n = 2; n <= 10; ++n) {
    const ProjectiveGeometry pg = projective_geometry(Field::C, n);
    led.add(make_less("aubin_dominance_projective", proj_params(Field::C, n),
                      pg.sigma, aubin_bound(pg.nprime)));
  }
  for (int n = 1; n <= 10; ++n) {
    const ProjectiveGeometry pg = projective_geometry(Field::H, n);
    if (n == 1)
      led.add(make_approx("aubin_saturation", proj_params(Field::H, 1),
                          pg.sigma, aubin_bound(4), 1e-9,
                          "level one over H is the round 4-sphere"));
    else
      led.add(make_less("aubin_dominance_projective", proj_params(Field::H, n),
                        pg.sigma, aubin_bound(pg.nprime)));
  }

  for (Field f : {Field::R, Field::C, Field::H})
    for (int n = 1; n <= 10; ++n)
      for (auto& r : simons_records(f, n)) led.add(std::move(r));

  for (int n = 4; n <= std::min(30, n_max); ++n)
    for (int k = 2; k <= n - 2; ++k) {
      if (2 * k == n) continue;
      const BesseComparison bc = besse_comparison(n, k);
      led.add(make_less("besse_strict",
                        "n=" + std::to_string(n) + " k=" + std::to_string(k),
                        bc.ratio, 1.0));
    }

  // Homothety bookkeeping: the displacement identity has zero residual at
  // the forced value; the forced value obeys the dimension-gap bounds.
  for (int np : {3, 4, 5, 8, 12})
    for (double h2 : {0.0, 1.0, 4.0})
      for (double a2 : {0.0, double(np), 2.0 * np}) {
        const double forced = forced_a2prime(np, h2, a2);
        led.add(make_approx(
            "homothety_residual",
            "n'=" + std::to_string(np) + " h2=" + num(h2) + " a2=" + num(a2),
            homothety_residual(np, h2, a2, forced), 0.0, 1e-9));
      }
  led.add(make_approx("homothety_forced_example", "n'=4 h2=0 a2=4",
                      forced_a2prime(4, 0.0, 4.0),
                      12.0 - 8.0 * std::exp(-0.5), 1e-12));
  for (int n = 3; n <= std::min(30, n_max); ++n)
    led.add(make_less("a_gap_below_two", "n=" + std::to_string(n), a_gap(n),
                      2.0));
  for (int n = 3; n <= 12; ++n)
    for (double h2 : {0.0, 1.0, double(n)}) {
      for (double a2 : {0.0, 0.5 * n, double(n), double(n) + h2}) {
        if (n * (n - 1.0) + h2 - a2 < n * (n - 2.0)) continue;
        led.add(make_less_equal(
            "homothety_forced_bound",
            "n=" + std::to_string(n) + " h2=" + num(h2) + " a2=" + num(a2),
            forced_a2prime(n, h2, a2), (1.0 + a_gap(n)) * n,
            "valid while scalar curvature stays above the balanced value"));
      }
      for (double a2 : {double(n), n + 1.0, 2.0 * n}) {
        led.add(make_less_equal(
            "homothety_difference_bound",
            "n=" + std::to_string(n) + " h2=" + num(h2) + " a2=" + num(a2),
            forced_a2prime(n, h2, a2) - a2, n * a_gap(n),
            "source elides the condition; read as a2 >= n, which makes it provable"));
      }
    }
  return led;
}

// --- f_k grid analysis ----------------------------------------------------------

namespace {

double fk_value(int n, int k, double r) { return f_profile(n, k, r).f; }

// Ternary search for the minimum of the unimodal profile on [lo, hi].
double ternary_min(int n, int k, double lo, double hi) {
  for (int it = 0; it < 300 && hi - lo > 1e-12; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (fk_value(n, k, m1) < fk_value(n, k, m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

void fk_endpoint_record(DiscrepancyLedger& led, int n, int k) {
  const double a = std::sqrt(double(k) / n);
  led.add(make_approx("fk_endpoint",
                      "n=" + std::to_string(n) + " k=" + std::to_string(k),
                      f_profile(n, k, a).f, double(n) * (n - 2), 1e-9));
}

void fk_core_records(DiscrepancyLedger& led, int n, int k, int grid) {
  const std::string par =
      "n=" + std::to_string(n) + " k=" + std::to_string(k);
  const double rbar = std::sqrt((k - 1.0) / (n - 2.0));

  // Grid minimizer over (0,1), refined by ternary search between the
  // neighbors of the best grid point.
  int best = -1;
  double best_f = std::numeric_limits<double>::infinity();
  auto grid_r = [&](int i) { return double(i + 1) / (grid + 1); };
  for (int i = 0; i < grid; ++i) {
    const double fv = fk_value(n, k, grid_r(i));
    if (fv < best_f) {
      best_f = fv;
      best = i;
    }
  }
  const double lo = best == 0 ? grid_r(0) * 0.5 : grid_r(best - 1);
  const double hi = best == grid - 1 ? 0.5 * (grid_r(best) + 1.0)
                                     : grid_r(best + 1);
  led.add(make_approx("fk_minimizer", par, ternary_min(n, k, lo, hi), rbar,
                      1e-6));
  led.add(make_approx("fk_derivative_root", par, f_critical_radius(n, k),
                      rbar, 1e-9));

  // The derivative changes sign exactly once on the grid.
  int changes = 0;
  double prev = f_profile(n, k, grid_r(0)).fprime;
  for (int i = 1; i < grid; ++i) {
    const double cur = f_profile(n, k, grid_r(i)).fprime;
    if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) ++changes;
    prev = cur;
  }
  led.add(make_approx("fk_unique_critical", par, double(changes), 1.0, 0.0));

  // Monotonicity from the balanced radius up. The profile increases there
  // exactly when the critical radius sits at or below sqrt(k/n), i.e. when
  // 2k <= n; the complementary range is covered through the mirror identity
  // f_k(r) = f_{n-k}(sqrt(1-r^2)) and the (n, n-k) row.
  const double a = std::sqrt(double(k) / n);
  if (2 * k <= n) {
    double worst_descent = -std::numeric_limits<double>::infinity();
    double prev_f = fk_value(n, k, a);
    for (int i = 1; i <= grid; ++i) {
      const double r = a + (1.0 - a) * i / (grid + 1.0);
      const double cur_f = fk_value(n, k, r);
      worst_descent = std::max(worst_descent, prev_f - cur_f);
      prev_f = cur_f;
    }
    led.add(make_less("fk_monotone", par, worst_descent, 0.0));
  } else {
    double worst = 0.0;
    for (int i = 0; i <= grid; ++i) {
      const double r = a + (1.0 - a) * i / (grid + 1.0);
      const double f1 = fk_value(n, k, r);
      const double f2 = fk_value(n, n - k, std::sqrt(1.0 - r * r));
      worst = std::max(worst, std::abs(f1 - f2) / f1);
    }
    led.add(make_less("fk_mirror_identity", par, worst, 1e-12,
                      "monotonicity is carried by the mirrored row"));
  }
}

}  // namespace

DiscrepancyLedger campaign_fk(int n, int k, int grid) {
  if (!(k >= 2 && k <= n - 2))
    throw std::domain_error("fk analysis needs 2 <= k <= n-2");
  if (grid < 100) throw std::domain_error("fk analysis needs grid >= 100");
  DiscrepancyLedger led{"fk_analysis", {}};
  fk_endpoint_record(led, n, k);
  fk_core_records(led, n, k, grid);
  return led;
}

DiscrepancyLedger campaign_fk_sweep(int n_max, int grid) {
  if (n_max < 4) throw std::domain_error("fk sweep needs n_max >= 4");
  if (grid < 100) throw std::domain_error("fk analysis needs grid >= 100");
  DiscrepancyLedger led{"fk_analysis", {}};
  for (int n = 3; n <= n_max; ++n)
    for (int k = 1; k <= n - 1; ++k) fk_endpoint_record(led, n, k);
  for (int n = 4; n <= n_max; ++n)
    for (int k = 2; k <= n - 2; ++k) fk_core_records(led, n, k, grid);
  return led;
}

}  // namespace minemb
