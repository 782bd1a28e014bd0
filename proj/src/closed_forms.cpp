#include "minemb/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minemb {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double log_factorial(long long m) { return std::lgamma(double(m) + 1.0); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// log of the minimal product's volume, mu = (k/n)^{k/2}((n-k)/n)^{(n-k)/2}
// omega_k omega_{n-k}.
double log_mu_minimal(int n, int k) {
  return 0.5 * k * std::log(double(k) / n) +
         0.5 * (n - k) * std::log(double(n - k) / n) + log_omega(k) +
         log_omega(n - k);
}

}  // namespace

double log_omega(int n) {
  require(n >= 0, "sphere volume needs n >= 0");
  const double h = 0.5 * (n + 1);
  return std::log(2.0) + h * std::log(kPi) - std::lgamma(h);
}

double omega(int n) { return std::exp(log_omega(n)); }

double minimal_product_r1(int n, int k) {
  return std::sqrt(double(k) / double(n));
}

ProductGeometry product_geometry(int n, int k, double r1) {
  require(n >= 3, "product needs n >= 3");
  require(k >= 1 && k <= n - 1, "product needs 1 <= k <= n-1");
  require(r1 > 0.0 && r1 < 1.0, "product needs r1 in (0,1)");
  ProductGeometry g;
  g.n = n;
  g.k = k;
  g.r1 = r1;
  g.r2 = std::sqrt(1.0 - r1 * r1);
  const double t1 = g.r2 / g.r1;  // principal curvature of the first factor
  const double t2 = g.r1 / g.r2;
  const double trace = k * t1 - (n - k) * t2;
  g.h2 = trace * trace;
  g.a2 = k * t1 * t1 + (n - k) * t2 * t2;
  g.s = k * (k - 1) / (g.r1 * g.r1) + (n - k) * (n - k - 1) / (g.r2 * g.r2);
  const double log_mu = log_omega(k) + log_omega(n - k) +
                        k * std::log(g.r1) + (n - k) * std::log(g.r2);
  g.mu = std::exp(log_mu);
  g.yamabe_quotient = g.s * std::exp(2.0 / n * log_mu);
  g.minimal_radius = std::abs(r1 - minimal_product_r1(n, k)) < 1e-12;
  g.lambda_minimal =
      double(n) * (n - 2) * std::exp(2.0 / n * log_mu_minimal(n, k));
  return g;
}

ProductGeometry minimal_product_geometry(int n, int k) {
  ProductGeometry g = product_geometry(n, k, minimal_product_r1(n, k));
  g.minimal_radius = true;
  return g;
}

double volume_ratio_fn(int n, int k, double x) {
  require(x >= 0.0 && x <= 1.0, "volume ratio argument must lie in [0,1]");
  require(n - 2 * x > 0.0, "volume ratio needs n > 2x");
  const double d = n - 2.0 * x;
  return std::pow((k - x) / d, 0.5 * k) *
         std::pow((n - k - x) / d, 0.5 * (n - k));
}

EinsteinData einstein_data(int n, int k) {
  require(n >= 4, "Einstein product needs n >= 4");
  require(k >= 2 && k <= n - 2, "Einstein product needs 2 <= k <= n-2");
  EinsteinData e;
  e.n = n;
  e.k = k;
  e.rbar = std::sqrt(double(k - 1) / double(n - 2));
  e.mu_einstein =
      volume_ratio_fn(n, k, 1.0) * omega(k) * omega(n - k);
  e.lambda_einstein =
      double(n) * (n - 2) * std::pow(e.mu_einstein, 2.0 / n);
  return e;
}

FProfile f_profile(int n, int k, double r) {
  require(n >= 3, "profile needs n >= 3");
  require(k >= 1 && k <= n - 1, "profile needs 1 <= k <= n-1");
  require(r > 0.0 && r < 1.0, "profile radius must lie in (0,1)");
  FProfile p;
  p.omega_factor = std::exp(
      2.0 / n * (log_omega(k) + log_omega(n - k) - log_mu_minimal(n, k)));
  const double r2 = r * r;
  const double q = (1.0 - r2) / r2;
  const double big_a = std::pow(q, double(n - k) / n);
  const double big_b = std::pow(1.0 / q, double(k) / n);
  p.f = (k * (k - 1) * big_a + (n - k) * (n - k - 1) * big_b) * p.omega_factor;
  // Differentiating f directly: f' carries the bracket (n-k-1)B - (k-1)A,
  // negative below the critical radius and positive above it, so f attains
  // its unique interior minimum there.
  p.fprime = 2.0 * k * (n - k) / (r * (1.0 - r2) * n) *
             ((n - k - 1) * big_b - (k - 1) * big_a) * p.omega_factor;
  return p;
}

double f_critical_radius(int n, int k) {
  require(k >= 2 && k <= n - 2, "critical radius needs 2 <= k <= n-2");
  // (k-1)A(r) - (n-k-1)B(r) is strictly decreasing: A falls and B grows.
  auto sign_term = [&](double r) {
    const double q = (1.0 - r * r) / (r * r);
    return (k - 1) * std::pow(q, double(n - k) / n) -
           (n - k - 1) * std::pow(1.0 / q, double(k) / n);
  };
  double lo = 1e-9, hi = 1.0 - 1e-9;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sign_term(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double log_domain_radius(int n) {
  require(n >= 1, "domain radius needs n >= 1");
  return 0.5 * std::log(0.5 * (n + 1)) + 0.25 * log_factorial(n - 1);
}

double domain_radius(int n) { return std::exp(log_domain_radius(n)); }

ProjectiveGeometry projective_geometry(Field f, int n) {
  require(n >= 1, "projective space needs n >= 1");
  ProjectiveGeometry g;
  g.field = f;
  g.n = n;
  const int d = real_dim(f);
  g.nprime = n * d;
  switch (f) {
    case Field::R:
      g.l = (long long)n * (n + 3) / 2 - 1;
      break;
    case Field::C:
      g.l = (long long)(n + 1) * (n + 1) - 2;
      break;
    case Field::H:
      g.l = (long long)(n + 1) * (2 * n + 1) - 2;
      break;
  }
  g.codim = g.l - g.nprime;
  const double log_rn = log_domain_radius(n);
  g.rn = std::exp(log_rn);
  // The tower map is built from quadratic spherical harmonics of the domain
  // sphere S^D(rn), D + 1 = (n+1) dim_R(F). Each component satisfies
  // Delta x = (2(D+1)/rn^2) x, so the induced metric on the n'-dimensional
  // quotient is the eigenvalue over n' times the flat one:
  //   cn = 2(D+1)/(n' rn^2) = 2(n+1)/(n rn^2),  gn = cn rn^2 = 2(n+1)/n.
  // The field dimension cancels, so gn is uniform across R, C, H.
  g.gn = 2.0 * (n + 1.0) / n;
  const double log_gn = std::log(g.gn);
  g.cn = g.gn / (g.rn * g.rn);
  const double inv_g = 1.0 / g.gn;
  g.k_real = inv_g;
  g.has_k_real = n >= 2;
  g.k_hol = (f == Field::R) ? 0.0 : 4.0 * inv_g;
  g.has_k_hol = f != Field::R;
  switch (f) {
    case Field::R:
      g.a2 = double(n) * (n - 1) * (1.0 - inv_g);
      g.s = double(n) * (n - 1) * inv_g;
      // half the volume of S^n(sqrt(gn)): the double cover identification.
      g.log_mu = log_omega(n) - std::log(2.0) + 0.5 * n * log_gn;
      g.sigma_valid = n >= 3;
      if (g.sigma_valid)
        g.sigma = double(n) * (n - 1) *
                  std::exp(2.0 / n * (log_omega(n) - std::log(2.0)));
      break;
    case Field::C:
      g.a2 = 2.0 * n * (2 * n - 1) *
             (1.0 - 2.0 * (n + 1) / (2 * n - 1) * inv_g);
      g.s = 4.0 * n * (n + 1) * inv_g;
      g.log_mu = n * log_gn + n * std::log(kPi) - log_factorial(n);
      g.sigma_valid = n >= 2;
      if (g.sigma_valid)
        g.sigma = 4.0 * n * (n + 1) *
                  std::exp(1.0 / n * (n * std::log(kPi) - log_factorial(n)));
      break;
    case Field::H:
      g.a2 = 4.0 * n * (4 * n - 1) *
             (1.0 - 4.0 * (n + 2) / (4 * n - 1) * inv_g);
      g.s = 16.0 * n * (n + 2) * inv_g;
      g.log_mu =
          2.0 * n * log_gn + 2.0 * n * std::log(kPi) - log_factorial(2 * n + 1);
      g.sigma_valid = true;
      g.sigma = 16.0 * n * (n + 2) *
                std::exp(1.0 / (2 * n) *
                         (2 * n * std::log(kPi) - log_factorial(2 * n + 1)));
      break;
  }
  g.mu = std::exp(g.log_mu);
  return g;
}

double log_projective_volume_at_two_pow(Field f, int n) {
  require(n >= 1, "projective space needs n >= 1");
  const double log_rn = log_domain_radius(n);
  // Effective radius squared computed at the constant factor 2^{2/n} instead
  // of the true conformal factor; coincides with the catalog volume only for
  // n <= 2.
  const double log_gq = 2.0 / n * std::log(2.0) + 2.0 * log_rn;
  switch (f) {
    case Field::R:
      return log_omega(n) - std::log(2.0) + 0.5 * n * log_gq;
    case Field::C:
      return n * log_gq + n * std::log(kPi) - log_factorial(n);
    case Field::H:
      return 2.0 * n * log_gq + 2.0 * n * std::log(kPi) -
             log_factorial(2 * n + 1);
  }
  return 0.0;
}

double aubin_bound(int nprime) {
  require(nprime >= 3, "the conformal upper bound needs dimension >= 3");
  return double(nprime) * (nprime - 1) *
         std::exp(2.0 / nprime * log_omega(nprime));
}

double simons_threshold(int nprime, long long p) {
  require(p >= 1, "rigidity threshold needs codimension >= 1");
  return double(nprime) * double(p) / (2.0 * double(p) - 1.0);
}

std::vector<InequalityRecord> simons_records(Field f, int n) {
  const ProjectiveGeometry g = projective_geometry(f, n);
  const std::string params =
      std::string("F=") + field_name(f) + " n=" + std::to_string(n);
  std::vector<InequalityRecord> out;
  if (g.codim == 0) {
    out.push_back(make_approx("simons_codim_zero", params, double(g.codim),
                              0.0, 0.5,
                              "codimension 0: threshold undefined, skipped"));
    return out;
  }
  const double thr = simons_threshold(g.nprime, g.codim);
  if (f == Field::R && n == 2) {
    out.push_back(make_approx("simons_equality", params, g.a2, thr, 1e-12,
                              "lower endpoint: sits exactly at the threshold"));
  } else {
    out.push_back(make_greater("simons_gap", params, g.a2, thr));
  }
  return out;
}

double forced_a2prime(int nprime, double h2, double a2) {
  const double c = double(nprime) * (nprime - 1);
  return c - (c + h2 - a2) * std::exp(-2.0 / nprime);
}

double homothety_residual(int nprime, double h2, double a2, double a2prime) {
  const double c = double(nprime) * (nprime - 1);
  return (c + h2 - a2) - (c - a2prime) * std::exp(2.0 / nprime);
}

double a_gap(int n) { return (n - 2.0) * (1.0 - std::exp(-2.0 / n)); }

GapRowProduct gap_row_product(int n, int k) {
  require(n >= 3, "gap row needs n >= 3");
  require(k >= 1 && k <= n - 1, "gap row needs 1 <= k <= n-1");
  GapRowProduct row;
  row.n = n;
  row.k = k;
  const double q = std::exp(2.0 / n * (log_omega(n) - log_mu_minimal(n, k)));
  row.c = q / (n - 2);
  row.b = (n - 2) * (1.0 - row.c * std::exp(-2.0 / n));
  row.a = a_gap(n);
  return row;
}

std::vector<InequalityRecord> gap_records_product(int n, int k) {
  const GapRowProduct row = gap_row_product(n, k);
  const std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  std::vector<InequalityRecord> out;
  out.push_back(make_interval("volume_ratio_c", params, row.c, 0.0, 1.0));
  out.push_back(make_greater("gap_b_vs_a", params, row.b, row.a,
                             "exponent 2/n"));
  out.push_back(make_greater(
      "gap_b_vs_a_alt", params, row.b, row.a,
      "alternate exponent convention 2/n'; a product hypersurface has no "
      "separate n', so it is read as n"));
  return out;
}

GapRowField gap_row_field(Field f, int n) {
  require(n >= 2, "field gap row needs n >= 2");
  const ProjectiveGeometry g = projective_geometry(f, n);
  GapRowField row;
  row.field = f;
  row.n = n;
  row.nprime = g.nprime;
  switch (f) {
    case Field::R:
      row.bracket = std::exp(2.0 / n * std::log(2.0)) / (double(n) * (n - 1));
      break;
    case Field::C:
      row.bracket = std::exp(2.0 / g.nprime *
                             (std::log(2.0 * kPi) + log_omega(2 * n) -
                              log_omega(2 * n + 1))) /
                    (4.0 * n * (n + 1));
      break;
    case Field::H:
      row.bracket = std::exp(2.0 / g.nprime *
                             (std::log(2.0 * kPi * kPi) + log_omega(4 * n) -
                              log_omega(4 * n + 3))) /
                    (16.0 * n * (n + 2));
      break;
  }
  const double t = (double(g.nprime) * (g.nprime - 1) - g.a2) / g.a2;
  row.b = t * (1.0 - std::exp(-2.0 / g.nprime) * row.bracket);
  row.a_nprime = t * (1.0 - std::exp(-2.0 / g.nprime));
  row.a_n = t * (1.0 - std::exp(-2.0 / n));
  return row;
}

std::vector<InequalityRecord> gap_records_field(Field f, int n) {
  const GapRowField row = gap_row_field(f, n);
  const std::string params =
      std::string("F=") + field_name(f) + " n=" + std::to_string(n);
  std::vector<InequalityRecord> out;
  out.push_back(make_greater("field_gap_b_vs_a", params, row.b, row.a_nprime,
                             "exponent 2/n', the real dimension"));
  out.push_back(make_greater("field_gap_b_vs_a_alt", params, row.b, row.a_n,
                             "exponent 2/n, the level index"));
  return out;
}

std::vector<SigmaEntry> sigma_table(int max_dimension) {
  require(max_dimension >= 3, "sigma table needs max dimension >= 3");
  std::vector<SigmaEntry> out;
  for (int m = 3; m <= max_dimension; ++m) {
    out.push_back({"S^1xS^" + std::to_string(m - 1), m, aubin_bound(m),
                   "n(n-1) omega_n^{2/n}"});
    for (int k = 2; 2 * k <= m && k <= m - 2; ++k) {
      out.push_back({"S^" + std::to_string(k) + "xS^" + std::to_string(m - k),
                     m, minimal_product_geometry(m, k).lambda_minimal,
                     "n(n-2) mu^{2/n}"});
    }
    {
      const ProjectiveGeometry g = projective_geometry(Field::R, m);
      out.push_back({"RP^" + std::to_string(m), m, g.sigma,
                     "n(n-1) 2^{-2/n} omega_n^{2/n}"});
    }
    if (m % 2 == 0 && m / 2 >= 2) {
      const ProjectiveGeometry g = projective_geometry(Field::C, m / 2);
      out.push_back({"CP^" + std::to_string(m / 2), m, g.sigma,
                     "4n(n+1) (pi^n/n!)^{1/n}"});
    }
    if (m % 4 == 0 && m / 4 >= 1) {
      const ProjectiveGeometry g = projective_geometry(Field::H, m / 4);
      out.push_back({"HP^" + std::to_string(m / 4), m, g.sigma,
                     "16n(n+2) (pi^{2n}/(2n+1)!)^{1/(2n)}"});
    }
  }
  return out;
}

BesseComparison besse_comparison(int n, int k) {
  require(n != 2 * k,
          "the two volumes coincide at n = 2k; comparison is void");
  BesseComparison b;
  b.n = n;
  b.k = k;
  b.lambda_einstein = einstein_data(n, k).lambda_einstein;
  b.sigma = minimal_product_geometry(n, k).lambda_minimal;
  b.ratio = b.lambda_einstein / b.sigma;
  return b;
}

double ricci_infimum_product(int n, int k) {
  require(n >= 3, "ricci infimum needs n >= 3");
  require(k >= 1 && k <= n - 1, "ricci infimum needs 1 <= k <= n-1");
  const int kk = std::min(k, n - k);
  return double(n) * (kk - 1) / kk;
}

}  // namespace minemb
