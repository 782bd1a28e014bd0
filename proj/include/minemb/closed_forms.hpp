#pragma once

#include <string>
#include <vector>

#include "minemb/algebra.hpp"
#include "minemb/ledger.hpp"

namespace minemb {

// Analytic catalog for the two embedding families: volumes, curvature
// invariants, Yamabe-type quantities, and the inequality ledgers built from
// them. Everything here is closed-form; the measurement engine is elsewhere
// and the two are compared only in tests and campaigns.

// log of the volume of the unit n-sphere, omega_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double log_omega(int n);
double omega(int n);

// --- products S^k(r1) x S^{n-k}(r2), r1^2 + r2^2 = 1 ---------------------

struct ProductGeometry {
  int n = 0, k = 0;
  double r1 = 0.0, r2 = 0.0;
  double h2 = 0.0;      // |H|^2 of the product inside S^{n+1}
  double a2 = 0.0;      // |alpha|^2
  double s = 0.0;       // scalar curvature
  double mu = 0.0;      // volume
  double yamabe_quotient = 0.0;  // s * mu^{2/n} (scalar curvature is constant)
  bool minimal_radius = false;   // r1 = sqrt(k/n) within 1e-12
  double lambda_minimal = 0.0;   // n(n-2) * mu^{2/n} at the minimal radius
};

ProductGeometry product_geometry(int n, int k, double r1);
ProductGeometry minimal_product_geometry(int n, int k);  // r1 = sqrt(k/n)
double minimal_product_r1(int n, int k);

// Volume factor ((k-x)/(n-2x))^{k/2} ((n-k-x)/(n-2x))^{(n-k)/2}; x=0 gives
// the minimal product's factor, x=1 the Einstein product's. Stationary at 0
// and strictly decreasing on (0,1].
double volume_ratio_fn(int n, int k, double x);

struct EinsteinData {
  int n = 0, k = 0;
  double rbar = 0.0;            // sqrt((k-1)/(n-2)), the Einstein radius
  double mu_einstein = 0.0;     // volume of the Einstein product
  double lambda_einstein = 0.0; // n(n-2) * mu_einstein^{2/n}
};

EinsteinData einstein_data(int n, int k);  // requires 2 <= k <= n-2

// Scalar-curvature profile over product radii at fixed unit volume.
struct FProfile {
  double omega_factor = 0.0;  // the constant multiplier
  double f = 0.0;
  double fprime = 0.0;
};

FProfile f_profile(int n, int k, double r);     // requires r in (0,1)
double f_critical_radius(int n, int k);         // bisection root of f'

// --- projective spaces over R, C, H ---------------------------------------

struct ProjectiveGeometry {
  Field field = Field::R;
  int n = 0;
  int nprime = 0;        // real dimension n * dim_R(F)
  long long l = 0;       // ambient sphere dimension L_n
  long long codim = 0;   // p = L_n - n'
  double rn = 0.0;       // domain sphere radius, rn^4 = ((n+1)/2)^2 (n-1)!
  double gn = 0.0;       // image effective radius squared, 2(n+1)/n
  double cn = 0.0;       // conformal factor of the tower map, gn / rn^2
  double k_real = 0.0;   // totally-real sectional curvature 1/gn
  double k_hol = 0.0;    // holomorphic sectional curvature 4/gn (C, H only)
  bool has_k_hol = false;
  bool has_k_real = false;  // a totally-real plane needs n >= 2
  double mu = 0.0;
  double log_mu = 0.0;
  double a2 = 0.0;
  double s = 0.0;
  double sigma = 0.0;    // sigma invariant; valid for n>=3 (R), n>=2 (C), n>=1 (H)
  bool sigma_valid = false;
};

ProjectiveGeometry projective_geometry(Field f, int n);

double domain_radius(int n);      // rn
double log_domain_radius(int n);

// log of the projective-space volume evaluated at the constant conformal
// factor 2^{2/n} instead of the true factor cn. The two agree only for
// n <= 2; this variant exists so the constant-factor form of the volume
// identity,
//   mu = (2^{2/n})^{n'/2} * vol(S^{L_n}(rn)) / vol(fiber),
// can be checked verbatim as an algebraic statement.
double log_projective_volume_at_two_pow(Field f, int n);

// --- bounds and identities -------------------------------------------------

// Conformally-invariant upper bound n'(n'-1) omega_{n'}^{2/n'} for dimension n'.
double aubin_bound(int nprime);

// Rigidity threshold n'p/(2p-1) for a minimal submanifold of dimension n'
// and codimension p >= 1 in a round sphere.
double simons_threshold(int nprime, long long p);

// Records comparing |alpha|^2 of the minimal projective embedding against
// the rigidity threshold. Codimension 0 yields a note-only record; (R, n=2)
// sits exactly at the threshold and is recorded as an equality.
std::vector<InequalityRecord> simons_records(Field f, int n);

// Unit-volume homothety bookkeeping: a metric conformally displaced by the
// constant factor e^{2/n'} satisfies
//   (n'(n'-1) + h2 - a2) = (n'(n'-1) - a2prime) e^{2/n'} .
double forced_a2prime(int nprime, double h2, double a2);
double homothety_residual(int nprime, double h2, double a2, double a2prime);

// Dimension-only gap a_n = (n-2)(1 - e^{-2/n}) < 2.
double a_gap(int n);

// --- gap-bound ledgers ------------------------------------------------------

struct GapRowProduct {
  int n = 0, k = 0;
  double c = 0.0;  // c_{n,k} = (omega_n / mu_minimal)^{2/n} / (n-2), in (0,1)
  double b = 0.0;  // b_{n,k} = (n-2)(1 - c_{n,k} e^{-2/n})
  double a = 0.0;  // a_n
};

GapRowProduct gap_row_product(int n, int k);
std::vector<InequalityRecord> gap_records_product(int n, int k);

struct GapRowField {
  Field field = Field::R;
  int n = 0, nprime = 0;
  double bracket = 0.0;   // field-specific factor inside the formula for b_n^F
  double b = 0.0;         // b_n^F
  double a_nprime = 0.0;  // lower bound with exponent 2/n'
  double a_n = 0.0;       // lower bound with exponent 2/n
};

GapRowField gap_row_field(Field f, int n);
std::vector<InequalityRecord> gap_records_field(Field f, int n);

// --- sigma table and comparisons -------------------------------------------

struct SigmaEntry {
  std::string manifold;  // e.g. "S^2xS^2", "RP^3", "CP^2", "HP^1"
  int dimension = 0;
  double value = 0.0;
  std::string form;      // short analytic form for the report
};

std::vector<SigmaEntry> sigma_table(int max_dimension);

struct BesseComparison {
  int n = 0, k = 0;
  double lambda_einstein = 0.0;
  double sigma = 0.0;  // sigma of the product = lambda of the minimal product
  double ratio = 0.0;  // lambda_einstein / sigma, strictly below 1 for n != 2k
};

BesseComparison besse_comparison(int n, int k);  // rejects n == 2k

// Infimum of the Ricci quadratic form over unit directions on the minimal
// product; k and n-k are interchangeable.
double ricci_infimum_product(int n, int k);

}  // namespace minemb
