#pragma once

#include <cstdint>

#include "minemb/algebra.hpp"
#include "minemb/ledger.hpp"

namespace minemb {

// Shared knobs for the sampled campaigns. The seed fully determines every
// sampled point (per-point seeds are derived from it), so identical configs
// reproduce identical ledgers bit for bit.
struct CampaignConfig {
  int samples = 100;
  std::uint64_t seed = 0;
  double tol_mean = 1e-8;       // |H| bound certifying minimality
  double tol_match = 1e-6;      // measured-vs-catalog agreement
  double tol_gauss = 1e-7;      // trace identity s_sum vs s_gauss
  double tol_conformal = 1e-6;  // measured pullback factor vs the catalog cn
  double tol_defect = 1e-8;     // constancy defect of the pullback metric
};

// Largest projective level sampled numerically per field; beyond these only
// closed-form sweeps run (factorial growth of the domain radius).
int sampled_cap(Field f);

// Mean curvature of every in-range minimal embedding, plus the designed
// non-minimal control at (n,k,r1) = (3,1,0.6).
DiscrepancyLedger campaign_minimality(const CampaignConfig& cfg);
// Single-target variants backing the CLI selectors. The product version
// records plain minimality, so a non-minimal radius fails honestly.
DiscrepancyLedger campaign_minimality_product(const CampaignConfig& cfg, int n,
                                              int k, double r1);
DiscrepancyLedger campaign_minimality_projective(const CampaignConfig& cfg,
                                                 Field f, int n);

// Measured curvature data against the closed-form catalog for products
// (minimal and random-radius) and projective spaces, including conformal
// factor and trace-identity records.
DiscrepancyLedger campaign_closed_form_match(const CampaignConfig& cfg);

// Structural identities of the embedding tower: norm identity, homogeneity,
// unit-scalar invariance, fiber collapse, handedness independence, inclusion
// commutativity, dimension ladder, and the volume consistency identity.
DiscrepancyLedger campaign_algebraic_identities(const CampaignConfig& cfg);

// Closed-form inequality sweeps: gap-bound ledgers, Aubin dominance,
// rigidity thresholds, Einstein-volume comparisons, homothety bookkeeping.
DiscrepancyLedger campaign_inequalities(int n_max);

// Grid analysis of the radius profile f_k for one (n,k): endpoint identity,
// minimizer location, critical-point uniqueness, and monotonicity (checked
// directly for 2k <= n; via the mirror identity otherwise).
DiscrepancyLedger campaign_fk(int n, int k, int grid);
// All 2 <= k <= n-2 for 4 <= n <= n_max, plus endpoint rows for k = 1, n-1.
DiscrepancyLedger campaign_fk_sweep(int n_max, int grid);

}  // namespace minemb
