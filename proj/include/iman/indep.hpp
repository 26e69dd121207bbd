#pragma once

#include <cstdint>
#include <vector>

namespace iman {

struct GTestResult {
  double g_value = 0.0;
  int dof = 1;
  double p_value = 1.0;
  // Groups that actually entered the pooled statistic (after the
  // minimum-count exclusion).
  int strata_used = 0;
  // Fewer than two usable groups or outcome columns: no evidence against
  // homogeneity, p = 1.
  bool degenerate = false;
};

// Pooled G-test of homogeneity across count vectors over a common outcome
// set: G = 2 sum_g sum_k n_gk log((n_gk/n_g) / (n_.k/n)), with 0 log 0 = 0.
// Groups with total below min_count are excluded (recorded in strata_used).
// Degrees of freedom count only groups and outcome columns with positive
// totals.
GTestResult g_statistic(const std::vector<std::vector<std::int64_t>>& groups,
                        std::int64_t min_count = 5);

// Upper-tail probability of the chi-square distribution: the regularized
// upper incomplete gamma function Q(dof/2, x/2). Absolute error below 1e-10
// for dof <= 200, x <= 1e4.
double chi2_sf(double x, int dof);

// Benjamini-Hochberg step-up at level alpha: sort ascending, find the
// largest k with p_(k) <= k*alpha/M, reject hypotheses 1..k. Returns the
// rejection mask in original order.
std::vector<bool> bh_reject(const std::vector<double>& p_values, double alpha);

}  // namespace iman
