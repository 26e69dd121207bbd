#include "iman/indep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace iman {

namespace {

// Regularized lower incomplete gamma P(a, x) by series expansion, for x < a + 1.
double gamma_p_series(double a, double x) {
  const double lg = std::lgamma(a);
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lg);
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction
// (modified Lentz), for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double lg = std::lgamma(a);
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - lg) * h;
}

double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

}  // namespace

double chi2_sf(double x, int dof) {
  if (dof < 1) throw std::invalid_argument("chi2_sf needs dof >= 1");
  if (x < 0.0) throw std::invalid_argument("chi2_sf needs x >= 0");
  return gamma_q(0.5 * dof, 0.5 * x);
}

GTestResult g_statistic(const std::vector<std::vector<std::int64_t>>& groups,
                        std::int64_t min_count) {
  if (groups.empty()) {
    GTestResult r;
    r.degenerate = true;
    return r;
  }
  const std::size_t n_out = groups[0].size();
  for (const auto& g : groups) {
    if (g.size() != n_out) throw std::invalid_argument("ragged group vectors");
  }

  std::vector<const std::vector<std::int64_t>*> used;
  for (const auto& g : groups) {
    const std::int64_t total = std::accumulate(g.begin(), g.end(), std::int64_t{0});
    if (total >= std::max<std::int64_t>(min_count, 1)) used.push_back(&g);
  }

  GTestResult r;
  r.strata_used = static_cast<int>(used.size());

  std::vector<std::int64_t> col_totals(n_out, 0);
  std::int64_t n = 0;
  for (const auto* g : used) {
    for (std::size_t k = 0; k < n_out; ++k) col_totals[k] += (*g)[k];
  }
  n = std::accumulate(col_totals.begin(), col_totals.end(), std::int64_t{0});

  const int positive_cols =
      static_cast<int>(std::count_if(col_totals.begin(), col_totals.end(),
                                     [](std::int64_t c) { return c > 0; }));
  if (used.size() < 2 || positive_cols < 2 || n == 0) {
    r.degenerate = true;
    return r;
  }

  double g_val = 0.0;
  for (const auto* g : used) {
    const std::int64_t ng = std::accumulate(g->begin(), g->end(), std::int64_t{0});
    for (std::size_t k = 0; k < n_out; ++k) {
      const std::int64_t ngk = (*g)[k];
      if (ngk == 0) continue;  // 0 log 0 = 0
      const double observed = static_cast<double>(ngk) / static_cast<double>(ng);
      const double expected = static_cast<double>(col_totals[k]) / static_cast<double>(n);
      g_val += static_cast<double>(ngk) * std::log(observed / expected);
    }
  }
  g_val *= 2.0;
  if (g_val < 0.0) g_val = 0.0;  // clip fp residue on exactly proportional groups

  r.g_value = g_val;
  r.dof = (static_cast<int>(used.size()) - 1) * (positive_cols - 1);
  r.p_value = chi2_sf(r.g_value, r.dof);
  r.degenerate = false;
  return r;
}

std::vector<bool> bh_reject(const std::vector<double>& p_values, double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must be in (0,1)");
  const std::size_t m = p_values.size();
  std::vector<bool> mask(m, false);
  if (m == 0) return mask;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

  std::size_t k_max = 0;  // 1-based rank of the largest passing p-value
  for (std::size_t k = 1; k <= m; ++k) {
    const double p = p_values[order[k - 1]];
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p-value outside [0,1]");
    if (p <= static_cast<double>(k) * alpha / static_cast<double>(m)) k_max = k;
  }
  for (std::size_t k = 0; k < k_max; ++k) mask[order[k]] = true;
  return mask;
}

}  // namespace iman
