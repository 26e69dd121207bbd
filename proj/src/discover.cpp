#include "iman/discover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace iman {

namespace {

int argmax_smallest(const std::vector<std::int64_t>& counts) {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

std::int64_t total(const std::vector<std::int64_t>& counts) {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

// Aligns a conditional count vector to the reference by rotating it so the
// estimated shift c maps its peak onto the reference peak:
// out[v] = counts[(v - c) mod m].
std::vector<std::int64_t> align_by_shift(const std::vector<std::int64_t>& counts, int c) {
  const int m = static_cast<int>(counts.size());
  std::vector<std::int64_t> out(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) {
    out[static_cast<size_t>(v)] = counts[static_cast<size_t>((v - c + m) % m)];
  }
  return out;
}

}  // namespace

std::optional<ModValue> estimate_shift(const FrequencyTable& ft, VarId target,
                                       const Context& ctx_ref, const Context& ctx) {
  const std::vector<std::int64_t> ref_counts = ft.conditional_counts(target, ctx_ref);
  const std::vector<std::int64_t> ctx_counts = ft.conditional_counts(target, ctx);
  if (total(ref_counts) == 0 || total(ctx_counts) == 0) return std::nullopt;
  const int m = ft.modulus().value();
  const int c = (argmax_smallest(ref_counts) - argmax_smallest(ctx_counts) + m) % m;
  return ModValue(c, ft.modulus());
}

VarId find_sink(const FrequencyTable& ft, const std::vector<VarId>& active, double alpha,
                SinkStep* diag) {
  (void)alpha;  // scoring is by maximum pooled p-value, no thresholding
  if (active.empty()) throw std::invalid_argument("find_sink on empty variable set");
  if (active.size() == 1) {
    if (diag) diag->candidate_pvalues.emplace_back(active[0], 1.0);
    return active[0];
  }

  const int m = ft.modulus().value();
  VarId best_var = -1;
  double best_p = -1.0;
  int max_coverage = 0;
  VarId worst_var = active[0];
  int worst_coverage = -1;

  for (VarId candidate : active) {
    const int tpos = ft.position_of(candidate);
    const std::size_t n_ctx = ft.context_count(tpos);

    // Reference = observed context with the largest total.
    std::size_t ref_idx = 0;
    std::int64_t ref_total = -1;
    for (std::size_t ctx = 0; ctx < n_ctx; ++ctx) {
      const std::int64_t t = total(ft.conditional_counts_at(tpos, ctx));
      if (t > ref_total) {
        ref_total = t;
        ref_idx = ctx;
      }
    }

    std::vector<std::vector<std::int64_t>> groups;
    if (ref_total >= kMinContextCount) {
      const std::vector<std::int64_t> ref_counts = ft.conditional_counts_at(tpos, ref_idx);
      const int ref_peak = argmax_smallest(ref_counts);
      for (std::size_t ctx = 0; ctx < n_ctx; ++ctx) {
        const std::vector<std::int64_t> counts = ft.conditional_counts_at(tpos, ctx);
        if (total(counts) < kMinContextCount) continue;
        const int shift = (ref_peak - argmax_smallest(counts) + m) % m;
        groups.push_back(align_by_shift(counts, shift));
      }
    }
    const int coverage = static_cast<int>(groups.size());
    const GTestResult g = g_statistic(groups, kMinContextCount);
    const double p = g.degenerate ? 1.0 : g.p_value;

    if (diag) diag->candidate_pvalues.emplace_back(candidate, p);
    max_coverage = std::max(max_coverage, coverage);
    if (worst_coverage < 0 || coverage < worst_coverage) {
      worst_coverage = coverage;
      worst_var = candidate;
    }
    if (p > best_p) {
      best_p = p;
      best_var = candidate;
    }
  }

  if (max_coverage == 0) {
    throw InsufficientDataError(
        "every conditioning context is below the minimum count " +
        std::to_string(kMinContextCount) + " for every sink candidate (worst candidate X" +
        std::to_string(worst_var) + " has 0 usable contexts out of " +
        std::to_string(ft.context_count(ft.position_of(worst_var))) + ")");
  }
  return best_var;
}

std::vector<VarId> find_parent(const FrequencyTable& ft, const std::vector<VarId>& active,
                               VarId sink, double alpha, SinkStep* diag) {
  if (std::find(active.begin(), active.end(), sink) == active.end()) {
    throw std::invalid_argument("sink not in active variable set");
  }
  const int m = ft.modulus().value();
  const std::size_t k = active.size();
  std::vector<VarId> parents;

  for (VarId j : active) {
    if (j == sink) continue;
    const int spos = ft.position_of(sink);
    const int jpos = ft.position_of(j);
    const std::size_t sstride = ft.stride(spos);
    const std::size_t jstride = ft.stride(jpos);

    // Contexts over the remaining k-2 positions, row-major.
    std::size_t n_ctx = 1;
    for (std::size_t i = 0; i + 2 < k; ++i) n_ctx *= static_cast<std::size_t>(m);

    std::vector<double> pvalues;
    pvalues.reserve(n_ctx);
    for (std::size_t ctx = 0; ctx < n_ctx; ++ctx) {
      // Base cell offset for this context.
      std::size_t base = 0;
      std::size_t rem = ctx;
      for (std::size_t pos = ft.vars().size(); pos-- > 0;) {
        if (static_cast<int>(pos) == spos || static_cast<int>(pos) == jpos) continue;
        base += (rem % static_cast<std::size_t>(m)) * ft.stride(static_cast<int>(pos));
        rem /= static_cast<std::size_t>(m);
      }

      // m x m contingency table: rows are X_j strata, columns X_sink values.
      std::vector<std::vector<std::int64_t>> table(
          static_cast<size_t>(m), std::vector<std::int64_t>(static_cast<size_t>(m), 0));
      std::int64_t ctx_total = 0;
      for (int vj = 0; vj < m; ++vj) {
        for (int vs = 0; vs < m; ++vs) {
          const std::int64_t c = ft.cells()[base + static_cast<std::size_t>(vj) * jstride +
                                            static_cast<std::size_t>(vs) * sstride];
          table[static_cast<size_t>(vj)][static_cast<size_t>(vs)] = c;
          ctx_total += c;
        }
      }
      if (ctx_total < kMinContextCount) {
        pvalues.push_back(1.0);
        continue;
      }
      const GTestResult g = g_statistic(table, kMinContextCount);
      pvalues.push_back(g.degenerate ? 1.0 : g.p_value);
    }

    const std::vector<bool> rejected = bh_reject(pvalues, alpha);
    const int n_rejected = static_cast<int>(std::count(rejected.begin(), rejected.end(), true));
    const bool is_parent = n_rejected > 0;
    if (is_parent) parents.push_back(j);

    if (diag) {
      ParentDecision dec;
      dec.var = j;
      dec.contexts_tested = static_cast<int>(pvalues.size());
      dec.contexts_rejected = n_rejected;
      dec.min_p = pvalues.empty() ? 1.0 : *std::min_element(pvalues.begin(), pvalues.end());
      dec.is_parent = is_parent;
      diag->parent_decisions.push_back(dec);
    }
  }
  return parents;
}

DiscoveryResult discover(const std::vector<std::vector<int>>& data, Modulus m, double alpha) {
  if (data.empty()) throw DataError("empty data set: no sample rows");
  const int d = static_cast<int>(data[0].size());
  if (d < 1) throw DataError("data rows have no columns");
  std::vector<VarId> vars(static_cast<size_t>(d));
  std::iota(vars.begin(), vars.end(), 0);

  FrequencyTable ft = FrequencyTable::build(data, vars, m);
  std::vector<VarId> active = vars;

  DiscoveryResult result;
  result.alpha = alpha;
  std::vector<std::pair<VarId, std::vector<VarId>>> reversed;

  for (int k = d; k >= 1; --k) {
    SinkStep step;
    step.k = k;
    VarId sink;
    try {
      sink = find_sink(ft, active, alpha, &step);
    } catch (const InsufficientDataError& e) {
      throw InsufficientDataError("discovery failed at step k=" + std::to_string(k) + ": " +
                                  e.what());
    }
    std::vector<VarId> parents = find_parent(ft, active, sink, alpha, &step);
    step.sink = sink;
    result.steps.push_back(std::move(step));
    reversed.emplace_back(sink, std::move(parents));

    active.erase(std::find(active.begin(), active.end(), sink));
    if (k > 1) ft = ft.marginalize(sink);
  }

  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

std::vector<std::vector<int>> DiscoveryResult::adjacency() const {
  int d = 0;
  for (const auto& [var, parents] : order) {
    d = std::max(d, var + 1);
    for (VarId p : parents) d = std::max(d, p + 1);
  }
  std::vector<std::vector<int>> b(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
  for (const auto& [var, parents] : order) {
    for (VarId p : parents) b[static_cast<size_t>(var)][static_cast<size_t>(p)] = 1;
  }
  return b;
}

}  // namespace iman
