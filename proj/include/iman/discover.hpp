#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iman/freqtable.hpp"
#include "iman/indep.hpp"

namespace iman {

// Conditioning contexts with fewer samples than this are skipped when
// aligning conditionals in find_sink and contribute p = 1 in find_parent.
inline constexpr std::int64_t kMinContextCount = 5;

struct ParentDecision {
  VarId var = -1;
  int contexts_tested = 0;
  int contexts_rejected = 0;
  double min_p = 1.0;
  bool is_parent = false;
};

// Diagnostics for one elimination step of the main loop.
struct SinkStep {
  int k = 0;  // steps run k = d down to 1
  VarId sink = -1;
  std::vector<std::pair<VarId, double>> candidate_pvalues;  // pooled homogeneity p per candidate
  std::vector<ParentDecision> parent_decisions;
};

struct DiscoveryResult {
  // Causal order: (i(1), pi(1)) .. (i(d), pi(d)); each parent set is a
  // subset of the variables listed before it.
  std::vector<std::pair<VarId, std::vector<VarId>>> order;
  double alpha = 0.05;
  std::vector<SinkStep> steps;  // in discovery order (k = d first)

  // Estimated adjacency over variables 0..d-1: B[i][j] = 1 iff j is a
  // parent of i. Acyclic by construction.
  std::vector<std::vector<int>> adjacency() const;
};

// Shift between the argmax positions of the target's empirical conditional
// under two contexts: c = argmax(ref) - argmax(ctx) (mod m), ties toward
// the smallest value. Empty when either context is unobserved.
std::optional<ModValue> estimate_shift(const FrequencyTable& ft, VarId target,
                                       const Context& ctx_ref, const Context& ctx);

// For each candidate, aligns the conditional count vectors of all
// non-sparse contexts by their estimated shifts (reference = highest-count
// context) and pools them into one G homogeneity test; returns the
// candidate with the largest pooled p-value. Throws InsufficientDataError
// when no candidate has a single usable context.
VarId find_sink(const FrequencyTable& ft, const std::vector<VarId>& active, double alpha,
                SinkStep* diag = nullptr);

// j is a parent of sink iff the per-context G independence tests of
// (X_sink, X_j) given each assignment of the remaining variables reject
// for at least one context under Benjamini-Hochberg at alpha.
std::vector<VarId> find_parent(const FrequencyTable& ft, const std::vector<VarId>& active,
                               VarId sink, double alpha, SinkStep* diag = nullptr);

// The main loop: build the frequency table, then repeatedly find a sink,
// extract its parents, and marginalize it out. Deterministic given the
// data and alpha.
DiscoveryResult discover(const std::vector<std::vector<int>>& data, Modulus m,
                         double alpha = 0.05);

}  // namespace iman
