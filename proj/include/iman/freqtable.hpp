#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iman/modcore.hpp"

namespace iman {

using VarId = int;

// A partial assignment {X_j = x_j} over a subset of a table's variables.
struct Context {
  std::map<VarId, int> assignments;
};

// Dense joint count tensor over M^|V| for the active variable set V.
// Immutable after build; marginalization produces a new table and preserves
// the total count.
class FrequencyTable {
 public:
  // Tables above this many cells are rejected up front.
  static constexpr std::size_t kMaxCells = 100000000;

  // data is n rows by |vars| columns, column order matching vars; every
  // entry must lie in [0, m).
  static FrequencyTable build(const std::vector<std::vector<int>>& data,
                              const std::vector<VarId>& vars, Modulus m);

  const std::vector<VarId>& vars() const { return vars_; }
  Modulus modulus() const { return m_; }
  std::int64_t total_n() const { return total_n_; }
  const std::vector<std::int64_t>& cells() const { return cells_; }

  // Count for a full assignment given in vars() order.
  std::int64_t at(const std::vector<int>& values) const;

  // Sums out variable i; the remaining variables keep their order.
  FrequencyTable marginalize(VarId i) const;

  // Raw counts of the target over M under a context assigning exactly
  // vars() minus target. An all-zero vector signals an unobserved context.
  std::vector<std::int64_t> conditional_counts(VarId target, const Context& ctx) const;

  // Low-level variant used by the discovery loop: contexts over the
  // non-target positions are enumerated row-major as 0 .. m^(|V|-1) - 1.
  std::vector<std::int64_t> conditional_counts_at(int target_pos,
                                                  std::size_t context_index) const;
  std::size_t context_count(int target_pos) const;

  int position_of(VarId v) const;  // index into vars(); throws if absent
  std::size_t stride(int pos) const { return strides_[static_cast<size_t>(pos)]; }

 private:
  FrequencyTable(std::vector<VarId> vars, Modulus m);

  std::vector<VarId> vars_;
  Modulus m_;
  std::vector<std::size_t> strides_;  // row-major, first variable most significant
  std::vector<std::int64_t> cells_;
  std::int64_t total_n_ = 0;
};

}  // namespace iman
