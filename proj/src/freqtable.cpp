#include "iman/freqtable.hpp"

#include <algorithm>
#include <string>

namespace iman {

namespace {

std::size_t checked_cell_count(std::size_t n_vars, int m, std::size_t cap) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (cells > cap / static_cast<std::size_t>(m)) {
      throw std::invalid_argument("frequency table would exceed " + std::to_string(cap) +
                                  " cells (m^|V| with m=" + std::to_string(m) +
                                  ", |V|=" + std::to_string(n_vars) + ")");
    }
    cells *= static_cast<std::size_t>(m);
  }
  return cells;
}

}  // namespace

FrequencyTable::FrequencyTable(std::vector<VarId> vars, Modulus m)
    : vars_(std::move(vars)), m_(m) {
  const std::size_t cells = checked_cell_count(vars_.size(), m_.value(), kMaxCells);
  strides_.assign(vars_.size(), 1);
  for (std::size_t i = vars_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * static_cast<std::size_t>(m_.value());
  }
  cells_.assign(cells, 0);
}

FrequencyTable FrequencyTable::build(const std::vector<std::vector<int>>& data,
                                     const std::vector<VarId>& vars, Modulus m) {
  if (data.empty()) throw DataError("empty data set: no sample rows");
  if (vars.empty()) throw std::invalid_argument("variable list is empty");
  FrequencyTable ft(vars, m);
  const std::size_t d = vars.size();
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (data[r].size() != d) {
      throw DataError("row " + std::to_string(r) + " has " + std::to_string(data[r].size()) +
                      " columns, expected " + std::to_string(d));
    }
    std::size_t idx = 0;
    for (std::size_t c = 0; c < d; ++c) {
      const int v = data[r][c];
      if (v < 0 || v >= m.value()) {
        throw DataError("value " + std::to_string(v) + " out of range [0, " +
                        std::to_string(m.value()) + ") at row " + std::to_string(r) +
                        ", column " + std::to_string(c));
      }
      idx += static_cast<std::size_t>(v) * ft.strides_[c];
    }
    ++ft.cells_[idx];
  }
  ft.total_n_ = static_cast<std::int64_t>(data.size());
  return ft;
}

int FrequencyTable::position_of(VarId v) const {
  const auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) {
    throw std::invalid_argument("variable " + std::to_string(v) + " not in table");
  }
  return static_cast<int>(it - vars_.begin());
}

std::int64_t FrequencyTable::at(const std::vector<int>& values) const {
  if (values.size() != vars_.size()) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  std::size_t idx = 0;
  for (std::size_t c = 0; c < values.size(); ++c) {
    idx += static_cast<std::size_t>(values[c]) * strides_[c];
  }
  return cells_[idx];
}

std::size_t FrequencyTable::context_count(int target_pos) const {
  if (target_pos < 0 || static_cast<std::size_t>(target_pos) >= vars_.size()) {
    throw std::invalid_argument("target position out of range");
  }
  return cells_.size() / static_cast<std::size_t>(m_.value());
}

std::vector<std::int64_t> FrequencyTable::conditional_counts_at(
    int target_pos, std::size_t context_index) const {
  const int m = m_.value();
  const std::size_t k = vars_.size();
  // Decompose context_index over the non-target positions, last position
  // least significant, and assemble the base cell offset.
  std::size_t base = 0;
  std::size_t rem = context_index;
  for (std::size_t pos = k; pos-- > 0;) {
    if (static_cast<int>(pos) == target_pos) continue;
    base += (rem % static_cast<std::size_t>(m)) * strides_[pos];
    rem /= static_cast<std::size_t>(m);
  }
  std::vector<std::int64_t> counts(static_cast<size_t>(m));
  const std::size_t ts = strides_[static_cast<size_t>(target_pos)];
  for (int v = 0; v < m; ++v) {
    counts[static_cast<size_t>(v)] = cells_[base + static_cast<std::size_t>(v) * ts];
  }
  return counts;
}

std::vector<std::int64_t> FrequencyTable::conditional_counts(VarId target,
                                                             const Context& ctx) const {
  const int tpos = position_of(target);
  if (ctx.assignments.size() != vars_.size() - 1) {
    throw std::invalid_argument("context must assign exactly the non-target variables");
  }
  std::size_t base = 0;
  for (std::size_t pos = 0; pos < vars_.size(); ++pos) {
    if (static_cast<int>(pos) == tpos) continue;
    const auto it = ctx.assignments.find(vars_[pos]);
    if (it == ctx.assignments.end()) {
      throw std::invalid_argument("context missing variable " + std::to_string(vars_[pos]));
    }
    const int v = it->second;
    if (v < 0 || v >= m_.value()) {
      throw std::invalid_argument("context value out of range");
    }
    base += static_cast<std::size_t>(v) * strides_[pos];
  }
  std::vector<std::int64_t> counts(static_cast<size_t>(m_.value()));
  for (int v = 0; v < m_.value(); ++v) {
    counts[static_cast<size_t>(v)] =
        cells_[base + static_cast<std::size_t>(v) * strides_[static_cast<size_t>(tpos)]];
  }
  return counts;
}

FrequencyTable FrequencyTable::marginalize(VarId i) const {
  if (vars_.size() < 2) {
    throw std::invalid_argument("cannot marginalize a single-variable table");
  }
  const int tpos = position_of(i);
  std::vector<VarId> rest;
  rest.reserve(vars_.size() - 1);
  for (std::size_t pos = 0; pos < vars_.size(); ++pos) {
    if (static_cast<int>(pos) != tpos) rest.push_back(vars_[pos]);
  }
  FrequencyTable out(rest, m_);
  // Contexts over the non-target positions enumerate in exactly the new
  // table's row-major cell order.
  const std::size_t n_ctx = cells_.size() / static_cast<std::size_t>(m_.value());
  for (std::size_t ctx = 0; ctx < n_ctx; ++ctx) {
    const std::vector<std::int64_t> counts = conditional_counts_at(tpos, ctx);
    std::int64_t sum = 0;
    for (std::int64_t c : counts) sum += c;
    out.cells_[ctx] = sum;
  }
  out.total_n_ = total_n_;
  return out;
}

}  // namespace iman
