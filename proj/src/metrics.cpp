#include "iman/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iman {

namespace {

void check_pair(const std::vector<std::vector<int>>& a,
                const std::vector<std::vector<int>>& b) {
  const std::size_t d = a.size();
  if (b.size() != d) throw std::invalid_argument("adjacency dimensions differ");
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].size() != d || b[i].size() != d) {
      throw std::invalid_argument("adjacency matrices must be square");
    }
    if (a[i][i] != 0 || b[i][i] != 0) {
      throw std::invalid_argument("adjacency diagonals must be zero");
    }
  }
}

}  // namespace

std::vector<int> topological_order(const std::vector<std::vector<int>>& adjacency) {
  const int d = static_cast<int>(adjacency.size());
  std::vector<int> unmet(static_cast<size_t>(d), 0);  // unplaced parents per variable
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) unmet[static_cast<size_t>(i)] += adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)] ? 1 : 0;
  }
  std::vector<bool> placed(static_cast<size_t>(d), false);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(d));
  for (int step = 0; step < d; ++step) {
    int pick = -1;
    for (int i = 0; i < d && pick < 0; ++i) {
      if (!placed[static_cast<size_t>(i)] && unmet[static_cast<size_t>(i)] == 0) pick = i;
    }
    if (pick < 0) throw std::invalid_argument("adjacency matrix contains a cycle");
    placed[static_cast<size_t>(pick)] = true;
    order.push_back(pick);
    for (int i = 0; i < d; ++i) {
      if (!placed[static_cast<size_t>(i)] && adjacency[static_cast<size_t>(i)][static_cast<size_t>(pick)]) {
        --unmet[static_cast<size_t>(i)];
      }
    }
  }
  return order;
}

double ero(const std::vector<std::vector<int>>& truth,
           const std::vector<std::vector<int>>& estimate) {
  check_pair(truth, estimate);
  const int d = static_cast<int>(truth.size());
  if (d < 2) throw std::invalid_argument("ero needs d >= 2");
  const std::vector<int> order = topological_order(truth);

  int upper = 0;
  for (int r = 0; r < d; ++r) {
    for (int c = r + 1; c < d; ++c) {
      if (estimate[static_cast<size_t>(order[static_cast<size_t>(r)])]
                  [static_cast<size_t>(order[static_cast<size_t>(c)])] != 0) {
        ++upper;
      }
    }
  }
  return static_cast<double>(upper) / (static_cast<double>(d) * (d - 1) / 2.0);
}

double acc(const std::vector<std::vector<int>>& truth,
           const std::vector<std::vector<int>>& estimate) {
  check_pair(truth, estimate);
  const int d = static_cast<int>(truth.size());
  if (d < 2) throw std::invalid_argument("acc needs d >= 2");
  int matched = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      if ((truth[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) ==
          (estimate[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)) {
        ++matched;
      }
    }
  }
  return static_cast<double>(matched) / (static_cast<double>(d) * (d - 1));
}

}  // namespace iman
