#pragma once

#include <vector>

namespace iman {

// Topological order of a DAG given as B[i][j] = 1 iff j is a parent of i;
// ties broken toward the smallest original index. Throws on cycles.
std::vector<int> topological_order(const std::vector<std::vector<int>>& adjacency);

// Order violation rate: permute rows and columns of both matrices by a
// causal order making B lower triangular, count nonzero entries of the
// permuted estimate strictly above the diagonal, divide by d(d-1)/2.
double ero(const std::vector<std::vector<int>>& truth,
           const std::vector<std::vector<int>>& estimate);

// Fraction of off-diagonal adjacency entries on which truth and estimate
// agree, over d(d-1) positions.
double acc(const std::vector<std::vector<int>>& truth,
           const std::vector<std::vector<int>>& estimate);

}  // namespace iman
