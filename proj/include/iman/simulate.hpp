#pragma once

#include <vector>

#include "iman/modcore.hpp"
#include "iman/rng.hpp"

namespace iman {

// Ground-truth generative model: B[i][j] = 1 means X_j is a parent of X_i,
// strictly lower triangular in generation order. Every variable gets the
// shared noise distribution q; f_tables[i] maps the parent-value tuple
// (row-major over parents in ascending index order) to a value in M.
struct CausalModel {
  Modulus m;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::vector<int>> parents;   // ascending, derived from adjacency
  std::vector<std::vector<int>> f_tables;  // size m^|parents[i]| each
  Distribution noise;

  int dim() const { return static_cast<int>(adjacency.size()); }
};

// A sampled data set together with the column shuffle that produced it:
// column permutation[i] of rows holds generated variable i.
struct Dataset {
  std::vector<std::vector<int>> rows;
  std::vector<int> permutation;
};

// Independent Bernoulli(p_a) for each pair j < i.
std::vector<std::vector<int>> random_dag(int d, double p_a, Rng& rng);

// Uniformly random function tables; with bijective_single_parent, a
// single-parent function is drawn as a random permutation of M so the
// generated model stays in the identifiable regime.
std::vector<std::vector<int>> random_functions(const std::vector<std::vector<int>>& adjacency,
                                               Modulus m, Rng& rng,
                                               bool bijective_single_parent = true);

CausalModel make_model(Modulus m, std::vector<std::vector<int>> adjacency,
                       std::vector<std::vector<int>> f_tables, Distribution noise);

// Ancestral sampling x_i = f_i(parents) + e_i (mod m), e_i ~ q i.i.d.;
// root variables are a constant plus noise, so their marginal is a shifted
// q. Columns are then shuffled by a random permutation.
Dataset sample(const CausalModel& model, int n, Rng& rng);

// Each q_i drawn uniformly from (0,1), then normalized.
Distribution uniform_random_noise(Modulus m, Rng& rng);

// q_position = p, q_{position+1} = 1 - p (mod m), rest zero.
Distribution two_point_noise(Modulus m, double p, int position = 0);

// Truth adjacency relabeled to the shuffled column order of a Dataset.
std::vector<std::vector<int>> observed_adjacency(const std::vector<std::vector<int>>& adjacency,
                                                 const std::vector<int>& permutation);

}  // namespace iman
