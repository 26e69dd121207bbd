#include "iman/simulate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace iman {

std::vector<std::vector<int>> random_dag(int d, double p_a, Rng& rng) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (p_a < 0.0 || p_a > 1.0) throw std::invalid_argument("p_a must be in [0,1]");
  std::vector<std::vector<int>> b(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
  for (int i = 1; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      b[static_cast<size_t>(i)][static_cast<size_t>(j)] = rng.uniform() < p_a ? 1 : 0;
    }
  }
  return b;
}

namespace {

std::vector<std::vector<int>> parent_lists(const std::vector<std::vector<int>>& adjacency) {
  const int d = static_cast<int>(adjacency.size());
  std::vector<std::vector<int>> parents(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (adjacency[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        parents[static_cast<size_t>(i)].push_back(j);
      }
    }
  }
  return parents;
}

std::size_t table_size(std::size_t n_parents, int m) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < n_parents; ++i) s *= static_cast<std::size_t>(m);
  return s;
}

}  // namespace

std::vector<std::vector<int>> random_functions(const std::vector<std::vector<int>>& adjacency,
                                               Modulus m, Rng& rng,
                                               bool bijective_single_parent) {
  const auto parents = parent_lists(adjacency);
  std::vector<std::vector<int>> tables(adjacency.size());
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    const std::size_t size = table_size(parents[i].size(), m.value());
    if (bijective_single_parent && parents[i].size() == 1) {
      std::vector<int> perm(static_cast<size_t>(m.value()));
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      tables[i] = std::move(perm);
      continue;
    }
    tables[i].resize(size);
    for (std::size_t k = 0; k < size; ++k) tables[i][k] = rng.uniform_int(m.value());
  }
  return tables;
}

CausalModel make_model(Modulus m, std::vector<std::vector<int>> adjacency,
                       std::vector<std::vector<int>> f_tables, Distribution noise) {
  const std::size_t d = adjacency.size();
  if (d == 0) throw std::invalid_argument("empty adjacency");
  if (noise.modulus() != m) throw std::invalid_argument("noise modulus mismatch");
  for (std::size_t i = 0; i < d; ++i) {
    if (adjacency[i].size() != d) throw std::invalid_argument("adjacency not square");
    for (std::size_t j = i; j < d; ++j) {
      if (adjacency[i][j] != 0) {
        throw std::invalid_argument("adjacency must be strictly lower triangular");
      }
    }
  }
  CausalModel model{m, std::move(adjacency), {}, std::move(f_tables), std::move(noise)};
  model.parents = parent_lists(model.adjacency);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t want = table_size(model.parents[i].size(), m.value());
    if (model.f_tables[i].size() != want) {
      throw std::invalid_argument("function table " + std::to_string(i) + " has " +
                                  std::to_string(model.f_tables[i].size()) +
                                  " entries, expected " + std::to_string(want));
    }
    for (int v : model.f_tables[i]) {
      if (v < 0 || v >= m.value()) throw std::invalid_argument("function value out of range");
    }
  }
  return model;
}

Dataset sample(const CausalModel& model, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int d = model.dim();
  const int m = model.m.value();
  const std::vector<double>& q = model.noise.probs();

  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  Dataset out;
  out.permutation = perm;
  out.rows.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(d), 0));
  std::vector<int> x(static_cast<size_t>(d), 0);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < d; ++i) {
      const auto& par = model.parents[static_cast<size_t>(i)];
      std::size_t idx = 0;
      for (int j : par) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(x[static_cast<size_t>(j)]);
      const int f = model.f_tables[static_cast<size_t>(i)][idx];
      const int e = rng.categorical(q);
      x[static_cast<size_t>(i)] = (f + e) % m;
    }
    for (int i = 0; i < d; ++i) {
      out.rows[static_cast<size_t>(r)][static_cast<size_t>(perm[static_cast<size_t>(i)])] =
          x[static_cast<size_t>(i)];
    }
  }
  return out;
}

Distribution uniform_random_noise(Modulus m, Rng& rng) {
  std::vector<double> w(static_cast<size_t>(m.value()));
  for (double& x : w) x = rng.uniform_positive();
  return Distribution::normalized(std::move(w));
}

Distribution two_point_noise(Modulus m, double p, int position) {
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("two-point noise needs p in (0,1)");
  if (position < 0 || position >= m.value()) {
    throw std::invalid_argument("two-point noise position out of range");
  }
  std::vector<double> w(static_cast<size_t>(m.value()), 0.0);
  w[static_cast<size_t>(position)] = p;
  w[static_cast<size_t>((position + 1) % m.value())] = 1.0 - p;
  return Distribution(m, std::move(w));
}

std::vector<std::vector<int>> observed_adjacency(const std::vector<std::vector<int>>& adjacency,
                                                 const std::vector<int>& permutation) {
  const std::size_t d = adjacency.size();
  if (permutation.size() != d) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::vector<int>> out(d, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out[static_cast<size_t>(permutation[i])][static_cast<size_t>(permutation[j])] =
          adjacency[i][j];
    }
  }
  return out;
}

}  // namespace iman
