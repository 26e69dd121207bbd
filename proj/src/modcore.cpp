#include "iman/modcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace iman {

bool nearly_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

namespace {

bool is_prime_power_of(int m) {
  int p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (p * p > m) return true;  // m itself is prime
  while (m % p == 0) m /= p;
  return m == 1;
}

}  // namespace

Modulus::Modulus(int m) : m_(m), prime_power_(false) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
  prime_power_ = is_prime_power_of(m);
}

ModValue::ModValue(int value, Modulus modulus) : v(value), m(modulus) {
  if (v < 0 || v >= m.value()) {
    throw std::invalid_argument("value " + std::to_string(v) + " outside [0, " +
                                std::to_string(m.value()) + ")");
  }
}

ModValue mod_add(ModValue a, ModValue b) {
  if (a.m != b.m) throw std::invalid_argument("modulus mismatch in mod_add");
  return ModValue((a.v + b.v) % a.m.value(), a.m);
}

ModValue mod_sub(ModValue a, ModValue b) {
  if (a.m != b.m) throw std::invalid_argument("modulus mismatch in mod_sub");
  const int m = a.m.value();
  return ModValue((a.v - b.v + m) % m, a.m);
}

Distribution::Distribution(Modulus m, std::vector<double> probs)
    : m_(m), probs_(std::move(probs)) {
  if (static_cast<int>(probs_.size()) != m_.value()) {
    throw std::invalid_argument("probability vector length " +
                                std::to_string(probs_.size()) +
                                " does not match modulus " +
                                std::to_string(m_.value()));
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || p > 1.0 + 1e-12) {
      throw std::invalid_argument("probability entry outside [0, 1]");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

Distribution Distribution::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("negative weight");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("weights sum to zero");
  for (double& w : weights) w /= sum;
  Modulus m(static_cast<int>(weights.size()));
  return Distribution(m, std::move(weights));
}

Distribution Distribution::uniform(Modulus m) {
  return Distribution(m, std::vector<double>(m.value(), 1.0 / m.value()));
}

Distribution Distribution::point_mass(Modulus m, int position) {
  std::vector<double> p(m.value(), 0.0);
  p.at(static_cast<size_t>(position)) = 1.0;
  return Distribution(m, std::move(p));
}

std::vector<int> Distribution::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i) {
    if (probs_[static_cast<size_t>(i)] > kSupportEps) s.push_back(i);
  }
  return s;
}

bool Distribution::is_uniform(double tol) const {
  const double u = 1.0 / size();
  return std::all_of(probs_.begin(), probs_.end(),
                     [&](double p) { return nearly_equal(p, u, tol); });
}

bool Distribution::is_point_mass() const { return support().size() == 1; }

int c_period(const Distribution& q) {
  const int m = q.size();
  std::vector<bool> sup(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) sup[static_cast<size_t>(j)] = q[j] > kSupportEps;
  for (int c = 1; c < m; ++c) {
    bool invariant = true;
    for (int j = 0; j < m && invariant; ++j) {
      invariant = sup[static_cast<size_t>(j)] == sup[static_cast<size_t>((j + c) % m)];
    }
    if (invariant) return c;
  }
  return m;  // shift by m is the identity
}

bool is_balanced(const Distribution& p, int c) {
  const int m = p.size();
  if (c < 1 || m % c != 0) {
    throw std::invalid_argument("c = " + std::to_string(c) +
                                " does not divide m = " + std::to_string(m));
  }
  const int cols = m / c;

  // Normalized row j under offset g(j) = off * c.
  auto row = [&](int j, int off) {
    std::vector<double> r(static_cast<size_t>(cols));
    double sum = 0.0;
    for (int k = 0; k < cols; ++k) {
      r[static_cast<size_t>(k)] = p[(j + (off + k) * c) % m];
      sum += r[static_cast<size_t>(k)];
    }
    if (sum > kSupportEps) {
      for (double& x : r) x /= sum;
    } else {
      std::fill(r.begin(), r.end(), 0.0);
    }
    return r;
  };

  // Mixed-radix enumeration of all (m/c)^c offset maps.
  std::vector<int> offs(static_cast<size_t>(c), 0);
  while (true) {
    const std::vector<double> first = row(0, offs[0]);
    bool all_equal = true;
    for (int j = 1; j < c && all_equal; ++j) {
      const std::vector<double> r = row(j, offs[static_cast<size_t>(j)]);
      for (int k = 0; k < cols && all_equal; ++k) {
        all_equal = nearly_equal(first[static_cast<size_t>(k)], r[static_cast<size_t>(k)]);
      }
    }
    if (all_equal) return true;

    int pos = c - 1;
    while (pos >= 0 && ++offs[static_cast<size_t>(pos)] == cols) {
      offs[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return false;
}

double l1_distance(const Distribution& a, const Distribution& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch in l1_distance");
  }
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) d += std::fabs(a[i] - b[i]);
  return d;
}

}  // namespace iman
