#pragma once

#include <vector>

#include "iman/errors.hpp"

namespace iman {

// Probability mass at or below this threshold counts as zero when deciding
// support membership. Guards against round-off creating spurious support.
inline constexpr double kSupportEps = 1e-12;

// Equality tolerance used by every reversibility predicate. The underlying
// conditions are exact equalities; this separates constructed-equal values
// (agreement ~1e-15) from random-unequal ones (disagreement >> 1e-9).
inline constexpr double kPredicateTol = 1e-9;

// |a - b| <= tol * max(1, |a|, |b|): absolute for small values, relative
// for large ones.
bool nearly_equal(double a, double b, double tol = kPredicateTol);

// The cyclic domain M = {0, ..., m-1}, m >= 2.
class Modulus {
 public:
  explicit Modulus(int m);

  int value() const { return m_; }
  // m = p^k for a prime p, k >= 1.
  bool is_prime_power() const { return prime_power_; }

  bool operator==(const Modulus& other) const { return m_ == other.m_; }
  bool operator!=(const Modulus& other) const { return m_ != other.m_; }

 private:
  int m_;
  bool prime_power_;
};

// A value in [0, m) tied to its modulus.
struct ModValue {
  ModValue(int value, Modulus modulus);

  int v;
  Modulus m;
};

// Addition and subtraction in Z_m. Mixing moduli is a structural error.
ModValue mod_add(ModValue a, ModValue b);
ModValue mod_sub(ModValue a, ModValue b);

// A probability vector over M. Entries must be in [0,1] and sum to 1
// within 1e-12; the support is never empty.
class Distribution {
 public:
  Distribution(Modulus m, std::vector<double> probs);

  // Scales a non-negative weight vector to sum 1.
  static Distribution normalized(std::vector<double> weights);
  static Distribution uniform(Modulus m);
  static Distribution point_mass(Modulus m, int position);

  Modulus modulus() const { return m_; }
  int size() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](int i) const { return probs_[static_cast<size_t>(i)]; }

  // Indices with mass above kSupportEps.
  std::vector<int> support() const;
  bool is_uniform(double tol = kPredicateTol) const;
  bool is_point_mass() const;

 private:
  Modulus m_;
  std::vector<double> probs_;
};

// Smallest c >= 1 such that q_j > 0 <=> q_{j+c} > 0 for every j (indices
// mod m). Always divides m: the set of support-preserving shifts is a
// subgroup of Z_m.
int c_period(const Distribution& q);

// The balanced condition P_c: true iff there is an offset map
// g: {0..c-1} -> {0, c, ..., m-c} and positive row constants making all
// rows of the c x (m/c) matrix with entries p_{j+kc+g(j)} / C_j identical.
// Decided exactly by enumerating all (m/c)^c offset maps.
bool is_balanced(const Distribution& p, int c);

// Total variation style L1 distance, in [0, 2].
double l1_distance(const Distribution& a, const Distribution& b);

}  // namespace iman
