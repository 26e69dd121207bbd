#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iman/modcore.hpp"

namespace iman {

// Largest modulus the brute-force oracle accepts: the search space over
// shift maps g is m^m.
inline constexpr int kOracleMaxModulus = 8;

// Reverse-conditional matrix for Y = X + e with X ~ p, e ~ q:
// entries[k][i] = P(X = i | Y = k) = p_i q_{k-i} / C_k (indices mod m),
// C_k = sum_i p_i q_{k-i}. Every row sums to 1.
struct RMatrix {
  std::vector<std::vector<double>> entries;
  std::vector<double> row_normalizers;  // C_0 .. C_{m-1}
};

struct ReversibilityVerdict {
  bool reversible = false;
  // Shift map g making all rows of the shifted R identical (oracle only;
  // lexicographically smallest, so witness_g[0] == 0).
  std::optional<std::vector<int>> witness_g;
  // Which clause of the deciding predicate fired.
  std::optional<std::string> matched_condition;
};

// Requires 0 < p_i < 1 for every i (rejects any p_i = 0); q may have zeros.
RMatrix build_r_matrix(const Distribution& p, const Distribution& q);

// Brute-force reversibility decision: searches all m^m shift maps g for one
// that makes every cyclically left-shifted row of R identical within tol,
// returning the lexicographically smallest witness. The search is factored
// per row (witness classes are closed under adding a constant to g, so the
// lexicographically smallest witness has g(0) = 0 and minimal per-row
// shifts), which returns exactly the same verdict and witness as the plain
// enumeration. Refuses m > kOracleMaxModulus.
ReversibilityVerdict oracle_reversible(const Distribution& p, const Distribution& q,
                                       double tol = kPredicateTol);

// Closed-form necessary-and-sufficient reversibility condition for
// prime-power m. With c = c_period(q):
//   c < m: reversible iff p is c-periodic ("p-cyclic"), or q is c-periodic
//          and p satisfies the balanced condition P_c ("q-cyclic+P_c").
//   c = m: reversible iff q is a point mass (the periodicity chains are
//          vacuous) or p is uniform.
// Throws UnsupportedModulusError when m is not a prime power.
ReversibilityVerdict theorem_reversible(const Distribution& p, const Distribution& q);

// The literal enumerated reversibility clauses for m in {2, 3, 4}: four
// equalities for m=2, five for m=3, ten for m=4 (including both P_2
// variants). Must agree with theorem_reversible.
ReversibilityVerdict lemma_reversible(const Distribution& p, const Distribution& q);

}  // namespace iman
