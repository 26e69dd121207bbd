#include "iman/revcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace iman {

namespace {

void require_strictly_positive(const Distribution& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] <= kSupportEps) {
      throw std::invalid_argument(
          "p must be strictly positive (0 < p_i < 1); p[" + std::to_string(i) +
          "] = " + std::to_string(p[i]));
    }
  }
}

// row cyclically shifted left by s: out[i] = row[(i + s) mod m].
std::vector<double> rotate_left(const std::vector<double>& row, int s) {
  const int m = static_cast<int>(row.size());
  std::vector<double> out(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] = row[static_cast<size_t>((i + s) % m)];
  return out;
}

bool rows_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!nearly_equal(a[i], b[i], tol)) return false;
  }
  return true;
}

// All values along the coset {j, j+c, ..., j+m-c} equal, for every j < c.
bool coset_chains_equal(const Distribution& d, int c) {
  const int m = d.size();
  for (int j = 0; j < c; ++j) {
    for (int k = j + c; k < m; k += c) {
      if (!nearly_equal(d[j], d[k % m])) return false;
    }
  }
  return true;
}

}  // namespace

RMatrix build_r_matrix(const Distribution& p, const Distribution& q) {
  if (p.modulus() != q.modulus()) {
    throw std::invalid_argument("modulus mismatch between p and q");
  }
  require_strictly_positive(p);
  const int m = p.size();
  RMatrix r;
  r.entries.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m), 0.0));
  r.row_normalizers.assign(static_cast<size_t>(m), 0.0);
  for (int k = 0; k < m; ++k) {
    double ck = 0.0;
    for (int i = 0; i < m; ++i) {
      const double v = p[i] * q[(k - i + m) % m];
      r.entries[static_cast<size_t>(k)][static_cast<size_t>(i)] = v;
      ck += v;
    }
    r.row_normalizers[static_cast<size_t>(k)] = ck;
    for (int i = 0; i < m; ++i) r.entries[static_cast<size_t>(k)][static_cast<size_t>(i)] /= ck;
  }
  return r;
}

ReversibilityVerdict oracle_reversible(const Distribution& p, const Distribution& q,
                                       double tol) {
  const int m = p.size();
  if (m > kOracleMaxModulus) {
    throw std::invalid_argument("oracle refuses m = " + std::to_string(m) +
                                ": search space m^m too large; use theorem_reversible");
  }
  const RMatrix r = build_r_matrix(p, q);
  const std::vector<double>& row0 = r.entries[0];

  // Adding a constant to every g(k) rotates all shifted rows together, so
  // witnesses come in classes closed under global shifts and the smallest
  // one has g(0) = 0. Row k then needs the minimal s with
  // rotate_left(row_k, s) == row_0, independently per row.
  std::vector<int> witness(static_cast<size_t>(m), 0);
  for (int k = 1; k < m; ++k) {
    int found = -1;
    for (int s = 0; s < m && found < 0; ++s) {
      if (rows_equal(rotate_left(r.entries[static_cast<size_t>(k)], s), row0, tol)) found = s;
    }
    if (found < 0) return {};
    witness[static_cast<size_t>(k)] = found;
  }
  ReversibilityVerdict v;
  v.reversible = true;
  v.witness_g = std::move(witness);
  v.matched_condition = "oracle-row-alignment";
  return v;
}

ReversibilityVerdict theorem_reversible(const Distribution& p, const Distribution& q) {
  if (p.modulus() != q.modulus()) {
    throw std::invalid_argument("modulus mismatch between p and q");
  }
  if (!p.modulus().is_prime_power()) {
    throw UnsupportedModulusError("m = " + std::to_string(p.size()) +
                                  " is not a prime power; use oracle_reversible");
  }
  require_strictly_positive(p);
  const int m = p.size();
  const int c = c_period(q);

  ReversibilityVerdict v;
  if (c == m) {
    // The periodicity chains are single elements here. For a point-mass q
    // they hold vacuously and reversibility always follows. For any other
    // support with full period (one zero, adjacent zeros, ...), alignment
    // forces a common q-offset across rows and p must be uniform.
    if (q.is_point_mass()) {
      v.reversible = true;
      v.matched_condition = "p-cyclic";
    } else if (p.is_uniform()) {
      v.reversible = true;
      v.matched_condition = "p-cyclic";
    }
    return v;
  }
  if (coset_chains_equal(p, c)) {
    v.reversible = true;
    v.matched_condition = "p-cyclic";
    return v;
  }
  if (coset_chains_equal(q, c) && is_balanced(p, c)) {
    v.reversible = true;
    v.matched_condition = "q-cyclic+P_c";
    return v;
  }
  return v;
}

ReversibilityVerdict lemma_reversible(const Distribution& p, const Distribution& q) {
  if (p.modulus() != q.modulus()) {
    throw std::invalid_argument("modulus mismatch between p and q");
  }
  require_strictly_positive(p);
  const int m = p.size();
  if (m < 2 || m > 4) {
    throw std::invalid_argument("lemma_reversible covers m in {2,3,4}, got " +
                                std::to_string(m));
  }

  auto verdict = [](const char* clause) {
    ReversibilityVerdict v;
    v.reversible = true;
    v.matched_condition = clause;
    return v;
  };
  auto zero = [](double x) { return x <= kSupportEps; };
  auto one = [](double x) { return x >= 1.0 - kSupportEps; };

  if (m == 2) {
    if (nearly_equal(p[1], 0.5)) return verdict("p1=1/2");
    if (nearly_equal(q[1], 0.5)) return verdict("q1=1/2");
    if (zero(q[1])) return verdict("q1=0");
    if (one(q[1])) return verdict("q1=1");
    return {};
  }

  if (m == 3) {
    if (nearly_equal(p[0], p[1]) && nearly_equal(p[1], p[2])) return verdict("p0=p1=p2");
    if (nearly_equal(q[0], q[1]) && nearly_equal(q[1], q[2])) return verdict("q0=q1=q2");
    if (one(q[0])) return verdict("q0=1");
    if (one(q[1])) return verdict("q1=1");
    if (one(q[2])) return verdict("q2=1");
    return {};
  }

  // m == 4. P_2 <=> p1/p2 = p3/p0 or p1/p0 = p3/p2, by cross products.
  const bool p2_cond = nearly_equal(p[1] * p[0], p[3] * p[2]) ||
                       nearly_equal(p[1] * p[2], p[3] * p[0]);
  const bool p_even_odd = nearly_equal(p[0], p[2]) && nearly_equal(p[1], p[3]);

  if (nearly_equal(p[0], p[1]) && nearly_equal(p[1], p[2]) && nearly_equal(p[2], p[3])) {
    return verdict("p0=p1=p2=p3");
  }
  if (nearly_equal(q[0], q[1]) && nearly_equal(q[1], q[2]) && nearly_equal(q[2], q[3])) {
    return verdict("q0=q1=q2=q3");
  }
  if (zero(q[0]) && zero(q[2])) {
    if (p_even_odd) return verdict("q0=q2=0, p0=p2, p1=p3");
    if (nearly_equal(q[1], q[3]) && p2_cond) return verdict("q0=q2=0, q1=q3, P_2");
  }
  if (zero(q[1]) && zero(q[3])) {
    if (p_even_odd) return verdict("q1=q3=0, p0=p2, p1=p3");
    if (nearly_equal(q[0], q[2]) && p2_cond) return verdict("q1=q3=0, q0=q2, P_2");
  }
  for (int k = 0; k < 4; ++k) {
    if (one(q[k])) return verdict(k == 0 ? "q0=1" : k == 1 ? "q1=1" : k == 2 ? "q2=1" : "q3=1");
  }
  return {};
}

}  // namespace iman
