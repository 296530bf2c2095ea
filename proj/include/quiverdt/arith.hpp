#pragma once
// Integer partitions, the Moebius function, generalized binomials, p-adic
// congruence checks for binomial coefficients, and the symmetric-product
// stratum count.

#include <map>
#include <optional>
#include <vector>

#include "quiverdt/rational.hpp"

namespace quiverdt {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  /// m_i = number of parts equal to i.
  int multiplicity(int i) const;
  /// i-th part (1-based); 0 beyond the last part.
  int part(int i) const;
  /// c_i = lambda_i - lambda_{i+1} (1-based position index).
  int difference(int i) const { return part(i) - part(i + 1); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n, each once, in reverse lexicographic order:
/// (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

/// Number-theoretic Moebius function, by trial-division factorization.
int moebius(long n);

/// q(q-1)...(q-k+1)/k!; defined for every rational q and k >= 0.
Rational gen_binomial(const Rational& q, long k);

/// A large-but-finite stand-in for an infinite p-adic valuation (of 0).
inline constexpr long kInfiniteValuation = 1L << 30;

/// Result of checking the Kummer-type valuation bound and the Jacobsthal
/// congruence on a single binomial coefficient.
struct CongruenceReport {
  long a = 0;
  long b = 0;
  long p = 0;
  Integer binom;  // binom(a, b)

  // valuation bound: v_p(binom(a,b)) >= max(m_p(a) - m_p(b), 0)
  long valuation = 0;  // kInfiniteValuation when binom(a,b) = 0
  long valuation_bound = 0;
  bool valuation_pass = false;

  // congruence part, applicable when p | a and p | b:
  // binom(a,b) == eta * binom(a/p, b/p) mod p^r
  bool congruence_applicable = false;
  int eta = 1;
  long exponent_bound = 0;  // r
  bool congruence_pass = true;

  // extra clause for p = 2: binom(a,b) == binom(a/2, b/2) mod 4
  bool mod4_applicable = false;
  bool mod4_pass = true;

  bool pass() const { return valuation_pass && congruence_pass && mod4_pass; }
};

/// Checks the valuation bound and, when p divides both arguments, the
/// Jacobsthal congruence (with its mod-4 refinement at p = 2). p must be
/// prime; a may be negative, b must be >= 0.
CongruenceReport binomial_congruence_check(long a, long b, long p);

/// Euler characteristic of the stratum of the n-th symmetric power of a
/// space with Euler characteristic chi indexed by the partition lam:
/// k! * binom(chi, k) / prod_i m_i(lam)!, with k the number of parts.
Integer chi_symmetric_stratum(long chi, const Partition& lam);

/// Coefficient of t^d in prod_i (1 - t^i)^{-c_i}, as the partition sum
/// sum_{lambda |- d} prod_i binom(c_i + lambda_i - lambda_{i+1} - 1,
/// lambda_i - lambda_{i+1}).
Integer coeff_product_form(const std::map<long, long>& c, long d);

}  // namespace quiverdt
