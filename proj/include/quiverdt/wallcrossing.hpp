#pragma once
// Poisson automorphisms of the formal power series algebra attached to a
// quiver, slope-ordered factorization, and Kronecker Donaldson-Thomas
// invariants d(a,b,m).
//
// Composition convention: compose(S, T) is S after T, (S.T)(x) = S(T(x)).
// The descending slope-ordered product puts the factor of largest slope
// leftmost (outermost); with this convention the m = 1 factorization is the
// pentagon identity T_{1,0} T_{0,1} = T_{0,1} T_{1,1} T_{1,0} with all
// exponents +1. Reversing the convention provably reverses the product
// order.

#include <map>
#include <utility>
#include <vector>

#include "quiverdt/duality.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

/// Automorphism of the formal neighborhood acting by x_i -> x_i u_i(x)
/// with every multiplier u_i a unit series.
class PoissonAutomorphism {
 public:
  explicit PoissonAutomorphism(std::vector<TruncatedSeries> multipliers);

  static PoissonAutomorphism identity(int rank, int bound);

  int rank() const { return rank_; }
  int bound() const { return bound_; }
  const TruncatedSeries& multiplier(int i) const {
    return multipliers_[static_cast<size_t>(i)];
  }
  /// x_i * u_i(x) as a series.
  TruncatedSeries image(int i) const;
  /// Action on an arbitrary series by substitution.
  TruncatedSeries apply(const TruncatedSeries& s) const;

  friend bool operator==(const PoissonAutomorphism& a,
                         const PoissonAutomorphism& b);

 private:
  int rank_;
  int bound_;
  std::vector<TruncatedSeries> multipliers_;
};

/// Leibniz extension of {x^d, x^e} = (sum_{k,l} skew[k][l] d_k e_l) x^{d+e}.
TruncatedSeries poisson_bracket(const TruncatedSeries& a,
                                const TruncatedSeries& b,
                                const std::vector<std::vector<long>>& skew,
                                int bound);

/// Checks {T(x_i), T(x_j)} = T({x_i, x_j}) for all pairs, exactly.
bool preserves_bracket(const PoissonAutomorphism& t,
                       const std::vector<std::vector<long>>& skew);

/// T_i: x_j -> x_j (1 + x_i)^{ {i,j} } for the quiver's skew form.
PoissonAutomorphism t_i_automorphism(const Quiver& q, int vertex, int bound);

/// Rank-2 automorphism x -> x F(x^a y^b)^{-mb}, y -> y F(x^a y^b)^{ma} for
/// a unit univariate F.
PoissonAutomorphism t_abF_automorphism(long m, long a, long b,
                                       const TruncatedSeries& f, int bound);

/// The basic case F(t) = 1 - (-1)^{mab} t.
PoissonAutomorphism basic_t_ab(long m, long a, long b, int bound);

/// Group law: compose(S, T) = S after T.
PoissonAutomorphism compose(const PoissonAutomorphism& s,
                            const PoissonAutomorphism& t);

/// Kronecker DT invariants d(a,b,m) for a+b <= bound.
struct DTTable {
  long m = 0;
  int bound = 0;
  std::map<std::pair<long, long>, Rational> entries;

  const Rational& at(long a, long b) const;
  bool all_integral() const;
};

/// Solves T^{(m)}_{1,0} T^{(m)}_{0,1} = prod^{<-}_{slope decreasing}
/// (T^{(m)}_{a,b})^{d(a,b,m)} for the unique exponents, level by level in
/// total degree a+b. Fixed-slope factors commute and are realized through
/// a single t_abF factor per primitive ray.
DTTable kronecker_factorize(long m, int bound);

/// The ray automorphism of the primitive pair (a,b) realizing all
/// exponenents d(ka,kb) of the table on that ray.
PoissonAutomorphism ray_automorphism(const DTTable& table, long a, long b);

/// Closed diagonal formula
///   d(k,k,m) = (1/((m-2)k^2)) sum_{i|k} mu(k/i) (-1)^{mi+1}
///              binom((m-1)^2 i - 1, i),
/// valid for m >= 3.
Rational diagonal_closed_form(long m, long k);

/// Euler characteristics chi(M^st_{(ka,kb)}(K_m)) for k (a+b) <= bound,
/// extracted from the wall-crossing factorization through the Euler-product
/// duality with N = m a b - a^2 - b^2. Requires gcd(a,b) = 1.
std::map<long, Integer> kronecker_stable_chi(long m, long a, long b,
                                             int bound);
std::map<long, Integer> kronecker_stable_chi(const DTTable& table, long a,
                                             long b);

/// Per-vertex series family of one slope in the quiver factorization
/// T_{i_1} ... T_{i_r} = prod^{<-}_{mu decreasing} T_mu, where
/// T_mu(x^d) = x^d Q_mu^{ {_,d} }(x).
struct SlopeFamily {
  Rational mu;
  std::vector<TruncatedSeries> q_series;  // one per vertex
};

/// Factorizes the full composition of vertex automorphisms (taken in an
/// admissible order: sources after sinks) into slope factors, descending.
/// Throws ConsistencyError if the level solves are inconsistent.
std::vector<SlopeFamily> quiver_factorize(const Quiver& q,
                                          const Stability& theta, int bound);

/// The automorphism induced by one slope family:
/// u_j = prod_i (Q^i_mu)^{ {i,j} }.
PoissonAutomorphism slope_automorphism(const Quiver& q,
                                       const SlopeFamily& family, int bound);

}  // namespace quiverdt
