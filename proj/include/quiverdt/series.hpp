#pragma once
// Truncated multivariate formal power series over exact rationals.
//
// Truncation is by total degree: a series of rank r and bound D stores
// coefficients for monomials t^d with |d| = d_1+...+d_r <= D. Every
// operation truncates its result to the minimum bound of its operands, so
// coefficients are always exact values of the untruncated product/power/
// composition up to that degree.

#include <array>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "quiverdt/rational.hpp"

namespace quiverdt {

inline constexpr int kMaxRank = 16;

/// Multi-exponent / dimension vector: a tuple of nonnegative integers.
/// Ordered graded-lexicographically (total degree first, then lex).
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::span<const int> exps);
  LatticePoint(std::initializer_list<int> exps);

  static LatticePoint zero(int rank);
  static LatticePoint unit(int rank, int index);

  int rank() const { return rank_; }
  int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  int total_degree() const { return total_; }
  bool is_zero() const { return total_ == 0; }

  LatticePoint operator+(const LatticePoint& other) const;
  LatticePoint scaled(int k) const;
  std::vector<int> as_vector() const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    if (a.rank_ != b.rank_ || a.total_ != b.total_) return false;
    for (int i = 0; i < a.rank_; ++i)
      if (a.exps_[static_cast<size_t>(i)] != b.exps_[static_cast<size_t>(i)])
        return false;
    return true;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) {
    return !(a == b);
  }
  // graded-lex: smaller total degree first, ties broken lexicographically
  friend bool operator<(const LatticePoint& a, const LatticePoint& b);

 private:
  std::array<int, kMaxRank> exps_{};
  int rank_ = 0;
  int total_ = 0;
};

class TruncatedSeries {
 public:
  using CoeffMap = std::map<LatticePoint, Rational>;

  TruncatedSeries(int rank, int bound);

  static TruncatedSeries constant(int rank, int bound, const Rational& c);
  static TruncatedSeries one(int rank, int bound);
  static TruncatedSeries monomial(const LatticePoint& d, int bound,
                                  const Rational& c = Rational(1));
  static TruncatedSeries variable(int rank, int index, int bound);

  int rank() const { return rank_; }
  int bound() const { return bound_; }

  /// Normalized coefficient map (no stored zeros), graded-lex order.
  const CoeffMap& coefficients() const { return coeffs_; }
  Rational coefficient(const LatticePoint& d) const;
  Rational constant_term() const;
  /// Sets a coefficient; monomials beyond the bound are dropped (they are
  /// zero modulo the truncation ideal).
  void set_coefficient(const LatticePoint& d, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  bool has_unit_constant_term() const { return constant_term() == 1; }
  /// Least total degree of a nonzero term; bound()+1 for the zero series.
  int order() const;

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const Rational& scalar) const;
  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);

  /// this += c * other, truncated at this->bound().
  void add_scaled(const Rational& c, const TruncatedSeries& other);

  /// Copy truncated to a smaller bound.
  TruncatedSeries truncated(int new_bound) const;
  /// Copy with the bound reinterpreted upward; the new high-degree
  /// coefficients are taken to be zero. Solver plumbing; use with care.
  TruncatedSeries rebounded(int new_bound) const;

  /// Equality compares all coefficients up to min(bound) of the operands.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  int rank_;
  int bound_;
  CoeffMap coeffs_;
};

inline TruncatedSeries operator*(const Rational& scalar,
                                 const TruncatedSeries& s) {
  return s * scalar;
}

/// Product of two series of equal rank, truncated at min(bound).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^q, exact. Nonnegative integer exponents work for any series (repeated
/// squaring); all other exponents require constant term exactly 1 and use
/// the generalized binomial series, which terminates at the bound.
TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& q);

/// a evaluated at args (one per variable of a). Every argument must have
/// zero constant term; all arguments share one rank and bound.
TruncatedSeries substitute(const TruncatedSeries& a,
                           std::span<const TruncatedSeries> args);

/// Compositional inverse g of a univariate series h with h(0)=0 and
/// nonzero linear coefficient: h(g(t)) = t = g(h(t)) up to the bound.
TruncatedSeries comp_inverse(const TruncatedSeries& h);

/// Coordinate flip t_i -> -t_i for every variable: negates coefficients in
/// odd total degree. Involution.
TruncatedSeries negate_variables(const TruncatedSeries& s);

}  // namespace quiverdt
