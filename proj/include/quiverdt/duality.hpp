#pragma once
// Duality between Euler-product exponents and functional-equation
// exponents for univariate unit series:
//
//   F(t) = prod_{i>=1} (1 - ((-1)^N t)^i)^{-i a_i}            (product form)
//   F(t) = prod_{i>=1} (1 - (t F(t)^N)^i)^{i b_i}             (equation form)
//
// Both families of exponents are unique; a is integral iff b is. The a_i
// also have a closed divisor-sum formula via Moebius inversion.

#include <map>
#include <optional>
#include <vector>

#include "quiverdt/rational.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

/// Exponents a_i of prod (1 - ((-1)^N t)^i)^{-i a_i}.
struct EulerProductForm {
  int N = 1;
  std::map<long, Rational> exponents;
};

/// Exponents b_i of F = prod (1 - (t F^N)^i)^{i b_i}.
struct FuncEqForm {
  int N = 1;
  std::map<long, Rational> exponents;
};

/// The unique unit series solving the functional equation, to degree D.
/// N = 0 degenerates to a plain product with no self-reference.
TruncatedSeries funceq_solve(const FuncEqForm& form, int bound);

/// The unique b_i (i <= F.bound()) with funceq_solve reproducing F.
/// F must be univariate with constant term 1.
FuncEqForm funceq_extract(const TruncatedSeries& f, int N);

/// Expansion of the Euler product to degree D.
TruncatedSeries euler_expand(const EulerProductForm& form, int bound);

/// The unique a_i (i <= F.bound()) with euler_expand reproducing F.
EulerProductForm euler_factorize(const TruncatedSeries& f, int N);

/// a_d by the closed formula
///   d^2 a_d = (1/N) sum_{e|d} mu(d/e) (-1)^{Ne}
///             sum_{lambda |- e} (-1)^{lambda_1}
///             prod_i binom(N i b_i e, lambda_i - lambda_{i+1}).
/// Requires N != 0 (the N = 0 product form has no self-reference; use
/// euler_factorize there).
Rational duality_moebius(const FuncEqForm& form, long d);

struct LagrangeCheck {
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

/// Checks (k+d) [t^d] F^k = k [t^d] G^{k+d} where F solves F = G(tF).
/// Both sides are computed independently. G needs a nonzero constant term
/// and is read as a polynomial: coefficients beyond its bound are zero.
LagrangeCheck lagrange_verify(const TruncatedSeries& g, long k, long d);

struct IntegralityEntry {
  long index = 0;
  Rational value;
  bool integral = false;
};

struct IntegralityReport {
  int N = 0;
  std::vector<IntegralityEntry> entries;
  std::optional<long> first_non_integral;

  bool all_integral() const { return !first_non_integral.has_value(); }
};

/// Euler-product exponents of the functional-equation solution, with
/// integrality flags, for indices up to the bound.
IntegralityReport integrality_report(const FuncEqForm& form, int bound);

}  // namespace quiverdt
