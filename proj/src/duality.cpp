#include "quiverdt/duality.hpp"

#include <algorithm>

#include "quiverdt/arith.hpp"

namespace quiverdt {

namespace {

void require_unit_univariate(const TruncatedSeries& f, const char* who) {
  if (f.rank() != 1)
    throw std::invalid_argument(std::string(who) + ": series must be univariate");
  if (!f.has_unit_constant_term())
    throw std::invalid_argument(std::string(who) +
                                ": series must have constant term 1");
}

// F^e for integer e and F with arbitrary nonzero constant term: factor out
// the constant so the unit-series power path applies.
TruncatedSeries pow_int_general(const TruncatedSeries& f, long e) {
  if (e >= 0) return pow_rational(f, Rational(e));
  Rational c = f.constant_term();
  if (c == 0)
    throw std::invalid_argument(
        "negative power of a series with zero constant term");
  TruncatedSeries unit = f * (Rational(1) / c);
  return pow_rational(unit, Rational(e)) * rational_pow(c, e);
}

}  // namespace

TruncatedSeries funceq_solve(const FuncEqForm& form, int bound) {
  TruncatedSeries f = TruncatedSeries::one(1, bound);
  LatticePoint t1{1};
  // Each factor carries t^i with i >= 1, so the degree-n coefficient of the
  // right-hand side only reads F-coefficients below degree n; `bound`
  // sweeps reach the fixed point.
  for (int sweep = 1; sweep <= bound; ++sweep) {
    TruncatedSeries fn = pow_rational(f, Rational(form.N));
    TruncatedSeries g = mul(TruncatedSeries::variable(1, 0, bound), fn);
    TruncatedSeries rhs = TruncatedSeries::one(1, bound);
    TruncatedSeries gi = TruncatedSeries::one(1, bound);
    long max_index = 0;
    for (const auto& [i, bi] : form.exponents)
      if (bi != 0 && i <= bound) max_index = std::max(max_index, i);
    for (long i = 1; i <= max_index; ++i) {
      gi = mul(gi, g);
      auto it = form.exponents.find(i);
      if (it == form.exponents.end() || it->second == 0) continue;
      TruncatedSeries factor = TruncatedSeries::one(1, bound) - gi;
      rhs = mul(rhs, pow_rational(factor, Rational(i) * it->second));
    }
    f = rhs;
  }
  return f;
}

FuncEqForm funceq_extract(const TruncatedSeries& f, int N) {
  require_unit_univariate(f, "funceq_extract");
  FuncEqForm form;
  form.N = N;
  int bound = f.bound();
  // peeling: the factor (1 - (tF^N)^i)^{i b_i} first contributes at t^i,
  // with linear term -i b_i t^i, so the degree-i mismatch determines b_i.
  for (long i = 1; i <= bound; ++i) {
    TruncatedSeries partial = funceq_solve(form, static_cast<int>(i));
    LatticePoint ti{static_cast<int>(i)};
    Rational mismatch = partial.coefficient(ti) - f.coefficient(ti);
    if (mismatch != 0) form.exponents[i] = mismatch / Rational(i);
  }
  return form;
}

TruncatedSeries euler_expand(const EulerProductForm& form, int bound) {
  TruncatedSeries result = TruncatedSeries::one(1, bound);
  for (const auto& [i, ai] : form.exponents) {
    if (i > bound || ai == 0) continue;
    // 1 - ((-1)^N t)^i = 1 - (-1)^{Ni} t^i
    Rational sign = (form.N * i) % 2 == 0 ? Rational(1) : Rational(-1);
    TruncatedSeries factor =
        TruncatedSeries::one(1, bound) -
        TruncatedSeries::monomial(LatticePoint{static_cast<int>(i)}, bound,
                                  sign);
    result = mul(result, pow_rational(factor, Rational(-i) * ai));
  }
  return result;
}

EulerProductForm euler_factorize(const TruncatedSeries& f, int N) {
  require_unit_univariate(f, "euler_factorize");
  EulerProductForm form;
  form.N = N;
  int bound = f.bound();
  TruncatedSeries residual = f;
  // After dividing out factors with index < i the residual is
  // 1 + i a_i (-1)^{Ni} t^i + higher.
  for (long i = 1; i <= bound; ++i) {
    LatticePoint ti{static_cast<int>(i)};
    Rational sign = (N * i) % 2 == 0 ? Rational(1) : Rational(-1);
    Rational ai = residual.coefficient(ti) / (Rational(i) * sign);
    if (ai == 0) continue;
    form.exponents[i] = ai;
    TruncatedSeries factor =
        TruncatedSeries::one(1, bound) -
        TruncatedSeries::monomial(ti, bound, sign);
    residual = mul(residual, pow_rational(factor, Rational(i) * ai));
  }
  return form;
}

Rational duality_moebius(const FuncEqForm& form, long d) {
  if (form.N == 0)
    throw std::invalid_argument(
        "duality_moebius: N = 0 has no self-referential equation; use "
        "euler_factorize on the product form");
  if (d < 1) throw std::invalid_argument("duality_moebius: d must be >= 1");
  Rational total(0);
  for (long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = moebius(d / e);
    if (mu == 0) continue;
    Rational inner(0);
    for (const Partition& lam : partitions_of(static_cast<int>(e))) {
      Rational term = lam.part(1) % 2 == 0 ? Rational(1) : Rational(-1);
      for (int i = 1; i <= lam.num_parts() && term != 0; ++i) {
        long ki = lam.difference(i);
        if (ki == 0) continue;
        auto it = form.exponents.find(i);
        Rational bi = it == form.exponents.end() ? Rational(0) : it->second;
        term *= binomial(Rational(form.N) * i * bi * e, ki);
      }
      inner += term;
    }
    Rational sign = (form.N * e) % 2 == 0 ? Rational(1) : Rational(-1);
    total += Rational(mu) * sign * inner;
  }
  total /= Rational(form.N);
  total /= Rational(d) * d;
  return total;
}

LagrangeCheck lagrange_verify(const TruncatedSeries& g, long k, long d) {
  if (g.rank() != 1)
    throw std::invalid_argument("lagrange_verify: series must be univariate");
  if (g.constant_term() == 0)
    throw std::invalid_argument(
        "lagrange_verify: G must have nonzero constant term");
  if (d < 0) throw std::invalid_argument("lagrange_verify: d must be >= 0");

  int bound = std::max<int>(g.bound(), static_cast<int>(d));
  TruncatedSeries gw = g.rebounded(bound);

  // solve F = G(tF) degree by degree (the t prefactor is well-founding)
  TruncatedSeries f = TruncatedSeries::constant(1, bound, g.constant_term());
  for (int sweep = 1; sweep <= bound; ++sweep) {
    TruncatedSeries tf = mul(TruncatedSeries::variable(1, 0, bound), f);
    std::array<TruncatedSeries, 1> arg{tf};
    f = substitute(gw, arg);
  }

  LatticePoint td{static_cast<int>(d)};
  Rational lhs = Rational(k + d) * pow_int_general(f, k).coefficient(td);
  Rational rhs = Rational(k) * pow_int_general(gw, k + d).coefficient(td);
  return LagrangeCheck{lhs, rhs, lhs == rhs};
}

IntegralityReport integrality_report(const FuncEqForm& form, int bound) {
  IntegralityReport report;
  report.N = form.N;
  EulerProductForm product = euler_factorize(funceq_solve(form, bound), form.N);
  for (long i = 1; i <= bound; ++i) {
    auto it = product.exponents.find(i);
    Rational value = it == product.exponents.end() ? Rational(0) : it->second;
    bool integral = is_integer(value);
    report.entries.push_back(IntegralityEntry{i, value, integral});
    if (!integral && !report.first_non_integral) report.first_non_integral = i;
  }
  return report;
}

}  // namespace quiverdt
