#include <doctest.h>

#include <random>

#include "quiverdt/arith.hpp"
#include "quiverdt/series.hpp"

using namespace quiverdt;

namespace {

// independent partition counter: p(n, k) = partitions of n with parts <= k
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count_partitions(n - k, k) + count_partitions(n, k - 1);
}

}  // namespace

TEST_CASE("partitions_of: base cases and order") {
  auto empty = partitions_of(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].num_parts() == 0);

  auto four = partitions_of(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0].parts() == std::vector<int>{4});
  CHECK(four[1].parts() == std::vector<int>{3, 1});
  CHECK(four[2].parts() == std::vector<int>{2, 2});
  CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partitions_of: counts match the recurrence oracle") {
  for (int n = 0; n <= 12; ++n)
    CHECK(static_cast<long>(partitions_of(n).size()) ==
          count_partitions(n, n));
  CHECK(partitions_of(7).size() == 15);
}

TEST_CASE("partition accessors") {
  Partition lam({3, 2, 2, 1});
  CHECK(lam.weight() == 8);
  CHECK(lam.multiplicity(2) == 2);
  CHECK(lam.part(1) == 3);
  CHECK(lam.part(5) == 0);
  CHECK(lam.difference(1) == 1);
  CHECK(lam.difference(4) == 1);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("moebius: small values and divisor-sum identity") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);
  for (long n = 2; n <= 60; ++n) {
    long sum = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sum += moebius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("gen_binomial: examples and reflection") {
  CHECK(gen_binomial(Rational(-3), 2) == 6);
  CHECK(gen_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(gen_binomial(Rational(5), 0) == 1);
  // binom(-a+b-1, b) = (-1)^b binom(a, b)
  for (long a = -10; a <= 10; ++a)
    for (long b = 0; b <= 10; ++b) {
      Rational sign = b % 2 == 0 ? 1 : -1;
      CHECK(gen_binomial(Rational(-a + b - 1), b) ==
            sign * gen_binomial(Rational(a), b));
    }
}

TEST_CASE("binomial_congruence_check: worked examples") {
  auto r1 = binomial_congruence_check(4, 2, 2);
  CHECK(r1.binom == 6);
  CHECK(r1.valuation == 1);
  CHECK(r1.valuation_bound == 1);
  CHECK(r1.pass());

  auto r2 = binomial_congruence_check(10, 5, 5);
  CHECK(r2.binom == 252);
  CHECK(r2.congruence_applicable);
  CHECK(r2.exponent_bound >= 1);
  CHECK(r2.pass());

  auto r3 = binomial_congruence_check(6, 2, 2);
  CHECK(r3.binom == 15);
  CHECK(r3.mod4_applicable);
  CHECK(r3.mod4_pass);  // 15 == 3 mod 4
  CHECK(r3.pass());

  CHECK_THROWS_AS(binomial_congruence_check(4, 2, 6), std::invalid_argument);
}

TEST_CASE("binomial_congruence_check: eta sign is forced at (4,2,2)") {
  auto r = binomial_congruence_check(4, 2, 2);
  CHECK(r.eta == -1);
  CHECK(r.exponent_bound == 3);  // 6 - (-2) = 8 = 2^3 exactly
}

TEST_CASE("binomial_congruence_check: negative top arguments") {
  for (long p : {2L, 3L, 5L}) {
    for (long a = -30; a <= 0; ++a)
      for (long b = 0; b <= 30; ++b) CHECK(binomial_congruence_check(a, b, p).pass());
  }
}

TEST_CASE("chi_symmetric_stratum: examples") {
  CHECK(chi_symmetric_stratum(3, Partition({1, 1})) == 3);
  for (long chi = -4; chi <= 4; ++chi)
    CHECK(chi_symmetric_stratum(chi, Partition({5})) == chi);
  CHECK(chi_symmetric_stratum(2, Partition({1, 1, 1})) == 0);
}

TEST_CASE("chi_symmetric_stratum: strata sum to the symmetric power") {
  for (long chi = -5; chi <= 5; ++chi)
    for (int n = 0; n <= 6; ++n) {
      Integer total = 0;
      for (const Partition& lam : partitions_of(n))
        total += chi_symmetric_stratum(chi, lam);
      CHECK(Rational(total) == gen_binomial(Rational(chi + n - 1), n));
    }
}

TEST_CASE("coeff_product_form: examples") {
  CHECK(coeff_product_form({{1, 1}}, 5) == 1);
  CHECK(coeff_product_form({{1, 2}}, 2) == 3);
  CHECK(coeff_product_form({}, 3) == 0);
  CHECK(coeff_product_form({}, 0) == 1);
}

TEST_CASE("coeff_product_form: matches series expansion") {
  // oracle: expand prod (1 - t^i)^{-c_i} with exact series arithmetic
  const int bound = 10;
  std::vector<std::map<long, long>> cases = {
      {{1, 2}, {2, -1}},          {{1, -3}, {3, 3}},
      {{2, 2}, {4, 1}},           {{1, 1}, {2, 1}, {3, 1}, {4, 1}},
      {{1, -2}, {2, -2}, {3, 2}}, {{4, 3}},
  };
  std::mt19937 rng(509);
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> index(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<long, long> c;
    for (int s = 0; s < 4; ++s) {
      int v = value(rng);
      if (v != 0) c[index(rng)] = v;
    }
    cases.push_back(c);
  }
  for (const auto& c : cases) {
    TruncatedSeries expansion = TruncatedSeries::one(1, bound);
    for (const auto& [i, ci] : c) {
      TruncatedSeries factor =
          TruncatedSeries::one(1, bound) -
          TruncatedSeries::monomial(LatticePoint{static_cast<int>(i)}, bound);
      expansion = mul(expansion, pow_rational(factor, Rational(-ci)));
    }
    for (long d = 0; d <= bound; ++d)
      CHECK(Rational(coeff_product_form(c, d)) ==
            expansion.coefficient(LatticePoint{static_cast<int>(d)}));
  }
}
