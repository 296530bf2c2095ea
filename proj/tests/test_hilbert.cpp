#include <doctest.h>

#include "quiverdt/arith.hpp"
#include "quiverdt/hilbert.hpp"

using namespace quiverdt;

TEST_CASE("hilb_series: one loop gives the all-ones series") {
  auto f = hilb_series(Quiver::loop_quiver(1), LatticePoint{1}, 5);
  for (int d = 0; d <= 5; ++d) CHECK(f.coefficient(LatticePoint{d}) == 1);
}

TEST_CASE("hilb_series: two loops give catalan numbers") {
  auto f = hilb_series(Quiver::loop_quiver(2), LatticePoint{1}, 5);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int d = 0; d <= 5; ++d)
    CHECK(f.coefficient(LatticePoint{d}) == catalan[d]);
}

TEST_CASE("hilb_series: A_2 with framing at the source") {
  Quiver a2 = Quiver::linear(2);
  auto f = hilb_series(a2, LatticePoint{1, 0}, 2);
  CHECK(f.coefficient(LatticePoint{0, 0}) == 1);
  CHECK(f.coefficient(LatticePoint{1, 0}) == 1);
  CHECK(f.coefficient(LatticePoint{1, 1}) == 1);
  CHECK(f.coefficient(LatticePoint{0, 1}) == 0);
  CHECK(f.coefficient(LatticePoint{2, 0}) == 0);
}

TEST_CASE("hilb_series: multiplicativity in the framing") {
  Quiver q({"a", "b"}, {{1, 2}, {0, 1}});
  auto basis = hilb_basis(q, 6);
  for (int n0 = 0; n0 <= 2; ++n0)
    for (int n1 = 0; n1 <= 2; ++n1) {
      LatticePoint n{n0, n1};
      TruncatedSeries expected = TruncatedSeries::one(2, 6);
      for (int k = 0; k < n0; ++k) expected = mul(expected, basis[0]);
      for (int k = 0; k < n1; ++k) expected = mul(expected, basis[1]);
      CHECK(hilb_series(basis, n) == expected);
    }
}

TEST_CASE("hilb_series: constant term one, nonnegative integers") {
  Quiver q({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 0}, {0, 2, 0}});
  auto f = hilb_series(q, LatticePoint{1, 2, 1}, 4);
  CHECK(f.constant_term() == 1);
  for (const auto& [d, c] : f.coefficients()) {
    CHECK(is_integer(c));
    CHECK(c > 0);
  }
}

TEST_CASE("hilb_series: idempotent second sweep") {
  // the solver's fixed point is stable: re-running the defining equations
  // on the solution changes nothing
  Quiver q({"a", "b"}, {{1, 1}, {2, 0}});
  int bound = 5;
  auto basis = hilb_basis(q, bound);
  for (int i = 0; i < 2; ++i) {
    TruncatedSeries prod = TruncatedSeries::one(2, bound);
    for (int j = 0; j < 2; ++j)
      for (long k = 0; k < q.arrow_count(i, j); ++k)
        prod = mul(prod, basis[static_cast<size_t>(j)]);
    TruncatedSeries rhs = TruncatedSeries::one(2, bound) +
                          mul(TruncatedSeries::variable(2, i, bound), prod);
    CHECK(rhs == basis[static_cast<size_t>(i)]);
  }
}

TEST_CASE("forest_oracle: loop quiver counts plane trees") {
  Quiver two_loops = Quiver::loop_quiver(2);
  CHECK(forest_oracle(ForestSpec{two_loops, LatticePoint{1}, LatticePoint{3}}) == 5);
  CHECK(forest_oracle(ForestSpec{two_loops, LatticePoint{1}, LatticePoint{0}}) == 1);
}

TEST_CASE("forest_oracle: empty forest and unique path tree") {
  Quiver a2 = Quiver::linear(2);
  CHECK(forest_oracle(ForestSpec{a2, LatticePoint{2, 1}, LatticePoint{0, 0}}) == 1);
  CHECK(forest_oracle(ForestSpec{a2, LatticePoint{1, 0}, LatticePoint{1, 1}}) == 1);
  CHECK(forest_oracle(ForestSpec{a2, LatticePoint{1, 0}, LatticePoint{0, 1}}) == 0);
}

TEST_CASE("forest_oracle: guard rejects large dimensions") {
  CHECK_THROWS_WITH_AS(
      forest_oracle(ForestSpec{Quiver::loop_quiver(1), LatticePoint{1},
                               LatticePoint{9}}),
      doctest::Contains("hilb_series"), std::invalid_argument);
}

TEST_CASE("fuss-catalan closed form for loop quivers") {
  for (long m = 1; m <= 4; ++m) {
    auto f = hilb_series(Quiver::loop_quiver(m), LatticePoint{1}, 8);
    for (int d = 0; d <= 8; ++d) {
      Rational expected =
          gen_binomial(Rational(m * d), d) / Rational((m - 1) * d + 1);
      CHECK(f.coefficient(LatticePoint{d}) == expected);
    }
  }
}

TEST_CASE("oracle equivalence on a small mixed quiver") {
  Quiver q({"a", "b"}, {{1, 1}, {1, 0}});
  LatticePoint n{1, 1};
  auto f = hilb_series(q, n, 4);
  auto trees = forest_tree_counts(q, 4);
  auto counts = forest_counts(q, n, trees, 4);
  for (const auto& [d, c] : counts)
    CHECK(f.coefficient(d) == c);
  for (const auto& [d, c] : f.coefficients())
    CHECK(Rational(counts.count(d) ? counts.at(d) : 0) == c);
}
