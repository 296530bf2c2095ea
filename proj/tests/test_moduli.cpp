#include <doctest.h>

#include <random>

#include "quiverdt/hilbert.hpp"
#include "quiverdt/moduli.hpp"

using namespace quiverdt;

namespace {

long chi_units_only(const LatticePoint& d) {
  return d.total_degree() == 1 ? 1 : 0;
}

// K_m diagonal stratum: slope 1/2 for theta = j^*, elements (k,k)
SlopeStratumData kronecker_diagonal(long m, int bound,
                                    std::vector<long> chi_by_k) {
  Quiver q = Quiver::kronecker(m);
  Stability theta({0, 1});
  return SlopeStratumData::build(
      q, theta, make_rational(1, 2), bound, [&](const LatticePoint& d) {
        size_t k = static_cast<size_t>(d[0]);
        return k <= chi_by_k.size() ? chi_by_k[k - 1] : 0;
      });
}

}  // namespace

TEST_CASE("slope_elements: enumeration is complete and graded") {
  Quiver k3 = Quiver::kronecker(3);
  Stability theta({0, 1});
  auto diag = slope_elements(k3, theta, make_rational(1, 2), 6);
  REQUIRE(diag.size() == 3);
  CHECK(diag[0] == LatticePoint{1, 1});
  CHECK(diag[1] == LatticePoint{2, 2});
  CHECK(diag[2] == LatticePoint{3, 3});

  auto third = slope_elements(k3, theta, make_rational(1, 3), 6);
  REQUIRE(third.size() == 2);
  CHECK(third[0] == LatticePoint{2, 1});
  CHECK(third[1] == LatticePoint{4, 2});

  // trivial stability: every nonzero point has slope 0
  Stability zero({0, 0});
  CHECK(slope_elements(k3, zero, Rational(0), 3).size() == 9);
}

TEST_CASE("stratum data validates completeness") {
  Quiver k3 = Quiver::kronecker(3);
  Stability theta({0, 1});
  CHECK_THROWS_AS(SlopeStratumData(k3, theta, make_rational(1, 2), 6,
                                   {LatticePoint{1, 1}}, {3}),
                  std::invalid_argument);
}

TEST_CASE("r_chi_series: geometric series when <d,d> = 0") {
  // one loop: <(1),(1)> = 0
  auto data = SlopeStratumData::build(
      Quiver::loop_quiver(1), Stability({0}), Rational(0), 5,
      [](const LatticePoint& d) { return d.total_degree() == 1 ? 1 : 0; });
  auto r = r_chi_series(data, LatticePoint{1}, 5);
  for (int d = 0; d <= 5; ++d) CHECK(r.coefficient(LatticePoint{d}) == 1);
}

TEST_CASE("r_chi_series: <d,d> = 1 gives 1 + t^d") {
  // a single vertex with no loops: <(1),(1)> = 1, R = 1 + t R R^{-1}
  auto data = SlopeStratumData::build(
      Quiver({"v"}, {{0}}), Stability({0}), Rational(0), 5,
      [](const LatticePoint& d) { return d.total_degree() == 1 ? 1 : 0; });
  auto r = r_chi_series(data, LatticePoint{1}, 5);
  TruncatedSeries expected = TruncatedSeries::one(1, 5) +
                             TruncatedSeries::variable(1, 0, 5);
  CHECK(r == expected);
}

TEST_CASE("r_chi_series: chi = 0 collapses to the geometric series") {
  auto data = SlopeStratumData::build(Quiver::kronecker(3), Stability({0, 1}),
                                      make_rational(1, 2), 6,
                                      [](const LatticePoint&) { return 0; });
  auto r = r_chi_series(data, LatticePoint{2, 2}, 6);
  // 1/(1 - t^{(2,2)})
  TruncatedSeries expected = TruncatedSeries::one(2, 6);
  expected.set_coefficient(LatticePoint{2, 2}, Rational(1));
  expected.set_coefficient(LatticePoint{4, 4}, Rational(1));  // dropped: degree 8 > 6
  CHECK(r == expected.truncated(6));
  CHECK_THROWS_AS(r_chi_series(data, LatticePoint{1, 2}, 6),
                  std::invalid_argument);
}

TEST_CASE("r_chi_series: K_3 diagonal solves R = 1 + t R^4") {
  auto data = kronecker_diagonal(3, 8, {3, 0, 0, 0});
  auto r = r_chi_series(data, LatticePoint{1, 1}, 8);
  // frozen from the recursion r_{n} = [t^{n-1}] R^4
  const long expected[] = {1, 1, 4, 22, 140};
  for (int k = 0; k <= 4; ++k)
    CHECK(r.coefficient(LatticePoint{k, k}) == expected[k]);
  // idempotence of one more sweep of the defining equation
  TruncatedSeries rhs =
      TruncatedSeries::one(2, 8) +
      mul(TruncatedSeries::monomial(LatticePoint{1, 1}, 8),
          mul(r, pow_rational(r, Rational(3))));
  CHECK(rhs == r);
}

TEST_CASE("smooth_model_series: K_3 diagonal example Q = R^3") {
  auto data = kronecker_diagonal(3, 6, {3, 0, 0});
  std::vector<long> eta{1, 0};
  auto q = smooth_model_series(data, eta, 6);
  CHECK(q.coefficient(LatticePoint{0, 0}) == 1);
  CHECK(q.coefficient(LatticePoint{1, 1}) == 3);
  CHECK(q.coefficient(LatticePoint{2, 2}) == 15);
  CHECK(q.coefficient(LatticePoint{3, 3}) == 91);
}

TEST_CASE("smooth_model_series: eta = 0 gives the constant series") {
  auto data = kronecker_diagonal(3, 6, {3, 0, 0});
  std::vector<long> eta{0, 0};
  CHECK(smooth_model_series(data, eta, 6) == TruncatedSeries::one(2, 6));
}

TEST_CASE("smooth_model_series: trivial stability reduces to hilb_series") {
  for (const Quiver& q : {Quiver::linear(2), Quiver::kronecker(2)}) {
    int nv = q.num_vertices();
    Stability zero(std::vector<long>(static_cast<size_t>(nv), 0));
    auto data =
        SlopeStratumData::build(q, zero, Rational(0), 5, chi_units_only);
    std::vector<long> eta{1, 1};
    auto smooth = smooth_model_series(data, eta, 5);
    std::vector<int> framing{1, 1};
    CHECK(smooth == hilb_series(q, LatticePoint(framing), 5));
  }
}

TEST_CASE("s_series: K_3 diagonal solves S = (1 - t S)^3") {
  auto data = kronecker_diagonal(3, 8, {3, 0, 0, 0});
  auto s = s_series(data, LatticePoint{1, 1}, 8);
  // oracle: iterate the fixed point equation and compare residual
  TruncatedSeries inner =
      TruncatedSeries::one(2, 8) -
      mul(TruncatedSeries::monomial(LatticePoint{1, 1}, 8), s);
  CHECK(pow_rational(inner, Rational(3)) == s);
  // frozen leading coefficients of that unique solution
  CHECK(s.coefficient(LatticePoint{0, 0}) == 1);
  CHECK(s.coefficient(LatticePoint{1, 1}) == -3);
  CHECK(s.coefficient(LatticePoint{2, 2}) == 12);
  CHECK(s.coefficient(LatticePoint{3, 3}) == -55);
}

TEST_CASE("s_series: chi = 0 gives 1") {
  auto data = SlopeStratumData::build(Quiver::kronecker(2), Stability({0, 1}),
                                      make_rational(1, 2), 6,
                                      [](const LatticePoint&) { return 0; });
  CHECK(s_series(data, LatticePoint{1, 1}, 6) == TruncatedSeries::one(2, 6));
}

TEST_CASE("s_series: K_2 diagonal has vanishing pairing, S = 1") {
  // <(k,k),(l,l)> = 0 on K_2: every exponent vanishes and the relation
  // S^d = prod_e R^e^{<d,e> chi(e)} holds trivially on both sides
  auto data = kronecker_diagonal(2, 6, {2, 0, 0});
  auto s = s_series(data, LatticePoint{1, 1}, 6);
  CHECK(s == TruncatedSeries::one(2, 6));
  auto r = r_chi_series(data, LatticePoint{1, 1}, 6);
  TruncatedSeries product = TruncatedSeries::one(2, 6);  // empty exponents
  CHECK(s == product);
  // and R is the geometric series in t^{(1,1)}
  CHECK(r.coefficient(LatticePoint{2, 2}) == 1);
}

TEST_CASE("extract_stable_chi: all-one observations give chi = 0") {
  Quiver k2 = Quiver::kronecker(2);
  Stability theta({0, 1});
  auto elements = slope_elements(k2, theta, make_rational(1, 2), 6);
  std::map<LatticePoint, TruncatedSeries> observed;
  for (const auto& d : elements)
    observed.emplace(d, TruncatedSeries::one(2, 6));
  auto chi = extract_stable_chi(k2, theta, make_rational(1, 2), observed, 6);
  for (const auto& [d, value] : chi) CHECK(value == 0);
}

TEST_CASE("extract_stable_chi: K_3 diagonal recovers chi from S = (1-tS)^3") {
  auto data = kronecker_diagonal(3, 8, {3, 0, 0, 0});
  std::map<LatticePoint, TruncatedSeries> observed;
  for (const auto& d : data.elements())
    observed.emplace(d, s_series(data, d, 8));
  auto chi = extract_stable_chi(data.quiver(), data.theta(), data.mu(),
                                observed, 8);
  CHECK(chi.at(LatticePoint{1, 1}) == 3);
  CHECK(chi.at(LatticePoint{2, 2}) == 0);
  CHECK(chi.at(LatticePoint{3, 3}) == 0);
  CHECK(chi.at(LatticePoint{4, 4}) == 0);
}

TEST_CASE("extract_stable_chi: random round trip") {
  std::mt19937 rng(401);
  std::uniform_int_distribution<int> chi_value(-3, 3);
  // loop-quiver strata have nonzero pairings everywhere, so every chi is
  // observable
  Quiver q = Quiver::loop_quiver(2);
  Stability theta({0});
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<long> values;
    for (int k = 0; k < 6; ++k) values.push_back(chi_value(rng));
    auto data = SlopeStratumData::build(
        q, theta, Rational(0), 6, [&](const LatticePoint& d) {
          return values[static_cast<size_t>(d.total_degree() - 1)];
        });
    std::map<LatticePoint, TruncatedSeries> observed;
    for (const auto& d : data.elements())
      observed.emplace(d, s_series(data, d, 6));
    auto chi = extract_stable_chi(q, theta, Rational(0), observed, 6);
    for (size_t k = 0; k < data.elements().size(); ++k)
      CHECK(chi.at(data.elements()[k]) == data.chi(k));
  }
}

TEST_CASE("extract_stable_chi: inconsistent observations are rejected") {
  auto data = kronecker_diagonal(3, 6, {3, 0, 0});
  std::map<LatticePoint, TruncatedSeries> observed;
  for (const auto& d : data.elements())
    observed.emplace(d, s_series(data, d, 6));
  // corrupt one high-degree coefficient
  TruncatedSeries& bad = observed.at(LatticePoint{3, 3});
  bad.set_coefficient(LatticePoint{3, 3},
                      bad.coefficient(LatticePoint{3, 3}) + 1);
  CHECK_THROWS_AS(extract_stable_chi(data.quiver(), data.theta(), data.mu(),
                                     observed, 6),
                  ConsistencyError);
}

TEST_CASE("solver sweeps are idempotent at the fixed point") {
  auto data = kronecker_diagonal(3, 6, {3, -2, 1});
  const auto& elements = data.elements();
  // recompute every defining equation once more on the solved family
  std::vector<TruncatedSeries> solved;
  for (const auto& d : elements) solved.push_back(r_chi_series(data, d, 6));
  for (size_t i = 0; i < elements.size(); ++i) {
    TruncatedSeries prod = TruncatedSeries::one(2, 6);
    for (size_t j = 0; j < elements.size(); ++j) {
      long exp = -euler_form(data.quiver(), elements[i], elements[j]) *
                 data.chi(j);
      if (exp != 0) prod = mul(prod, pow_rational(solved[j], Rational(exp)));
    }
    TruncatedSeries rhs =
        TruncatedSeries::one(2, 6) +
        mul(TruncatedSeries::monomial(elements[i], 6), mul(solved[i], prod));
    CHECK(rhs == solved[i]);
  }
}
