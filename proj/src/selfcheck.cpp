#include "quiverdt/selfcheck.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "quiverdt/arith.hpp"
#include "quiverdt/duality.hpp"
#include "quiverdt/hilbert.hpp"
#include "quiverdt/moduli.hpp"

namespace quiverdt {
namespace selfcheck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Failures {
  int checks = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& message) {
    ++checks;
    if (!ok && messages.size() < 5) messages.push_back(message);
    if (!ok) ++failed;
  }
  int failed = 0;
};

CriterionResult finish(int index, const std::string& name, Failures& f,
                       Clock::time_point start, double time_limit = 0.0) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.seconds = seconds_since(start);
  bool in_time = time_limit <= 0.0 || r.seconds < time_limit;
  r.pass = f.failed == 0 && in_time;
  std::ostringstream os;
  os << f.checks << " checks";
  if (f.failed > 0) os << ", " << f.failed << " failed: " << f.messages[0];
  if (!in_time) os << ", exceeded time limit of " << time_limit << " s";
  r.detail = os.str();
  return r;
}

std::string point_str(const LatticePoint& d) {
  std::string s = "(";
  for (int i = 0; i < d.rank(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

const DTTable& Context::kronecker_table(long m, int bound) {
  auto key = std::make_pair(m, bound);
  auto it = tables_.find(key);
  if (it == tables_.end())
    it = tables_.emplace(key, kronecker_factorize(m, bound)).first;
  return it->second;
}

CriterionResult catalan_pipeline(Context&) {
  auto start = Clock::now();
  Failures f;

  FuncEqForm form;
  form.N = 1;
  form.exponents[1] = Rational(-1);

  TruncatedSeries catalan = funceq_solve(form, 10);
  const long expected[] = {1,   1,    2,    5,    14,   42,
                           132, 429,  1430, 4862, 16796};
  for (int d = 0; d <= 10; ++d)
    f.expect(catalan.coefficient(LatticePoint{d}) == expected[d],
             "catalan coefficient t^" + std::to_string(d));

  EulerProductForm product = euler_factorize(funceq_solve(form, 12), 1);
  const long head[] = {-1, 1, -1, 2};
  for (long i = 1; i <= 4; ++i) {
    auto it = product.exponents.find(i);
    Rational a = it == product.exponents.end() ? Rational(0) : it->second;
    f.expect(a == head[i - 1], "a_" + std::to_string(i));
  }
  for (long i = 1; i <= 12; ++i) {
    auto it = product.exponents.find(i);
    Rational a = it == product.exponents.end() ? Rational(0) : it->second;
    f.expect(is_integer(a), "a_" + std::to_string(i) + " integral");
    f.expect(duality_moebius(form, i) == a,
             "moebius formula at d=" + std::to_string(i));
  }
  return finish(1, "catalan pipeline", f, start, 1.0);
}

CriterionResult fuss_catalan_forests(Context&) {
  auto start = Clock::now();
  Failures f;
  for (long m = 1; m <= 4; ++m) {
    Quiver q = Quiver::loop_quiver(m);
    TruncatedSeries series = hilb_series(q, LatticePoint{1}, 8);
    for (int d = 0; d <= 8; ++d) {
      Rational expected =
          gen_binomial(Rational(m * d), d) / Rational((m - 1) * d + 1);
      f.expect(series.coefficient(LatticePoint{d}) == expected,
               "fuss-catalan m=" + std::to_string(m) +
                   " d=" + std::to_string(d));
    }
    for (int d = 0; d <= 5; ++d) {
      long count = static_cast<long>(
          forest_oracle(ForestSpec{q, LatticePoint{1}, LatticePoint{d}}));
      f.expect(series.coefficient(LatticePoint{d}) == count,
               "oracle m=" + std::to_string(m) + " d=" + std::to_string(d));
    }
  }
  return finish(2, "fuss-catalan / forests", f, start, 5.0);
}

namespace {

// every quiver on `nv` vertices with arrow multiplicities <= 2, encoded as
// a base-3 integer over the matrix entries
Quiver decode_quiver(int nv, long code) {
  std::vector<std::vector<long>> arrows(
      static_cast<size_t>(nv), std::vector<long>(static_cast<size_t>(nv), 0));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      arrows[static_cast<size_t>(i)][static_cast<size_t>(j)] = code % 3;
      code /= 3;
    }
  std::vector<std::string> names;
  for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i + 1));
  return Quiver(std::move(names), std::move(arrows));
}

// all framings with entries in {0,1,2}
std::vector<LatticePoint> all_framings(int nv) {
  std::vector<LatticePoint> out;
  long total = 1;
  for (int i = 0; i < nv; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> entries(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
      entries[static_cast<size_t>(i)] = static_cast<int>(c % 3);
      c /= 3;
    }
    out.push_back(LatticePoint(entries));
  }
  return out;
}

bool series_equals_counts(const TruncatedSeries& lib,
                          const std::map<LatticePoint, long>& oracle) {
  // both sides store no zeros, so they must agree entry by entry
  if (lib.coefficients().size() != oracle.size()) return false;
  auto it = oracle.begin();
  for (const auto& [d, c] : lib.coefficients()) {
    if (it->first != d || Rational(it->second) != c) return false;
    ++it;
  }
  return true;
}

std::vector<std::string> check_quiver_against_oracle(int nv, long code,
                                                     int degree_bound) {
  std::vector<std::string> failures;
  Quiver q = decode_quiver(nv, code);
  auto basis = hilb_basis(q, degree_bound);
  auto trees = forest_tree_counts(q, degree_bound);
  // framing series share partial products of basis powers; the association
  // order is immaterial since truncated multiplication is exactly
  // associative, and a subsample below re-checks the plain hilb_series path
  std::vector<std::vector<TruncatedSeries>> powers(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    powers[static_cast<size_t>(i)].push_back(
        TruncatedSeries::one(nv, degree_bound));
    for (int k = 1; k <= 2; ++k)
      powers[static_cast<size_t>(i)].push_back(
          mul(powers[static_cast<size_t>(i)].back(),
              basis[static_cast<size_t>(i)]));
  }
  for (const LatticePoint& n : all_framings(nv)) {
    TruncatedSeries lib = powers[0][static_cast<size_t>(n[0])];
    for (int i = 1; i < nv; ++i)
      if (n[i] > 0)
        lib = mul(lib, powers[static_cast<size_t>(i)][static_cast<size_t>(n[i])]);
    auto oracle = forest_counts(q, n, trees, degree_bound);
    bool ok = series_equals_counts(lib, oracle);
    if (ok && code % 97 == 0) ok = hilb_series(basis, n) == lib;
    if (!ok)
      failures.push_back("quiver #" + std::to_string(code) + " (" +
                         std::to_string(nv) + " vertices), framing " +
                         point_str(n));
  }
  return failures;
}

}  // namespace

CriterionResult oracle_equivalence(Context&, int threads) {
  auto start = Clock::now();
  Failures f;
  const int degree_bound = 5;
  for (int nv = 1; nv <= 3; ++nv) {
    long total = 1;
    for (int i = 0; i < nv * nv; ++i) total *= 3;
    int workers = std::max(1, threads);
    std::vector<std::vector<std::string>> results(
        static_cast<size_t>(workers));
    std::vector<long> counts(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        for (long code = w; code < total; code += workers) {
          auto bad = check_quiver_against_oracle(nv, code, degree_bound);
          auto& sink = results[static_cast<size_t>(w)];
          sink.insert(sink.end(), bad.begin(), bad.end());
          ++counts[static_cast<size_t>(w)];
        }
      });
    for (auto& t : pool) t.join();
    long done = std::accumulate(counts.begin(), counts.end(), 0L);
    f.expect(done == total, "all quivers visited");
    f.checks += static_cast<int>(done);
    for (const auto& chunk : results)
      for (const auto& message : chunk) f.expect(false, message);
  }
  return finish(3, "hilbert series vs forest oracle", f, start, 60.0);
}

CriterionResult trivial_stability_reduction(Context&) {
  auto start = Clock::now();
  Failures f;
  const int bound = 6;
  std::vector<Quiver> quivers{Quiver::linear(2), Quiver::linear(3),
                              Quiver::kronecker(2)};
  for (const Quiver& q : quivers) {
    int nv = q.num_vertices();
    Stability trivial(std::vector<long>(static_cast<size_t>(nv), 0));
    auto data = SlopeStratumData::build(
        q, trivial, Rational(0), bound,
        [](const LatticePoint& d) { return d.total_degree() == 1 ? 1 : 0; });
    auto basis = hilb_basis(q, bound);
    for (const LatticePoint& n : all_framings(nv)) {
      std::vector<long> eta;
      for (int i = 0; i < nv; ++i) eta.push_back(n[i]);
      TruncatedSeries smooth = smooth_model_series(data, eta, bound);
      TruncatedSeries hilb = hilb_series(basis, n);
      f.expect(smooth == hilb, "framing " + point_str(n));
    }
  }
  return finish(4, "trivial-stability reduction", f, start);
}

CriterionResult pentagon(Context& ctx) {
  auto start = Clock::now();
  Failures f;
  const DTTable& table = ctx.kronecker_table(1, 8);
  for (const auto& [key, value] : table.entries) {
    bool is_unit_entry = (key == std::make_pair(1L, 0L)) ||
                         (key == std::make_pair(0L, 1L)) ||
                         (key == std::make_pair(1L, 1L));
    Rational expected = is_unit_entry ? Rational(1) : Rational(0);
    f.expect(value == expected,
             "d(" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + ",1)");
  }
  return finish(5, "pentagon identity", f, start, 5.0);
}

CriterionResult diagonal_formula(Context& ctx) {
  auto start = Clock::now();
  Failures f;
  for (long m : {3L, 4L}) {
    const DTTable& table = ctx.kronecker_table(m, 8);
    for (long k = 1; k <= 4; ++k)
      f.expect(table.at(k, k) == diagonal_closed_form(m, k),
               "d(" + std::to_string(k) + "," + std::to_string(k) + "," +
                   std::to_string(m) + ") vs closed form");
  }
  f.expect(ctx.kronecker_table(3, 8).at(1, 1) == 3, "d(1,1,3) = 3");
  f.expect(ctx.kronecker_table(3, 8).at(2, 2) == -6, "d(2,2,3) = -6");
  return finish(6, "diagonal closed form", f, start, 60.0);
}

CriterionResult dt_integrality(Context& ctx) {
  auto start = Clock::now();
  Failures f;
  for (long m = 1; m <= 5; ++m) {
    const DTTable& table = ctx.kronecker_table(m, 8);
    for (const auto& [key, value] : table.entries)
      f.expect(is_integer(value),
               "d(" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + "," + std::to_string(m) + ")");
  }
  return finish(7, "DT invariant integrality", f, start, 120.0);
}

CriterionResult duality_integrality_sweep(Context&, int trials) {
  auto start = Clock::now();
  Failures f;
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> support_size(1, 5);
  std::uniform_int_distribution<int> index_dist(1, 8);
  std::uniform_int_distribution<int> value_dist(-3, 3);
  const int bound = 12;

  for (int trial = 0; trial < trials; ++trial) {
    std::map<long, Rational> b;
    int size = support_size(rng);
    for (int s = 0; s < size; ++s) {
      int value = value_dist(rng);
      if (value != 0) b[index_dist(rng)] = Rational(value);
    }
    for (int n : {-2, -1, 1, 2, 3}) {
      FuncEqForm form;
      form.N = n;
      form.exponents = b;
      EulerProductForm product =
          euler_factorize(funceq_solve(form, bound), n);
      for (long i = 1; i <= bound; ++i) {
        auto it = product.exponents.find(i);
        Rational a = it == product.exponents.end() ? Rational(0) : it->second;
        f.expect(is_integer(a), "trial " + std::to_string(trial) + " N=" +
                                    std::to_string(n) + " a_" +
                                    std::to_string(i) + " not integral");
        f.expect(duality_moebius(form, i) == a,
                 "trial " + std::to_string(trial) + " N=" + std::to_string(n) +
                     " moebius mismatch at " + std::to_string(i));
      }
    }
  }
  return finish(8, "euler-product duality integrality", f, start);
}

CriterionResult lagrange_identity(Context&, int trials) {
  auto start = Clock::now();
  Failures f;
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < trials; ++trial) {
    TruncatedSeries g = TruncatedSeries::one(1, 8);
    for (int d = 1; d <= 4; ++d)
      g.set_coefficient(LatticePoint{d}, Rational(coeff(rng)));
    for (long k = -3; k <= 3; ++k) {
      if (k == 0) continue;
      for (long d = 0; d <= 8; ++d) {
        LagrangeCheck check = lagrange_verify(g, k, d);
        f.expect(check.pass, "trial " + std::to_string(trial) + " k=" +
                                 std::to_string(k) + " d=" + std::to_string(d));
      }
    }
  }
  return finish(9, "lagrange inversion identity", f, start);
}

CriterionResult stable_chi_extraction(Context& ctx) {
  auto start = Clock::now();
  Failures f;
  for (long m : {2L, 3L, 4L}) {
    auto chi = kronecker_stable_chi(ctx.kronecker_table(m, 8), 1, 1);
    f.expect(chi.at(1) == m, "m=" + std::to_string(m) + " chi_1");
    for (long k = 2; k <= 3; ++k)
      f.expect(chi.at(k) == 0,
               "m=" + std::to_string(m) + " chi_" + std::to_string(k));
  }
  return finish(10, "stable-moduli chi extraction", f, start);
}

CriterionResult bracket_preservation(Context& ctx) {
  auto start = Clock::now();
  Failures f;
  const int bound = 8;
  for (long m = 1; m <= 5; ++m) {
    std::vector<std::vector<long>> skew{{0, m}, {-m, 0}};
    PoissonAutomorphism t10 = basic_t_ab(m, 1, 0, bound);
    PoissonAutomorphism t01 = basic_t_ab(m, 0, 1, bound);
    f.expect(preserves_bracket(t10, skew), "T_{1,0} m=" + std::to_string(m));
    f.expect(preserves_bracket(t01, skew), "T_{0,1} m=" + std::to_string(m));
    f.expect(preserves_bracket(compose(t10, t01), skew),
             "T_{1,0} T_{0,1} m=" + std::to_string(m));
    const DTTable& table = ctx.kronecker_table(m, bound);
    for (long a = 0; a <= bound; ++a)
      for (long b = 0; a + b <= bound; ++b) {
        if (a + b < 1 || std::gcd(a, b) != 1) continue;
        f.expect(preserves_bracket(ray_automorphism(table, a, b), skew),
                 "ray (" + std::to_string(a) + "," + std::to_string(b) +
                     ") m=" + std::to_string(m));
      }
  }
  return finish(11, "poisson bracket preservation", f, start);
}

CriterionResult congruence_and_symmetric_strata(Context&) {
  auto start = Clock::now();
  Failures f;
  for (long p : {2L, 3L, 5L, 7L})
    for (long a = -200; a <= 200; ++a)
      for (long b = 0; b <= 200; ++b) {
        CongruenceReport rep = binomial_congruence_check(a, b, p);
        if (!rep.pass())
          f.expect(false, "congruence a=" + std::to_string(a) + " b=" +
                              std::to_string(b) + " p=" + std::to_string(p));
        else
          ++f.checks;
      }

  for (long chi = -5; chi <= 5; ++chi)
    for (int n = 0; n <= 6; ++n) {
      Integer total = 0;
      for (const Partition& lam : partitions_of(n))
        total += chi_symmetric_stratum(chi, lam);
      f.expect(Rational(total) == gen_binomial(Rational(chi + n - 1), n),
               "symmetric power chi=" + std::to_string(chi) +
                   " n=" + std::to_string(n));
    }
  return finish(12, "congruence lemmas and symmetric strata", f, start);
}

std::vector<CriterionResult> run_all(Context& ctx, int threads,
                                     int duality_trials, int lagrange_trials) {
  std::vector<CriterionResult> results;
  results.push_back(catalan_pipeline(ctx));
  results.push_back(fuss_catalan_forests(ctx));
  results.push_back(oracle_equivalence(ctx, threads));
  results.push_back(trivial_stability_reduction(ctx));
  results.push_back(pentagon(ctx));
  results.push_back(diagonal_formula(ctx));
  results.push_back(dt_integrality(ctx));
  results.push_back(duality_integrality_sweep(ctx, duality_trials));
  results.push_back(lagrange_identity(ctx, lagrange_trials));
  results.push_back(stable_chi_extraction(ctx));
  results.push_back(bracket_preservation(ctx));
  results.push_back(congruence_and_symmetric_strata(ctx));
  return results;
}

}  // namespace selfcheck
}  // namespace quiverdt
