#include "quiverdt/wallcrossing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverdt/arith.hpp"

namespace quiverdt {

PoissonAutomorphism::PoissonAutomorphism(
    std::vector<TruncatedSeries> multipliers)
    : multipliers_(std::move(multipliers)) {
  if (multipliers_.empty())
    throw std::invalid_argument("automorphism needs at least one multiplier");
  rank_ = multipliers_[0].rank();
  bound_ = multipliers_[0].bound();
  if (static_cast<size_t>(rank_) != multipliers_.size())
    throw std::invalid_argument(
        "automorphism needs exactly one multiplier per variable");
  for (const auto& u : multipliers_) {
    if (u.rank() != rank_ || u.bound() != bound_)
      throw std::invalid_argument("multiplier rank/bound mismatch");
    if (!u.has_unit_constant_term())
      throw std::invalid_argument("multipliers must have constant term 1");
  }
}

PoissonAutomorphism PoissonAutomorphism::identity(int rank, int bound) {
  return PoissonAutomorphism(std::vector<TruncatedSeries>(
      static_cast<size_t>(rank), TruncatedSeries::one(rank, bound)));
}

TruncatedSeries PoissonAutomorphism::image(int i) const {
  return mul(TruncatedSeries::variable(rank_, i, bound_), multiplier(i));
}

TruncatedSeries PoissonAutomorphism::apply(const TruncatedSeries& s) const {
  std::vector<TruncatedSeries> args;
  args.reserve(static_cast<size_t>(rank_));
  for (int i = 0; i < rank_; ++i) args.push_back(image(i));
  return substitute(s, args);
}

bool operator==(const PoissonAutomorphism& a, const PoissonAutomorphism& b) {
  if (a.rank_ != b.rank_) return false;
  for (int i = 0; i < a.rank_; ++i)
    if (!(a.multiplier(i) == b.multiplier(i))) return false;
  return true;
}

TruncatedSeries poisson_bracket(const TruncatedSeries& a,
                                const TruncatedSeries& b,
                                const std::vector<std::vector<long>>& skew,
                                int bound) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("poisson_bracket: rank mismatch");
  size_t n = static_cast<size_t>(a.rank());
  if (skew.size() != n)
    throw std::invalid_argument("poisson_bracket: skew matrix size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (skew[i].size() != n)
      throw std::invalid_argument("poisson_bracket: skew matrix not square");
    for (size_t j = 0; j < n; ++j)
      if (skew[i][j] != -skew[j][i])
        throw std::invalid_argument(
            "poisson_bracket: matrix must be antisymmetric");
  }
  TruncatedSeries result(a.rank(), bound);
  for (const auto& [d, cd] : a.coefficients()) {
    if (d.total_degree() > bound) break;
    int room = bound - d.total_degree();
    for (const auto& [e, ce] : b.coefficients()) {
      if (e.total_degree() > room) break;
      long pairing = 0;
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          pairing += skew[k][l] * d[static_cast<int>(k)] * e[static_cast<int>(l)];
      if (pairing == 0) continue;
      LatticePoint sum = d + e;
      result.set_coefficient(
          sum, result.coefficient(sum) + Rational(pairing) * cd * ce);
    }
  }
  return result;
}

bool preserves_bracket(const PoissonAutomorphism& t,
                       const std::vector<std::vector<long>>& skew) {
  int n = t.rank();
  for (int i = 0; i < n; ++i) {
    TruncatedSeries xi = t.image(i);
    for (int j = i + 1; j < n; ++j) {
      TruncatedSeries xj = t.image(j);
      TruncatedSeries lhs = poisson_bracket(xi, xj, skew, t.bound());
      // T({x_i,x_j}) = skew[i][j] T(x_i) T(x_j)
      TruncatedSeries rhs =
          mul(xi, xj) *
          Rational(skew[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

PoissonAutomorphism t_i_automorphism(const Quiver& q, int vertex, int bound) {
  int n = q.num_vertices();
  if (vertex < 0 || vertex >= n)
    throw std::invalid_argument("vertex index out of range");
  TruncatedSeries one_plus_xi =
      TruncatedSeries::one(n, bound) + TruncatedSeries::variable(n, vertex, bound);
  std::vector<TruncatedSeries> multipliers;
  multipliers.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    long exp = skew_form_units(q, vertex, j);
    multipliers.push_back(pow_rational(one_plus_xi, Rational(exp)));
  }
  return PoissonAutomorphism(std::move(multipliers));
}

PoissonAutomorphism t_abF_automorphism(long m, long a, long b,
                                       const TruncatedSeries& f, int bound) {
  if (a < 0 || b < 0 || a + b < 1)
    throw std::invalid_argument("t_abF: need a,b >= 0 with a+b >= 1");
  if (f.rank() != 1 || !f.has_unit_constant_term())
    throw std::invalid_argument("t_abF: F must be a univariate unit series");
  // t -> x^a y^b raises degree by a+b per power of t, so coefficients of F
  // beyond bound/(a+b) cannot contribute
  int needed = bound / static_cast<int>(a + b);
  if (f.bound() < needed)
    throw std::invalid_argument(
        "t_abF: F is truncated too low for the requested bound");
  std::vector<int> exps{static_cast<int>(a), static_cast<int>(b)};
  std::array<TruncatedSeries, 1> arg{
      TruncatedSeries::monomial(LatticePoint(exps), bound)};
  TruncatedSeries f_at_ray = substitute(f.rebounded(bound), arg);
  std::vector<TruncatedSeries> multipliers;
  multipliers.push_back(pow_rational(f_at_ray, Rational(-m * b)));
  multipliers.push_back(pow_rational(f_at_ray, Rational(m * a)));
  return PoissonAutomorphism(std::move(multipliers));
}

PoissonAutomorphism basic_t_ab(long m, long a, long b, int bound) {
  Rational sign = (m * a * b) % 2 == 0 ? Rational(1) : Rational(-1);
  TruncatedSeries f = TruncatedSeries::one(1, bound) -
                      TruncatedSeries::monomial(LatticePoint{1}, bound, sign);
  return t_abF_automorphism(m, a, b, f, bound);
}

PoissonAutomorphism compose(const PoissonAutomorphism& s,
                            const PoissonAutomorphism& t) {
  if (s.rank() != t.rank() || s.bound() != t.bound())
    throw std::invalid_argument("compose: rank/bound mismatch");
  // (S.T)(x_i) = S(x_i u^T_i(x)) = x_i u^S_i(x) u^T_i(S(x))
  std::vector<TruncatedSeries> s_images;
  s_images.reserve(static_cast<size_t>(s.rank()));
  for (int i = 0; i < s.rank(); ++i) s_images.push_back(s.image(i));
  std::vector<TruncatedSeries> multipliers;
  multipliers.reserve(static_cast<size_t>(s.rank()));
  for (int i = 0; i < s.rank(); ++i)
    multipliers.push_back(
        mul(s.multiplier(i), substitute(t.multiplier(i), s_images)));
  return PoissonAutomorphism(std::move(multipliers));
}

const Rational& DTTable::at(long a, long b) const {
  auto it = entries.find({a, b});
  if (it == entries.end())
    throw std::invalid_argument("DT table has no entry (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
  return it->second;
}

bool DTTable::all_integral() const {
  for (const auto& [key, value] : entries)
    if (!is_integer(value)) return false;
  return true;
}

namespace {

struct Ray {
  long a;
  long b;
  Rational slope;  // b/(a+b)
};

std::vector<Ray> primitive_rays(int bound) {
  std::vector<Ray> rays;
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= bound - a; ++b) {
      if (a + b < 1) continue;
      if (std::gcd(a, b) != 1) continue;
      rays.push_back(Ray{a, b, make_rational(b, a + b)});
    }
  // descending slope; rays have pairwise distinct slopes
  std::sort(rays.begin(), rays.end(),
            [](const Ray& x, const Ray& y) { return x.slope > y.slope; });
  return rays;
}

TruncatedSeries ray_profile(const DTTable& table, long a, long b) {
  // F(t) = prod_k (1 - ((-1)^{mab} t)^k)^{k d(ka,kb)}
  int fbound = table.bound / static_cast<int>(a + b);
  Rational sign = (table.m * a * b) % 2 == 0 ? Rational(1) : Rational(-1);
  TruncatedSeries f = TruncatedSeries::one(1, fbound);
  for (long k = 1; k <= fbound; ++k) {
    auto it = table.entries.find({k * a, k * b});
    if (it == table.entries.end() || it->second == 0) continue;
    TruncatedSeries factor =
        TruncatedSeries::one(1, fbound) -
        TruncatedSeries::monomial(LatticePoint{static_cast<int>(k)}, fbound,
                                  rational_pow(sign, k));
    f = mul(f, pow_rational(factor, Rational(k) * it->second));
  }
  return f;
}

PoissonAutomorphism ordered_ray_product(const DTTable& table,
                                        const std::vector<Ray>& rays) {
  PoissonAutomorphism product = PoissonAutomorphism::identity(2, table.bound);
  for (const Ray& ray : rays)
    product = compose(product, t_abF_automorphism(
                                   table.m, ray.a, ray.b,
                                   ray_profile(table, ray.a, ray.b),
                                   table.bound));
  return product;
}

}  // namespace

PoissonAutomorphism ray_automorphism(const DTTable& table, long a, long b) {
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("ray_automorphism: (a,b) must be coprime");
  return t_abF_automorphism(table.m, a, b, ray_profile(table, a, b),
                            table.bound);
}

DTTable kronecker_factorize(long m, int bound) {
  if (m < 1) throw std::invalid_argument("kronecker_factorize: m must be >= 1");
  DTTable table;
  table.m = m;
  table.bound = bound;
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b + a <= bound; ++b)
      if (a + b >= 1) table.entries[{a, b}] = Rational(0);

  PoissonAutomorphism lhs =
      compose(basic_t_ab(m, 1, 0, bound), basic_t_ab(m, 0, 1, bound));
  std::vector<Ray> rays = primitive_rays(bound);

  // Level-by-level peeling: with every d at total degree n still zero, the
  // degree-n multiplier mismatch is linear in those unknowns, with
  // coefficient m b0 g eps^g on the x image and -m a0 g eps^g on the y
  // image (for (a,b) = g (a0,b0), eps = (-1)^{m a0 b0}).
  for (int level = 1; level <= bound; ++level) {
    PoissonAutomorphism product = ordered_ray_product(table, rays);
    for (long a = 0; a <= level; ++a) {
      long b = level - a;
      if (a + b < 1) continue;
      long g = std::gcd(a, b);
      long a0 = a / g;
      long b0 = b / g;
      Rational eps_g = (m * a0 * b0 * g) % 2 == 0 ? Rational(1) : Rational(-1);
      std::vector<int> exps{static_cast<int>(a), static_cast<int>(b)};
      LatticePoint mono(exps);

      std::optional<Rational> from_x;
      std::optional<Rational> from_y;
      if (b0 != 0) {
        Rational delta = lhs.multiplier(0).coefficient(mono) -
                         product.multiplier(0).coefficient(mono);
        from_x = delta / (Rational(m * b0 * g) * eps_g);
      }
      if (a0 != 0) {
        Rational delta = lhs.multiplier(1).coefficient(mono) -
                         product.multiplier(1).coefficient(mono);
        from_y = delta / (Rational(-m * a0 * g) * eps_g);
      }
      if (from_x && from_y && *from_x != *from_y) {
        std::ostringstream os;
        os << "kronecker_factorize: x- and y-image solves disagree at (" << a
           << "," << b << "): " << rational_to_string(*from_x) << " vs "
           << rational_to_string(*from_y);
        throw ConsistencyError(os.str());
      }
      table.entries[{a, b}] = from_x ? *from_x : *from_y;
    }
  }

  if (!(ordered_ray_product(table, rays) == lhs))
    throw ConsistencyError(
        "kronecker_factorize: factorization does not reproduce the left-hand "
        "side");
  return table;
}

Rational diagonal_closed_form(long m, long k) {
  if (m <= 2)
    throw std::invalid_argument(
        "diagonal_closed_form requires m >= 3 (the formula divides by m-2)");
  if (k < 1) throw std::invalid_argument("diagonal_closed_form: k must be >= 1");
  Rational total(0);
  for (long i = 1; i <= k; ++i) {
    if (k % i != 0) continue;
    int mu = moebius(k / i);
    if (mu == 0) continue;
    Rational sign = (m * i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    Integer binom = integer_binomial(Integer((m - 1) * (m - 1) * i - 1),
                                     static_cast<unsigned long>(i));
    total += Rational(mu) * sign * Rational(binom);
  }
  total /= Rational(m - 2);
  total /= Rational(k) * k;
  return total;
}

std::map<long, Integer> kronecker_stable_chi(const DTTable& table, long a,
                                             long b) {
  if (std::gcd(a, b) != 1)
    throw std::invalid_argument("kronecker_stable_chi: (a,b) must be coprime");
  long m = table.m;
  long n_param = m * a * b - a * a - b * b;
  int kmax = table.bound / static_cast<int>(a + b);

  // G(t) = prod_k (1 - ((-1)^N t)^k)^{k d(ka,kb)}, one variable per ray step
  TruncatedSeries g = TruncatedSeries::one(1, kmax);
  for (long k = 1; k <= kmax; ++k) {
    const Rational& dk = table.at(k * a, k * b);
    if (dk == 0) continue;
    if (!is_integer(dk))
      throw ConsistencyError(
          "kronecker_stable_chi: non-integral DT invariant upstream");
    Rational sign = (n_param * k) % 2 == 0 ? Rational(1) : Rational(-1);
    TruncatedSeries factor =
        TruncatedSeries::one(1, kmax) -
        TruncatedSeries::monomial(LatticePoint{static_cast<int>(k)}, kmax,
                                  sign);
    g = mul(g, pow_rational(factor, Rational(k) * dk));
  }

  std::map<long, Integer> chi;
  if (n_param == 0) {
    // the functional equation has no self-reference: the product form
    // identifies chi_k = -d(ka, kb) directly
    for (long k = 1; k <= kmax; ++k) {
      const Rational& dk = table.at(k * a, k * b);
      if (!is_integer(dk))
        throw ConsistencyError(
            "kronecker_stable_chi: non-integral DT invariant upstream");
      chi[k] = -dk.get_num();
    }
    return chi;
  }

  FuncEqForm form = funceq_extract(g, static_cast<int>(n_param));
  for (long k = 1; k <= kmax; ++k) {
    auto it = form.exponents.find(k);
    Rational bk = it == form.exponents.end() ? Rational(0) : it->second;
    if (!is_integer(bk))
      throw ConsistencyError(
          "kronecker_stable_chi: non-integral extraction at index " +
          std::to_string(k));
    chi[k] = -bk.get_num();
  }
  return chi;
}

std::map<long, Integer> kronecker_stable_chi(long m, long a, long b,
                                             int bound) {
  return kronecker_stable_chi(kronecker_factorize(m, bound), a, b);
}

namespace {

// admissible vertex order for the left-hand side: along every arrow the
// index decreases, so sinks come first
std::vector<int> admissible_order(const Quiver& q) {
  int n = q.num_vertices();
  std::vector<int> order;
  std::vector<char> placed(static_cast<size_t>(n), 0);
  while (static_cast<int>(order.size()) < n) {
    bool progress = false;
    for (int v = 0; v < n && !progress; ++v) {
      if (placed[static_cast<size_t>(v)]) continue;
      bool ready = true;  // all arrow targets already placed
      for (int w = 0; w < n; ++w)
        if (q.arrow_count(v, w) > 0 && !placed[static_cast<size_t>(w)] && w != v)
          ready = false;
      if (q.arrow_count(v, v) > 0) ready = false;
      if (ready) {
        order.push_back(v);
        placed[static_cast<size_t>(v)] = 1;
        progress = true;
      }
    }
    if (!progress)
      throw std::invalid_argument("quiver_factorize requires an acyclic quiver");
  }
  return order;
}

// exact rational solve of M q = rhs with free variables set to zero;
// nullopt when inconsistent
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[row]);
    std::swap(rhs[pr], rhs[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rational> solution(cols, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r)
    solution[pivot_col[r]] = rhs[r];
  return solution;
}

}  // namespace

PoissonAutomorphism slope_automorphism(const Quiver& q,
                                       const SlopeFamily& family, int bound) {
  int n = q.num_vertices();
  std::vector<TruncatedSeries> multipliers;
  multipliers.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    TruncatedSeries u = TruncatedSeries::one(n, bound);
    for (int i = 0; i < n; ++i) {
      long exp = skew_form_units(q, i, j);
      if (exp != 0)
        u = mul(u, pow_rational(family.q_series[static_cast<size_t>(i)],
                                Rational(exp)));
    }
    multipliers.push_back(std::move(u));
  }
  return PoissonAutomorphism(std::move(multipliers));
}

std::vector<SlopeFamily> quiver_factorize(const Quiver& q,
                                          const Stability& theta, int bound) {
  int n = q.num_vertices();
  if (theta.rank() != n)
    throw std::invalid_argument("stability rank mismatch with quiver");

  std::vector<int> order = admissible_order(q);
  PoissonAutomorphism lhs = PoissonAutomorphism::identity(n, bound);
  for (int v : order) lhs = compose(lhs, t_i_automorphism(q, v, bound));

  // realized slopes, descending
  std::vector<std::pair<Rational, std::vector<LatticePoint>>> slopes;
  {
    std::map<Rational, std::vector<LatticePoint>, std::greater<Rational>> by_slope;
    std::vector<int> current(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int index, int used) -> void {
      if (index == n) {
        LatticePoint d(current);
        if (!d.is_zero()) by_slope[theta.slope(d)].push_back(d);
        return;
      }
      for (int v = 0; v + used <= bound; ++v) {
        current[static_cast<size_t>(index)] = v;
        self(self, index + 1, used + v);
      }
      current[static_cast<size_t>(index)] = 0;
    };
    rec(rec, 0, 0);
    for (auto& [mu, points] : by_slope) {
      std::sort(points.begin(), points.end());
      slopes.emplace_back(mu, std::move(points));
    }
  }

  std::vector<SlopeFamily> families;
  for (const auto& [mu, points] : slopes)
    families.push_back(SlopeFamily{
        mu, std::vector<TruncatedSeries>(static_cast<size_t>(n),
                                         TruncatedSeries::one(n, bound))});

  std::vector<std::vector<Rational>> skew(
      static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      skew[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          Rational(skew_form_units(q, i, j));

  auto full_product = [&]() {
    PoissonAutomorphism product = PoissonAutomorphism::identity(n, bound);
    for (const auto& family : families)
      product = compose(product, slope_automorphism(q, family, bound));
    return product;
  };

  // peel by total degree: the degree-n coefficient q_i of each Q^i_mu at a
  // monomial d of slope mu enters the multiplier u_j linearly with matrix
  // {i,j}; distinct monomials decouple
  for (int level = 1; level <= bound; ++level) {
    PoissonAutomorphism product = full_product();
    for (size_t s = 0; s < slopes.size(); ++s) {
      for (const LatticePoint& d : slopes[s].second) {
        if (d.total_degree() != level) continue;
        std::vector<Rational> delta(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
          delta[static_cast<size_t>(j)] =
              lhs.multiplier(j).coefficient(d) -
              product.multiplier(j).coefficient(d);
        auto solution = solve_linear(skew, delta);
        if (!solution) {
          std::ostringstream os;
          os << "quiver_factorize: inconsistent solve at monomial (";
          for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << d[i];
          os << ")";
          throw ConsistencyError(os.str());
        }
        for (int i = 0; i < n; ++i) {
          const Rational& qi = (*solution)[static_cast<size_t>(i)];
          if (qi != 0)
            families[s].q_series[static_cast<size_t>(i)].set_coefficient(d, qi);
        }
      }
    }
  }

  if (!(full_product() == lhs))
    throw ConsistencyError(
        "quiver_factorize: factorization does not reproduce the vertex "
        "composition");
  return families;
}

}  // namespace quiverdt
