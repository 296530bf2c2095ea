#include "quiverdt/quiver.hpp"

#include <algorithm>
#include <set>

namespace quiverdt {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::vector<long>> arrow_counts)
    : vertices_(std::move(vertices)), arrows_(std::move(arrow_counts)) {
  size_t n = vertices_.size();
  if (n == 0) throw std::invalid_argument("quiver needs at least one vertex");
  if (n > static_cast<size_t>(kMaxRank))
    throw std::invalid_argument("quiver has too many vertices");
  if (arrows_.size() != n)
    throw std::invalid_argument("arrow matrix must be square");
  for (const auto& row : arrows_) {
    if (row.size() != n)
      throw std::invalid_argument("arrow matrix must be square");
    for (long x : row)
      if (x < 0) throw std::invalid_argument("arrow counts must be >= 0");
  }
}

bool Quiver::is_acyclic() const {
  int n = num_vertices();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(static_cast<size_t>(n), 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    state[static_cast<size_t>(v)] = 1;
    for (int w = 0; w < n; ++w) {
      if (arrow_count(v, w) == 0) continue;
      if (state[static_cast<size_t>(w)] == 1) return false;
      if (state[static_cast<size_t>(w)] == 0 && !self(self, w)) return false;
    }
    state[static_cast<size_t>(v)] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[static_cast<size_t>(v)] == 0 && !dfs(dfs, v)) return false;
  return true;
}

Quiver Quiver::loop_quiver(long loops) {
  return Quiver({"v"}, {{loops}});
}

Quiver Quiver::kronecker(long m) {
  return Quiver({"i", "j"}, {{0, 0}, {m, 0}});
}

Quiver Quiver::linear(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<long>> arrows(static_cast<size_t>(n),
                                        std::vector<long>(static_cast<size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    names.push_back("v" + std::to_string(v + 1));
    if (v + 1 < n) arrows[static_cast<size_t>(v)][static_cast<size_t>(v + 1)] = 1;
  }
  return Quiver(std::move(names), std::move(arrows));
}

long euler_form(const Quiver& q, std::span<const long> d,
                std::span<const long> e) {
  size_t n = static_cast<size_t>(q.num_vertices());
  if (d.size() != n || e.size() != n)
    throw std::invalid_argument("euler_form: rank mismatch with quiver");
  long value = 0;
  for (size_t i = 0; i < n; ++i) value += d[i] * e[i];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      value -= q.arrow_count(static_cast<int>(i), static_cast<int>(j)) * d[i] * e[j];
  return value;
}

long euler_form(const Quiver& q, const LatticePoint& d, const LatticePoint& e) {
  std::vector<long> dv(d.rank()), ev(e.rank());
  for (int i = 0; i < d.rank(); ++i) dv[static_cast<size_t>(i)] = d[i];
  for (int i = 0; i < e.rank(); ++i) ev[static_cast<size_t>(i)] = e[i];
  return euler_form(q, dv, ev);
}

long skew_form(const Quiver& q, const LatticePoint& d, const LatticePoint& e) {
  return euler_form(q, d, e) - euler_form(q, e, d);
}

long skew_form_units(const Quiver& q, int i, int j) {
  int n = q.num_vertices();
  return skew_form(q, LatticePoint::unit(n, i), LatticePoint::unit(n, j));
}

Stability::Stability(std::vector<long> theta) : theta_(std::move(theta)) {
  if (theta_.empty()) throw std::invalid_argument("empty stability");
}

long Stability::value(const LatticePoint& d) const {
  if (d.rank() != rank())
    throw std::invalid_argument("stability rank mismatch");
  long v = 0;
  for (int i = 0; i < rank(); ++i) v += theta_[static_cast<size_t>(i)] * d[i];
  return v;
}

Rational Stability::slope(const LatticePoint& d) const {
  if (d.is_zero())
    throw std::invalid_argument("slope undefined for the zero vector");
  return make_rational(value(d), d.total_degree());
}

LatticePoint LocalQuiverData::framing(const LatticePoint& n) const {
  std::vector<int> f;
  f.reserve(summand_dims.size());
  for (const auto& d : summand_dims) {
    if (d.rank() != n.rank())
      throw std::invalid_argument("framing rank mismatch");
    long dot = 0;
    for (int i = 0; i < n.rank(); ++i) dot += static_cast<long>(n[i]) * d[i];
    f.push_back(static_cast<int>(dot));
  }
  return LatticePoint(f);
}

LocalQuiverData local_quiver(const Quiver& q, const PolystableType& xi) {
  size_t s = xi.summands.size();
  if (s == 0) throw std::invalid_argument("empty polystable type");
  for (size_t i = 0; i < s; ++i) {
    if (xi.summands[i].dim.is_zero())
      throw std::invalid_argument("polystable summands must be nonzero");
    if (xi.summands[i].multiplicity < 1)
      throw std::invalid_argument("polystable multiplicities must be >= 1");
    for (size_t j = i + 1; j < s; ++j)
      if (xi.summands[i].dim == xi.summands[j].dim)
        throw std::invalid_argument("polystable summands must be distinct");
  }

  std::vector<std::vector<long>> arrows(s, std::vector<long>(s, 0));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      long delta = i == j ? 1 : 0;
      long count = delta - euler_form(q, xi.summands[i].dim, xi.summands[j].dim);
      if (count < 0)
        throw std::invalid_argument(
            "local quiver has negative arrow count between summands " +
            std::to_string(i) + " and " + std::to_string(j));
      arrows[i][j] = count;
    }

  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<LatticePoint> summand_dims;
  for (size_t i = 0; i < s; ++i) {
    names.push_back("s" + std::to_string(i + 1));
    dims.push_back(static_cast<int>(xi.summands[i].multiplicity));
    summand_dims.push_back(xi.summands[i].dim);
  }
  return LocalQuiverData{Quiver(std::move(names), std::move(arrows)),
                         LatticePoint(dims), std::move(summand_dims)};
}

namespace {

// Exact inverse of an integer matrix with determinant +-1, via rational
// Gauss-Jordan. Throws if the inverse is not integral.
std::vector<std::vector<long>> unimodular_inverse(
    const std::vector<std::vector<long>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix");
    std::swap(a[pivot], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (size_t j = col; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!is_integer(a[i][n + j]))
        throw ConsistencyError("matrix inverse is not integral");
      out[i][j] = static_cast<long>(a[i][n + j].get_num().get_si());
    }
  return out;
}

}  // namespace

std::vector<std::vector<long>> coxeter_phi(const Quiver& q) {
  if (!q.is_acyclic())
    throw std::invalid_argument("coxeter_phi requires an acyclic quiver");
  size_t n = static_cast<size_t>(q.num_vertices());
  // Euler matrix E with <d,e> = d^T E e
  std::vector<std::vector<long>> euler(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      euler[i][j] = (i == j ? 1 : 0) -
                    q.arrow_count(static_cast<int>(i), static_cast<int>(j));
  // defining identity <Phi d, e> = -<e, d> gives Phi = -(E^{-1})^T E
  auto inv = unimodular_inverse(euler);
  std::vector<std::vector<long>> phi(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long acc = 0;
      for (size_t k = 0; k < n; ++k) acc += inv[k][i] * euler[k][j];
      phi[i][j] = -acc;
    }
  return phi;
}

std::vector<long> apply_matrix(const std::vector<std::vector<long>>& m,
                               std::span<const long> v) {
  size_t n = m.size();
  if (v.size() != n) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<long> out(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace quiverdt
