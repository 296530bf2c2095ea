#include "quiverdt/hilbert.hpp"

#include <algorithm>

namespace quiverdt {

std::vector<TruncatedSeries> hilb_basis(const Quiver& q, int bound) {
  int r = q.num_vertices();
  std::vector<TruncatedSeries> f(static_cast<size_t>(r),
                                 TruncatedSeries::one(r, bound));
  // The t_i prefactor makes the system well-founded: the degree-n
  // coefficient of the right-hand side only reads coefficients of degree
  // < n, so sweep n finalizes degree n. Work at the sweep's degree cap.
  for (int sweep = 1; sweep <= bound; ++sweep) {
    std::vector<TruncatedSeries> capped;
    capped.reserve(static_cast<size_t>(r));
    for (const auto& s : f) capped.push_back(s.truncated(sweep));
    for (int i = 0; i < r; ++i) {
      TruncatedSeries prod = TruncatedSeries::one(r, sweep);
      for (int j = 0; j < r; ++j) {
        long mult = q.arrow_count(i, j);
        if (mult > 0)
          prod = mul(prod, pow_rational(capped[static_cast<size_t>(j)],
                                        Rational(mult)));
      }
      TruncatedSeries next =
          TruncatedSeries::one(r, sweep) +
          mul(TruncatedSeries::variable(r, i, sweep), prod);
      // merge the newly determined degree-sweep coefficients
      TruncatedSeries& target = f[static_cast<size_t>(i)];
      for (const auto& [d, c] : next.coefficients())
        if (d.total_degree() == sweep) target.set_coefficient(d, c);
    }
  }
  return f;
}

TruncatedSeries hilb_series(std::span<const TruncatedSeries> basis,
                            const LatticePoint& framing) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  int r = basis[0].rank();
  if (framing.rank() != r)
    throw std::invalid_argument("framing rank mismatch");
  TruncatedSeries result = TruncatedSeries::one(r, basis[0].bound());
  for (int i = 0; i < r; ++i)
    if (framing[i] > 0)
      result = mul(result, pow_rational(basis[static_cast<size_t>(i)],
                                        Rational(framing[i])));
  return result;
}

TruncatedSeries hilb_series(const Quiver& q, const LatticePoint& framing,
                            int bound) {
  if (framing.rank() != q.num_vertices())
    throw std::invalid_argument("framing rank mismatch with quiver");
  return hilb_series(hilb_basis(q, bound), framing);
}

namespace {

// Explicit enumeration of predecessor-closed subtrees of the path tree
// rooted at `root`. The tree is walked node by node: `frontier` holds the
// vertices of path-tree nodes whose parent is already included and whose
// own membership is still undecided. Each complete decision sequence is
// one subtree; its dimension vector is tallied. Depth is bounded by the
// budget since every included node consumes one unit.
struct TreeEnumerator {
  const Quiver& q;
  int budget;
  std::vector<int> frontier;
  std::vector<int> dim;
  std::map<LatticePoint, long>* tally;

  void run() {
    if (frontier.empty()) {
      (*tally)[LatticePoint(dim)] += 1;
      return;
    }
    int v = frontier.back();
    frontier.pop_back();

    // exclude the node (and with it the whole branch below)
    run();

    if (budget > 0) {
      // include the node: its children join the frontier
      --budget;
      ++dim[static_cast<size_t>(v)];
      size_t mark = frontier.size();
      for (int w = 0; w < q.num_vertices(); ++w)
        for (long k = 0; k < q.arrow_count(v, w); ++k) frontier.push_back(w);
      run();
      frontier.resize(mark);
      --dim[static_cast<size_t>(v)];
      ++budget;
    }

    frontier.push_back(v);
  }
};

}  // namespace

std::vector<std::map<LatticePoint, long>> forest_tree_counts(
    const Quiver& q, int budget) {
  if (budget < 0) throw std::invalid_argument("negative budget");
  int r = q.num_vertices();
  std::vector<std::map<LatticePoint, long>> out(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    TreeEnumerator e{q, budget, {i}, std::vector<int>(static_cast<size_t>(r), 0),
                     &out[static_cast<size_t>(i)]};
    e.run();
  }
  return out;
}

namespace {

// dense convolution grid over packed exponents, mirroring the series code
int64_t count_grid_size(int rank, int budget) {
  int64_t size = 1;
  for (int i = 0; i < rank; ++i) {
    size *= budget + 1;
    if (size > (1 << 21)) return -1;
  }
  return size;
}

}  // namespace

std::map<LatticePoint, long> forest_counts(
    const Quiver& q, const LatticePoint& framing,
    const std::vector<std::map<LatticePoint, long>>& tree_counts,
    int budget) {
  int r = q.num_vertices();
  if (framing.rank() != r)
    throw std::invalid_argument("framing rank mismatch with quiver");

  int64_t size = count_grid_size(r, budget);
  if (size > 0) {
    // dense grid over packed exponents; no digit carries can occur since
    // total degrees are capped at the budget
    int base = budget + 1;
    std::vector<int> degree_of(static_cast<size_t>(size), 0);
    for (int64_t idx = 0; idx < size; ++idx) {
      int64_t rest = idx;
      int deg = 0;
      for (int v = 0; v < r; ++v) {
        deg += static_cast<int>(rest % base);
        rest /= base;
      }
      degree_of[static_cast<size_t>(idx)] = deg;
    }

    std::vector<long> grid(static_cast<size_t>(size), 0);
    grid[0] = 1;
    struct Offset {
      size_t index;
      int degree;
      long count;
    };
    std::vector<Offset> sparse;
    for (int i = 0; i < r; ++i) {
      sparse.clear();
      for (const auto& [d, c] : tree_counts[static_cast<size_t>(i)]) {
        int64_t idx = 0;
        for (int v = r - 1; v >= 0; --v) idx = idx * base + d[v];
        sparse.push_back(Offset{static_cast<size_t>(idx), d.total_degree(), c});
      }
      for (int k = 0; k < framing[i]; ++k) {
        std::vector<long> next(static_cast<size_t>(size), 0);
        for (int64_t idx = 0; idx < size; ++idx) {
          long value = grid[static_cast<size_t>(idx)];
          if (value == 0) continue;
          int deg = degree_of[static_cast<size_t>(idx)];
          for (const Offset& o : sparse) {
            if (deg + o.degree > budget) break;
            next[static_cast<size_t>(idx) + o.index] += value * o.count;
          }
        }
        grid = std::move(next);
      }
    }

    std::map<LatticePoint, long> result;
    for (int64_t idx = 0; idx < size; ++idx) {
      if (grid[static_cast<size_t>(idx)] == 0) continue;
      std::vector<int> exps(static_cast<size_t>(r));
      int64_t rest = idx;
      for (int v = 0; v < r; ++v) {
        exps[static_cast<size_t>(v)] = static_cast<int>(rest % base);
        rest /= base;
      }
      result.emplace(LatticePoint(exps), grid[static_cast<size_t>(idx)]);
    }
    return result;
  }

  std::map<LatticePoint, long> result;
  result[LatticePoint::zero(r)] = 1;
  for (int i = 0; i < r; ++i) {
    const auto& cnt = tree_counts[static_cast<size_t>(i)];
    for (int k = 0; k < framing[i]; ++k) {
      std::map<LatticePoint, long> next;
      for (const auto& [da, ca] : result)
        for (const auto& [db, cb] : cnt) {
          if (da.total_degree() + db.total_degree() > budget) break;
          next[da + db] += ca * cb;
        }
      result = std::move(next);
    }
  }
  return result;
}

long forest_oracle(const ForestSpec& spec, int guard) {
  int size = spec.target_dim.total_degree();
  if (size > guard)
    throw std::invalid_argument(
        "forest_oracle: |target_dim| = " + std::to_string(size) +
        " exceeds the enumeration guard " + std::to_string(guard) +
        "; use hilb_series instead");
  if (spec.framing.rank() != spec.quiver.num_vertices() ||
      spec.target_dim.rank() != spec.quiver.num_vertices())
    throw std::invalid_argument("forest spec rank mismatch");
  auto trees = forest_tree_counts(spec.quiver, size);
  auto forests = forest_counts(spec.quiver, spec.framing, trees, size);
  auto it = forests.find(spec.target_dim);
  return it == forests.end() ? 0 : it->second;
}

}  // namespace quiverdt
