#pragma once
// Euler characteristics of non-commutative Hilbert schemes: the grafting
// functional-equation solver and the brute-force forest-counting oracle.
//
// The generating series F^n(t) = sum_d chi(Hilb_{d,n}(Q)) t^d satisfy
//   F^n = prod_i (F^i)^{n_i},     F^i = 1 + t_i prod_j (F^j)^{r_{i,j}},
// which determine every coefficient degree by degree.

#include <map>
#include <vector>

#include "quiverdt/quiver.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

/// The coupled one-vertex-framing series F^i, solved to total degree D.
/// Entry i is the series for the framing concentrated at vertex i.
std::vector<TruncatedSeries> hilb_basis(const Quiver& q, int bound);

/// F^n built multiplicatively from a precomputed basis.
TruncatedSeries hilb_series(std::span<const TruncatedSeries> basis,
                            const LatticePoint& framing);

/// F^n for the quiver q with framing n, truncated at total degree D.
TruncatedSeries hilb_series(const Quiver& q, const LatticePoint& framing,
                            int bound);

struct ForestSpec {
  Quiver quiver;
  LatticePoint framing;
  LatticePoint target_dim;
};

/// Per-vertex counts of predecessor-closed subtrees of the path trees Q_i,
/// tallied by dimension vector, for all total degrees <= budget. Computed
/// by explicit depth-bounded enumeration, not via the functional equation.
std::vector<std::map<LatticePoint, long>> forest_tree_counts(
    const Quiver& q, int budget);

/// Forest counts for one framing, assembled from per-vertex tree counts:
/// a forest is an ordered tuple of n_i subtrees of Q_i per vertex i.
std::map<LatticePoint, long> forest_counts(
    const Quiver& q, const LatticePoint& framing,
    const std::vector<std::map<LatticePoint, long>>& tree_counts,
    int budget);

/// Number of framing-forests of the exact dimension vector spec.target_dim,
/// by exhaustive enumeration. Guarded: |target_dim| must be <= guard.
long forest_oracle(const ForestSpec& spec, int guard = 8);

}  // namespace quiverdt
