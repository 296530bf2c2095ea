#pragma once
// Quiver data: Euler form, slopes, Coxeter transform, local quivers.

#include <span>
#include <string>
#include <vector>

#include "quiverdt/rational.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

/// Finite quiver: ordered vertex names and an arrow-multiplicity matrix,
/// entry [k][l] = number of arrows from vertex k to vertex l.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::vector<long>> arrow_counts);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  long arrow_count(int from, int to) const {
    return arrows_[static_cast<size_t>(from)][static_cast<size_t>(to)];
  }
  const std::vector<std::vector<long>>& arrow_matrix() const {
    return arrows_;
  }

  /// No directed cycle through positive entries (self-loops count).
  bool is_acyclic() const;

  /// Single vertex with the given number of loops.
  static Quiver loop_quiver(long loops);
  /// Generalized Kronecker quiver: vertices {"i","j"}, m arrows j -> i.
  static Quiver kronecker(long m);
  /// Linear A_n quiver with arrows v1 -> v2 -> ... -> vn.
  static Quiver linear(int n);

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<long>> arrows_;
};

/// Euler form <d,e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j. The raw
/// overload accepts arbitrary integer vectors (Coxeter images may have
/// negative entries).
long euler_form(const Quiver& q, std::span<const long> d,
                std::span<const long> e);
long euler_form(const Quiver& q, const LatticePoint& d, const LatticePoint& e);

/// Skew-symmetrized form {d,e} = <d,e> - <e,d>.
long skew_form(const Quiver& q, const LatticePoint& d, const LatticePoint& e);
long skew_form_units(const Quiver& q, int i, int j);

/// Integer stability functional; defines slopes mu(d) = theta(d) / dim d.
class Stability {
 public:
  explicit Stability(std::vector<long> theta);

  int rank() const { return static_cast<int>(theta_.size()); }
  const std::vector<long>& theta() const { return theta_; }
  long value(const LatticePoint& d) const;
  /// Slope of a nonzero dimension vector, as an exact rational.
  Rational slope(const LatticePoint& d) const;

 private:
  std::vector<long> theta_;
};

/// Decomposition type: pairwise distinct nonzero dimension vectors with
/// positive multiplicities.
struct PolystableType {
  struct Summand {
    LatticePoint dim;
    long multiplicity;
  };
  std::vector<Summand> summands;
};

/// Local quiver of a polystable type: vertices indexed by the summands,
/// delta_{i,j} - <d^i, d^j> arrows from i to j, dimension vector (m_i),
/// framing rule n |-> (n . d^i)_i.
struct LocalQuiverData {
  Quiver quiver;
  LatticePoint dim_vector;
  std::vector<LatticePoint> summand_dims;

  LatticePoint framing(const LatticePoint& n) const;
};

LocalQuiverData local_quiver(const Quiver& q, const PolystableType& xi);

/// Coxeter matrix Phi with euler_form(Phi d, e) = -euler_form(e, d) for all
/// d, e. Requires an acyclic quiver. Entry [i][j] multiplies d_j into
/// (Phi d)_i.
std::vector<std::vector<long>> coxeter_phi(const Quiver& q);

/// Matrix-vector product over the integers.
std::vector<long> apply_matrix(const std::vector<std::vector<long>>& m,
                               std::span<const long> v);

}  // namespace quiverdt
