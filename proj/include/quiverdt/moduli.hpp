#pragma once
// Generating series of Euler characteristics of smooth models of quiver
// moduli, via the coupled functional equations
//
//   Q^eta_mu = prod_d (R^d)^{chi(d) eta(d)},
//   R^d = 1 + t^d R^d prod_e (R^e)^{-<d,e> chi(e)},
//
// with d, e running over the nonzero slope-mu lattice points up to the
// truncation bound, and the companion fixed-point system
//
//   S^d = prod_e (1 - t^e S^e)^{-<d,e> chi(e)},
//
// whose triangular structure lets chi be recovered from observed S data.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "quiverdt/quiver.hpp"
#include "quiverdt/series.hpp"

namespace quiverdt {

/// One slope stratum: every nonzero lattice point of slope mu up to the
/// bound (graded-lex order), with an integer chi value per point.
class SlopeStratumData {
 public:
  SlopeStratumData(Quiver quiver, Stability theta, Rational mu, int bound,
                   std::vector<LatticePoint> elements,
                   std::vector<long> chi_values);

  /// Enumerates the elements by bounded search and applies `chi` to each.
  static SlopeStratumData build(const Quiver& quiver, const Stability& theta,
                                const Rational& mu, int bound,
                                const std::function<long(const LatticePoint&)>& chi);

  const Quiver& quiver() const { return quiver_; }
  const Stability& theta() const { return theta_; }
  const Rational& mu() const { return mu_; }
  int bound() const { return bound_; }
  const std::vector<LatticePoint>& elements() const { return elements_; }
  const std::vector<long>& chi_values() const { return chi_; }

  std::optional<size_t> index_of(const LatticePoint& d) const;
  long chi(size_t index) const { return chi_[index]; }

 private:
  Quiver quiver_;
  Stability theta_;
  Rational mu_;
  int bound_;
  std::vector<LatticePoint> elements_;
  std::vector<long> chi_;
};

/// All nonzero lattice points of the given slope with total degree <= bound,
/// in graded-lex order.
std::vector<LatticePoint> slope_elements(const Quiver& quiver,
                                         const Stability& theta,
                                         const Rational& mu, int bound);

/// The component R^d of the unique solution of the coupled R-system,
/// truncated at total degree D <= data.bound(). d must be an element.
TruncatedSeries r_chi_series(const SlopeStratumData& data,
                             const LatticePoint& d, int bound);

/// Q^eta_mu = prod_d (R^d)^{chi(d) eta(d)} for an integer functional eta on
/// the vertices. For eta = n in Lambda^+ the t^d coefficient is the Euler
/// characteristic of the smooth model attached to (d, n).
TruncatedSeries smooth_model_series(const SlopeStratumData& data,
                                    std::span<const long> eta, int bound);

/// The component S^d of the unique solution of the S-system, truncated at
/// total degree D.
TruncatedSeries s_series(const SlopeStratumData& data, const LatticePoint& d,
                         int bound);

/// Recovers the chi values from observed S-series for all elements, by
/// triangular solving in increasing total degree. The observations must be
/// mutually consistent and yield integers; otherwise a ConsistencyError
/// naming the first offending element is thrown. Unobservable values
/// (elements no S-series depends on) come back as 0.
std::map<LatticePoint, long> extract_stable_chi(
    const Quiver& quiver, const Stability& theta, const Rational& mu,
    const std::map<LatticePoint, TruncatedSeries>& observed, int bound);

}  // namespace quiverdt
