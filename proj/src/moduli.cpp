#include "quiverdt/moduli.hpp"

#include <algorithm>
#include <sstream>

namespace quiverdt {

namespace {

std::string point_to_string(const LatticePoint& d) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

void enumerate_points(int rank, int bound,
                      const std::function<void(const LatticePoint&)>& visit) {
  std::vector<int> current(static_cast<size_t>(rank), 0);
  auto rec = [&](auto&& self, int index, int used) -> void {
    if (index == rank) {
      visit(LatticePoint(current));
      return;
    }
    for (int v = 0; v + used <= bound; ++v) {
      current[static_cast<size_t>(index)] = v;
      self(self, index + 1, used + v);
    }
    current[static_cast<size_t>(index)] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<LatticePoint> slope_elements(const Quiver& quiver,
                                         const Stability& theta,
                                         const Rational& mu, int bound) {
  if (theta.rank() != quiver.num_vertices())
    throw std::invalid_argument("stability rank mismatch with quiver");
  std::vector<LatticePoint> out;
  enumerate_points(quiver.num_vertices(), bound, [&](const LatticePoint& d) {
    if (!d.is_zero() && theta.slope(d) == mu) out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

SlopeStratumData::SlopeStratumData(Quiver quiver, Stability theta, Rational mu,
                                   int bound,
                                   std::vector<LatticePoint> elements,
                                   std::vector<long> chi_values)
    : quiver_(std::move(quiver)),
      theta_(std::move(theta)),
      mu_(std::move(mu)),
      bound_(bound),
      elements_(std::move(elements)),
      chi_(std::move(chi_values)) {
  if (elements_.size() != chi_.size())
    throw std::invalid_argument("one chi value per element required");
  auto expected = slope_elements(quiver_, theta_, mu_, bound_);
  if (expected != elements_)
    throw std::invalid_argument(
        "element list must contain every slope-mu point up to the bound, in "
        "graded-lex order");
}

SlopeStratumData SlopeStratumData::build(
    const Quiver& quiver, const Stability& theta, const Rational& mu,
    int bound, const std::function<long(const LatticePoint&)>& chi) {
  auto elements = slope_elements(quiver, theta, mu, bound);
  std::vector<long> values;
  values.reserve(elements.size());
  for (const auto& d : elements) values.push_back(chi(d));
  return SlopeStratumData(quiver, theta, mu, bound, std::move(elements),
                          std::move(values));
}

std::optional<size_t> SlopeStratumData::index_of(const LatticePoint& d) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), d);
  if (it == elements_.end() || *it != d) return std::nullopt;
  return static_cast<size_t>(it - elements_.begin());
}

namespace {

// Solves the coupled R-system for the listed element indices. Equations
// only reference elements with nonzero chi, so everything else decouples
// and is solved on demand; the result is bit-identical to the full solve.
std::map<size_t, TruncatedSeries> solve_r_system(
    const SlopeStratumData& data, const std::vector<size_t>& wanted,
    int bound) {
  const auto& elements = data.elements();
  std::vector<size_t> active;
  for (size_t i = 0; i < elements.size(); ++i)
    if (data.chi(i) != 0) active.push_back(i);
  for (size_t w : wanted)
    if (std::find(active.begin(), active.end(), w) == active.end())
      active.push_back(w);

  int rank = data.quiver().num_vertices();
  std::map<size_t, TruncatedSeries> r;
  for (size_t i : active) r.emplace(i, TruncatedSeries::one(rank, bound));

  // cache of the pairwise Euler form exponents -<d,e> chi(e)
  std::map<std::pair<size_t, size_t>, long> exponent;
  for (size_t i : active)
    for (size_t j : active) {
      if (data.chi(j) == 0) continue;
      exponent[{i, j}] =
          -euler_form(data.quiver(), elements[i], elements[j]) * data.chi(j);
    }

  // The t^d prefactor makes each sweep finalize one more total degree.
  for (int sweep = 1; sweep <= bound; ++sweep) {
    for (size_t i : active) {
      TruncatedSeries prod = TruncatedSeries::one(rank, bound);
      for (size_t j : active) {
        if (data.chi(j) == 0) continue;
        long e = exponent[{i, j}];
        if (e != 0) prod = mul(prod, pow_rational(r.at(j), Rational(e)));
      }
      TruncatedSeries rhs =
          TruncatedSeries::one(rank, bound) +
          mul(TruncatedSeries::monomial(elements[i], bound), mul(r.at(i), prod));
      r.at(i) = rhs;
    }
  }
  return r;
}

}  // namespace

TruncatedSeries r_chi_series(const SlopeStratumData& data,
                             const LatticePoint& d, int bound) {
  if (bound > data.bound())
    throw std::invalid_argument("bound exceeds the stratum data bound");
  auto idx = data.index_of(d);
  if (!idx)
    throw std::invalid_argument("r_chi_series: " + point_to_string(d) +
                                " is not a slope-mu element of the data");
  auto solved = solve_r_system(data, {*idx}, bound);
  return solved.at(*idx);
}

TruncatedSeries smooth_model_series(const SlopeStratumData& data,
                                    std::span<const long> eta, int bound) {
  if (static_cast<int>(eta.size()) != data.quiver().num_vertices())
    throw std::invalid_argument("eta must assign one integer per vertex");
  if (bound > data.bound())
    throw std::invalid_argument("bound exceeds the stratum data bound");
  int rank = data.quiver().num_vertices();
  const auto& elements = data.elements();

  auto solved = solve_r_system(data, {}, bound);
  TruncatedSeries result = TruncatedSeries::one(rank, bound);
  for (size_t i = 0; i < elements.size(); ++i) {
    if (data.chi(i) == 0) continue;
    long eta_d = 0;
    for (int v = 0; v < rank; ++v)
      eta_d += eta[static_cast<size_t>(v)] * elements[i][v];
    long exp = data.chi(i) * eta_d;
    if (exp != 0)
      result = mul(result, pow_rational(solved.at(i), Rational(exp)));
  }
  return result;
}

namespace {

std::map<size_t, TruncatedSeries> solve_s_system(
    const SlopeStratumData& data, const std::vector<size_t>& wanted,
    int bound) {
  const auto& elements = data.elements();
  std::vector<size_t> active;
  for (size_t i = 0; i < elements.size(); ++i)
    if (data.chi(i) != 0) active.push_back(i);
  for (size_t w : wanted)
    if (std::find(active.begin(), active.end(), w) == active.end())
      active.push_back(w);

  int rank = data.quiver().num_vertices();
  std::map<size_t, TruncatedSeries> s;
  for (size_t i : active) s.emplace(i, TruncatedSeries::one(rank, bound));

  for (int sweep = 1; sweep <= bound; ++sweep) {
    std::map<size_t, TruncatedSeries> next;
    for (size_t i : active) {
      TruncatedSeries rhs = TruncatedSeries::one(rank, bound);
      for (size_t j : active) {
        if (data.chi(j) == 0) continue;
        long exp = -euler_form(data.quiver(), elements[i], elements[j]) *
                   data.chi(j);
        if (exp == 0) continue;
        TruncatedSeries factor =
            TruncatedSeries::one(rank, bound) -
            mul(TruncatedSeries::monomial(elements[j], bound), s.at(j));
        rhs = mul(rhs, pow_rational(factor, Rational(exp)));
      }
      next.emplace(i, std::move(rhs));
    }
    s = std::move(next);
  }
  return s;
}

}  // namespace

TruncatedSeries s_series(const SlopeStratumData& data, const LatticePoint& d,
                         int bound) {
  if (bound > data.bound())
    throw std::invalid_argument("bound exceeds the stratum data bound");
  auto idx = data.index_of(d);
  if (!idx)
    throw std::invalid_argument("s_series: " + point_to_string(d) +
                                " is not a slope-mu element of the data");
  auto solved = solve_s_system(data, {*idx}, bound);
  return solved.at(*idx);
}

std::map<LatticePoint, long> extract_stable_chi(
    const Quiver& quiver, const Stability& theta, const Rational& mu,
    const std::map<LatticePoint, TruncatedSeries>& observed, int bound) {
  auto elements = slope_elements(quiver, theta, mu, bound);
  int rank = quiver.num_vertices();
  for (const auto& d : elements)
    if (!observed.count(d))
      throw std::invalid_argument("extract_stable_chi: missing observation for " +
                                  point_to_string(d));

  std::vector<long> chi(elements.size(), 0);
  // Triangular solve: with chi known below degree n, the t^{e} coefficient
  // of the equation for a pivot d* with <d*, e> != 0 is affine-linear in
  // chi(e); other degree-n unknowns cannot reach the monomial t^{e}.
  for (size_t k = 0; k < elements.size(); ++k) {
    const LatticePoint& e = elements[k];
    // pivot: prefer e itself, else the first element pairing with it
    std::optional<size_t> pivot;
    if (euler_form(quiver, e, e) != 0) {
      pivot = k;
    } else {
      for (size_t i = 0; i < elements.size(); ++i)
        if (euler_form(quiver, elements[i], e) != 0) {
          pivot = i;
          break;
        }
    }
    if (!pivot) continue;  // chi(e) influences nothing; keep 0

    long pairing = euler_form(quiver, elements[*pivot], e);
    // right-hand side for the pivot with chi(e) = 0, using observed S data
    TruncatedSeries rhs = TruncatedSeries::one(rank, bound);
    for (size_t j = 0; j < elements.size(); ++j) {
      if (j == k || chi[j] == 0) continue;
      long exp = -euler_form(quiver, elements[*pivot], elements[j]) * chi[j];
      if (exp == 0) continue;
      TruncatedSeries factor =
          TruncatedSeries::one(rank, bound) -
          mul(TruncatedSeries::monomial(elements[j], bound),
              observed.at(elements[j]));
      rhs = mul(rhs, pow_rational(factor, Rational(exp)));
    }
    Rational target = observed.at(elements[*pivot]).coefficient(e);
    Rational value = (target - rhs.coefficient(e)) / Rational(pairing);
    if (!is_integer(value) || !value.get_num().fits_slong_p())
      throw ConsistencyError("extract_stable_chi: non-integral solve at " +
                             point_to_string(e) + " (got " +
                             rational_to_string(value) + ")");
    chi[k] = value.get_num().get_si();
  }

  // full verification pass: the recovered chi must reproduce the data
  SlopeStratumData data(quiver, theta, mu, bound, elements,
                        std::vector<long>(chi.begin(), chi.end()));
  for (size_t k = 0; k < elements.size(); ++k) {
    TruncatedSeries recomputed = s_series(data, elements[k], bound);
    if (!(recomputed == observed.at(elements[k])))
      throw ConsistencyError(
          "extract_stable_chi: observations are inconsistent at element " +
          point_to_string(elements[k]));
  }

  std::map<LatticePoint, long> out;
  for (size_t k = 0; k < elements.size(); ++k) out[elements[k]] = chi[k];
  return out;
}

}  // namespace quiverdt
