#include "quiverdt/series.hpp"

#include <algorithm>
#include <cstdint>

namespace quiverdt {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("series rank must be in [1, " +
                                std::to_string(kMaxRank) + "]");
}

void check_bound(int bound) {
  if (bound < 0) throw std::invalid_argument("truncation bound must be >= 0");
}

}  // namespace

LatticePoint::LatticePoint(std::span<const int> exps) {
  if (exps.size() < 1 || exps.size() > static_cast<size_t>(kMaxRank))
    throw std::invalid_argument("lattice point rank must be in [1, " +
                                std::to_string(kMaxRank) + "]");
  rank_ = static_cast<int>(exps.size());
  total_ = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0)
      throw std::invalid_argument("lattice point entries must be >= 0");
    exps_[i] = exps[i];
    total_ += exps[i];
  }
}

LatticePoint::LatticePoint(std::initializer_list<int> exps)
    : LatticePoint(std::span<const int>(exps.begin(), exps.size())) {}

LatticePoint LatticePoint::zero(int rank) {
  std::vector<int> e(static_cast<size_t>(rank), 0);
  return LatticePoint(e);
}

LatticePoint LatticePoint::unit(int rank, int index) {
  if (index < 0 || index >= rank)
    throw std::invalid_argument("unit vector index out of range");
  std::vector<int> e(static_cast<size_t>(rank), 0);
  e[static_cast<size_t>(index)] = 1;
  return LatticePoint(e);
}

LatticePoint LatticePoint::operator+(const LatticePoint& other) const {
  if (rank_ != other.rank_)
    throw std::invalid_argument("lattice point rank mismatch");
  LatticePoint r = *this;
  for (int i = 0; i < rank_; ++i)
    r.exps_[static_cast<size_t>(i)] += other.exps_[static_cast<size_t>(i)];
  r.total_ = total_ + other.total_;
  return r;
}

LatticePoint LatticePoint::scaled(int k) const {
  if (k < 0) throw std::invalid_argument("negative scaling of lattice point");
  LatticePoint r = *this;
  for (int i = 0; i < rank_; ++i) r.exps_[static_cast<size_t>(i)] *= k;
  r.total_ = total_ * k;
  return r;
}

std::vector<int> LatticePoint::as_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + rank_);
}

bool operator<(const LatticePoint& a, const LatticePoint& b) {
  if (a.total_ != b.total_) return a.total_ < b.total_;
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  for (int i = 0; i < a.rank_; ++i) {
    int x = a.exps_[static_cast<size_t>(i)];
    int y = b.exps_[static_cast<size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

TruncatedSeries::TruncatedSeries(int rank, int bound)
    : rank_(rank), bound_(bound) {
  check_rank(rank);
  check_bound(bound);
}

TruncatedSeries TruncatedSeries::constant(int rank, int bound,
                                          const Rational& c) {
  TruncatedSeries s(rank, bound);
  if (c != 0) s.coeffs_.emplace(LatticePoint::zero(rank), c);
  return s;
}

TruncatedSeries TruncatedSeries::one(int rank, int bound) {
  return constant(rank, bound, Rational(1));
}

TruncatedSeries TruncatedSeries::monomial(const LatticePoint& d, int bound,
                                          const Rational& c) {
  TruncatedSeries s(d.rank(), bound);
  if (c != 0 && d.total_degree() <= bound) s.coeffs_.emplace(d, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int rank, int index, int bound) {
  return monomial(LatticePoint::unit(rank, index), bound);
}

Rational TruncatedSeries::coefficient(const LatticePoint& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
  return coefficient(LatticePoint::zero(rank_));
}

void TruncatedSeries::set_coefficient(const LatticePoint& d,
                                      const Rational& c) {
  if (d.rank() != rank_)
    throw std::invalid_argument("coefficient index rank mismatch");
  if (d.total_degree() > bound_) return;
  if (c == 0)
    coeffs_.erase(d);
  else
    coeffs_[d] = c;
}

int TruncatedSeries::order() const {
  if (coeffs_.empty()) return bound_ + 1;
  return coeffs_.begin()->first.total_degree();
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (rank_ != o.rank_)
    throw std::invalid_argument("series rank mismatch in addition");
  TruncatedSeries r(rank_, std::min(bound_, o.bound_));
  for (const auto& [d, c] : coeffs_) {
    if (d.total_degree() > r.bound_) break;
    r.coeffs_.emplace(d, c);
  }
  for (const auto& [d, c] : o.coeffs_) {
    if (d.total_degree() > r.bound_) break;
    auto [it, fresh] = r.coeffs_.emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(rank_, bound_);
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
  TruncatedSeries r(rank_, bound_);
  if (scalar == 0) return r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, c * scalar);
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  *this = *this + o;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  *this = *this * o;
  return *this;
}

void TruncatedSeries::add_scaled(const Rational& c,
                                 const TruncatedSeries& other) {
  if (rank_ != other.rank_)
    throw std::invalid_argument("series rank mismatch in add_scaled");
  if (c == 0) return;
  for (const auto& [d, v] : other.coeffs_) {
    if (d.total_degree() > bound_) break;
    auto [it, fresh] = coeffs_.emplace(d, c * v);
    if (!fresh) {
      it->second += c * v;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
  check_bound(new_bound);
  TruncatedSeries r(rank_, std::min(new_bound, bound_));
  for (const auto& [d, c] : coeffs_) {
    if (d.total_degree() > r.bound_) break;
    r.coeffs_.emplace(d, c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::rebounded(int new_bound) const {
  if (new_bound < bound_) return truncated(new_bound);
  TruncatedSeries r(rank_, new_bound);
  r.coeffs_ = coeffs_;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank_ != b.rank_) return false;
  int bound = std::min(a.bound_, b.bound_);
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  while (true) {
    while (ia != a.coeffs_.end() && ia->first.total_degree() > bound)
      ia = a.coeffs_.end();
    while (ib != b.coeffs_.end() && ib->first.total_degree() > bound)
      ib = b.coeffs_.end();
    bool ea = ia == a.coeffs_.end();
    bool eb = ib == b.coeffs_.end();
    if (ea && eb) return true;
    if (ea != eb) return false;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

namespace {

// Dense accumulation grid for products: exponents packed in base (bound+1).
// Falls back to map accumulation when the grid would be too large.
constexpr int64_t kDenseLimit = 1 << 21;

int64_t dense_size(int rank, int bound) {
  int64_t size = 1;
  for (int i = 0; i < rank; ++i) {
    size *= bound + 1;
    if (size > kDenseLimit) return -1;
  }
  return size;
}

int64_t pack(const LatticePoint& d, int base) {
  int64_t idx = 0;
  for (int i = d.rank() - 1; i >= 0; --i) idx = idx * base + d[i];
  return idx;
}

LatticePoint unpack(int64_t idx, int rank, int base) {
  std::vector<int> e(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    e[static_cast<size_t>(i)] = static_cast<int>(idx % base);
    idx /= base;
  }
  return LatticePoint(e);
}

}  // namespace

namespace {

bool all_integral_coeffs(const TruncatedSeries& s) {
  for (const auto& [d, c] : s.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument(
        "series rank mismatch: operands live in incompatible variable sets");
  int rank = a.rank();
  int bound = std::min(a.bound(), b.bound());
  TruncatedSeries result(rank, bound);
  if (a.is_zero() || b.is_zero()) return result;

  int64_t size = dense_size(rank, bound);
  if (size > 0) {
    int base = bound + 1;
    // integer fast path: accumulate in mpz, skipping mpq canonicalization
    if (all_integral_coeffs(a) && all_integral_coeffs(b)) {
      std::vector<Integer> acc(static_cast<size_t>(size));
      for (const auto& [da, ca] : a.coefficients()) {
        if (da.total_degree() > bound) break;
        int room = bound - da.total_degree();
        const Integer& za = ca.get_num();
        for (const auto& [db, cb] : b.coefficients()) {
          if (db.total_degree() > room) break;
          acc[static_cast<size_t>(pack(da + db, base))] +=
              za * cb.get_num();
        }
      }
      for (int64_t i = 0; i < size; ++i) {
        auto idx = static_cast<size_t>(i);
        if (acc[idx] != 0)
          result.set_coefficient(unpack(i, rank, base), Rational(acc[idx]));
      }
      return result;
    }

    std::vector<Rational> acc(static_cast<size_t>(size));
    std::vector<char> touched(static_cast<size_t>(size), 0);
    for (const auto& [da, ca] : a.coefficients()) {
      if (da.total_degree() > bound) break;
      int room = bound - da.total_degree();
      for (const auto& [db, cb] : b.coefficients()) {
        if (db.total_degree() > room) break;
        auto idx = static_cast<size_t>(pack(da + db, base));
        acc[idx] += ca * cb;
        touched[idx] = 1;
      }
    }
    for (int64_t i = 0; i < size; ++i) {
      auto idx = static_cast<size_t>(i);
      if (touched[idx] && acc[idx] != 0)
        result.set_coefficient(unpack(i, rank, base), acc[idx]);
    }
    return result;
  }

  for (const auto& [da, ca] : a.coefficients()) {
    if (da.total_degree() > bound) break;
    int room = bound - da.total_degree();
    for (const auto& [db, cb] : b.coefficients()) {
      if (db.total_degree() > room) break;
      LatticePoint d = da + db;
      result.set_coefficient(d, result.coefficient(d) + ca * cb);
    }
  }
  return result;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  return mul(*this, o);
}

namespace {

TruncatedSeries pow_nonneg(const TruncatedSeries& a, unsigned long e) {
  TruncatedSeries result = TruncatedSeries::one(a.rank(), a.bound());
  TruncatedSeries base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

// (1+u)^q via the generalized binomial series; u has positive order, so the
// sum terminates at k = bound.
TruncatedSeries pow_binomial(const TruncatedSeries& a, const Rational& q) {
  TruncatedSeries u = a - TruncatedSeries::one(a.rank(), a.bound());
  TruncatedSeries result = TruncatedSeries::one(a.rank(), a.bound());
  TruncatedSeries uk = TruncatedSeries::one(a.rank(), a.bound());
  Rational coeff(1);
  for (int k = 1; k <= a.bound(); ++k) {
    uk = mul(uk, u);
    if (uk.is_zero()) break;
    coeff *= q - (k - 1);
    coeff /= k;
    result.add_scaled(coeff, uk);
  }
  return result;
}

}  // namespace

TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& q) {
  if (is_integer(q) && q >= 0)
    return pow_nonneg(a, q.get_num().get_ui());
  if (!a.has_unit_constant_term())
    throw std::invalid_argument(
        "pow_rational: non-integer or negative exponent requires constant "
        "term exactly 1");
  return pow_binomial(a, q);
}

TruncatedSeries substitute(const TruncatedSeries& a,
                           std::span<const TruncatedSeries> args) {
  if (static_cast<int>(args.size()) != a.rank())
    throw std::invalid_argument(
        "substitute: need exactly one argument per variable");
  int rank2 = args[0].rank();
  int bound2 = args[0].bound();
  for (const auto& g : args) {
    if (g.rank() != rank2 || g.bound() != bound2)
      throw std::invalid_argument(
          "substitute: arguments must share one rank and bound");
    if (g.constant_term() != 0)
      throw std::invalid_argument(
          "substitute: argument has nonzero constant term (divergent "
          "substitution)");
  }
  int bound = std::min(a.bound(), bound2);

  std::vector<TruncatedSeries> trimmed;
  trimmed.reserve(args.size());
  for (const auto& g : args) trimmed.push_back(g.truncated(bound));

  // memoized powers of each argument
  std::vector<std::vector<TruncatedSeries>> powers(args.size());
  for (size_t i = 0; i < args.size(); ++i)
    powers[i].push_back(TruncatedSeries::one(rank2, bound));

  TruncatedSeries result(rank2, bound);
  for (const auto& [d, c] : a.coefficients()) {
    if (d.total_degree() > bound) break;
    TruncatedSeries term = TruncatedSeries::one(rank2, bound);
    bool first = true;
    for (int i = 0; i < a.rank(); ++i) {
      int e = d[i];
      if (e == 0) continue;
      auto& pw = powers[static_cast<size_t>(i)];
      while (static_cast<int>(pw.size()) <= e)
        pw.push_back(mul(pw.back(), trimmed[static_cast<size_t>(i)]));
      term = first ? pw[static_cast<size_t>(e)]
                   : mul(term, pw[static_cast<size_t>(e)]);
      first = false;
    }
    result.add_scaled(c, term);
  }
  return result;
}

TruncatedSeries comp_inverse(const TruncatedSeries& h) {
  if (h.rank() != 1)
    throw std::invalid_argument("comp_inverse: series must be univariate");
  if (h.constant_term() != 0)
    throw std::invalid_argument("comp_inverse: constant term must be zero");
  LatticePoint t1{1};
  Rational h1 = h.coefficient(t1);
  if (h1 == 0)
    throw std::invalid_argument(
        "comp_inverse: linear coefficient must be nonzero");
  int bound = h.bound();

  TruncatedSeries g(1, bound);
  g.set_coefficient(t1, Rational(1) / h1);
  // undetermined coefficients: fixing g up to degree n-1 determines the
  // degree-n error of h(g) as h1 * g_n + (known)
  for (int n = 2; n <= bound; ++n) {
    std::array<TruncatedSeries, 1> arg{g};
    TruncatedSeries err = substitute(h, arg);
    LatticePoint tn{n};
    Rational en = err.coefficient(tn);
    if (en != 0) g.set_coefficient(tn, -en / h1);
  }
  return g;
}

TruncatedSeries negate_variables(const TruncatedSeries& s) {
  TruncatedSeries r(s.rank(), s.bound());
  for (const auto& [d, c] : s.coefficients())
    r.set_coefficient(d, d.total_degree() % 2 == 0 ? c : -c);
  return r;
}

}  // namespace quiverdt
