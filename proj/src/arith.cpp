#include "quiverdt/arith.hpp"

#include <algorithm>

namespace quiverdt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

int Partition::part(int i) const {
  if (i < 1 || i > num_parts()) return 0;
  return parts_[static_cast<size_t>(i - 1)];
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  // descending first-part enumeration gives reverse lexicographic order
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int moebius(long n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

Rational gen_binomial(const Rational& q, long k) { return binomial(q, k); }

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long padic(const Integer& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x, Integer(p));
}

long mod4(long x) { return ((x % 4) + 4) % 4; }

}  // namespace

CongruenceReport binomial_congruence_check(long a, long b, long p) {
  if (!is_prime(p))
    throw std::invalid_argument("binomial_congruence_check: p must be prime");
  if (b < 0)
    throw std::invalid_argument("binomial_congruence_check: b must be >= 0");

  CongruenceReport rep;
  rep.a = a;
  rep.b = b;
  rep.p = p;
  rep.binom = integer_binomial(Integer(a), static_cast<unsigned long>(b));

  long ma = padic(Integer(a), p);
  long mb = padic(Integer(b), p);
  rep.valuation = padic(rep.binom, p);
  rep.valuation_bound = std::max(ma - mb, 0L);
  rep.valuation_pass = rep.valuation >= rep.valuation_bound;

  if (a % p == 0 && b % p == 0) {
    rep.congruence_applicable = true;
    long a1 = a / p;
    long b1 = b / p;
    Integer small = integer_binomial(Integer(a1), static_cast<unsigned long>(b1));
    rep.eta = (p == 2 && mod4(b) == 2 && mod4(a - b) == 2) ? -1 : 1;
    // mu_p = 2, 1, 0 for p = 2, 3, >= 5
    long mu_p = p == 2 ? 2 : (p == 3 ? 1 : 0);
    long r = -mu_p;
    for (long v : {ma, mb, padic(Integer(a - b), p), padic(small, p)}) {
      if (v >= kInfiniteValuation) {
        r = kInfiniteValuation;
        break;
      }
      r += v;
    }
    rep.exponent_bound = std::max(r, 0L);
    Integer diff = rep.binom - rep.eta * small;
    if (diff == 0)
      rep.congruence_pass = true;
    else if (rep.exponent_bound >= kInfiniteValuation)
      rep.congruence_pass = false;
    else
      rep.congruence_pass = padic(diff, p) >= rep.exponent_bound;

    if (p == 2) {
      rep.mod4_applicable = true;
      Integer diff2 = rep.binom - small;
      rep.mod4_pass = diff2 % 4 == 0;
    }
  }
  return rep;
}

Integer chi_symmetric_stratum(long chi, const Partition& lam) {
  int k = lam.num_parts();
  Rational value = binomial(Rational(chi), k);
  // k! / prod_i m_i!
  for (int j = 2; j <= k; ++j) value *= j;
  int i = 0;
  for (size_t idx = 0; idx < lam.parts().size();) {
    i = lam.parts()[idx];
    size_t run = 0;
    while (idx < lam.parts().size() && lam.parts()[idx] == i) {
      ++idx;
      ++run;
    }
    for (size_t j = 2; j <= run; ++j) value /= static_cast<long>(j);
  }
  if (!is_integer(value))
    throw ConsistencyError("chi_symmetric_stratum produced a non-integer");
  return value.get_num();
}

Integer coeff_product_form(const std::map<long, long>& c, long d) {
  if (d < 0) throw std::invalid_argument("coeff_product_form: d must be >= 0");
  Integer total = 0;
  for (const Partition& lam : partitions_of(static_cast<int>(d))) {
    Integer term = 1;
    for (int i = 1; i <= lam.num_parts() && term != 0; ++i) {
      long ki = lam.difference(i);
      if (ki == 0) continue;
      auto it = c.find(i);
      long ci = it == c.end() ? 0 : it->second;
      term *= integer_binomial(Integer(ci + ki - 1),
                               static_cast<unsigned long>(ki));
    }
    total += term;
  }
  return total;
}

}  // namespace quiverdt
