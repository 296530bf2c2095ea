#include "quiverdt/rational.hpp"

namespace quiverdt {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational string: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rational binomial(const Rational& q, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long j = 0; j < k; ++j) {
    result *= q - j;
    result /= j + 1;
  }
  return result;
}

Integer integer_binomial(const Integer& a, unsigned long b) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b);
  return r;
}

long valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  Integer reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::invalid_argument("zero to a negative power");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational result(1);
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  result.canonicalize();
  return result;
}

}  // namespace quiverdt
