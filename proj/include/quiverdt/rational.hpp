#pragma once
// Exact arbitrary-precision scalars (GMP) and small numeric helpers shared
// by every module. All arithmetic in this library is exact; there is no
// floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quiverdt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an internal cross-check fails (factorization mismatch,
/// non-integral value where integrality is guaranteed, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" string, "p" when the denominator is 1; sign lives in p.
std::string rational_to_string(const Rational& q);

/// Inverse of rational_to_string; accepts "p" and "p/q".
Rational rational_from_string(const std::string& s);

/// Generalized binomial coefficient q(q-1)...(q-k+1)/k!, exact.
Rational binomial(const Rational& q, long k);

/// Binomial with integer (possibly negative) top argument.
Integer integer_binomial(const Integer& a, unsigned long b);

/// Exponent of the largest power of p dividing x; x must be nonzero.
long valuation(const Integer& x, const Integer& p);

/// q^e for integer e (q must be nonzero when e < 0).
Rational rational_pow(const Rational& q, long e);

}  // namespace quiverdt
