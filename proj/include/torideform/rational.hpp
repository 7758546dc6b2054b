#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace torideform {

// Exact arithmetic scalars. Rationals are kept canonical (lowest terms,
// positive denominator) by the GMP backend.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int floor_int(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;                      // truncates toward zero
  if (n % d != 0 && n < 0) t -= 1;
  return t;
}

inline Int ceil_int(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;
  if (n % d != 0 && n > 0) t += 1;
  return t;
}

// {z} := ceil(z) - z, the round-up defect; lies in [0,1), zero iff z integral.
inline Rat frac_up(const Rat& z) { return Rat(ceil_int(z)) - z; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline std::string rat_str(const Rat& q) { return q.str(); }

}  // namespace torideform
