#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parhiggs {

// Exact rational scalar. Always stored canonically (lowest terms,
// positive denominator); mpq_class maintains this after canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num/den" or a plain integer string.
inline Rat parse_rational(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("rational is not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
  return r.get_num().get_si();
}

}  // namespace parhiggs
