#pragma once

#include <gmpxx.h>

#include <string>

#include "ramlift/util.hpp"

namespace ramlift {

// Exact rationals (reduced form, positive denominator) are mpq_class;
// canonicalization is enforced at construction sites via rat().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) {
  if (rat_is_int(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// parses "a" or "a/b"
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw domain_error("bad rational: " + s);
  q.canonicalize();
  if (q.get_den() <= 0) throw domain_error("bad rational: " + s);
  return q;
}

inline uint64_t mpz_to_u64(const Int& z) { return mpz_get_ui(z.get_mpz_t()); }

}  // namespace ramlift
