#pragma once

#include <cstdint>
#include <string>

#include "ramlift/rational.hpp"
#include "ramlift/util.hpp"

namespace ramlift {

// ring-context adapters over exact integers, rationals, and Z/m, matching
// the duck-typed interface consumed by series<R> and the Witt evaluators

struct mpz_ring {
  using elem = Int;
  elem zero() const { return Int(0); }
  elem one() const { return Int(1); }
  elem from_int(int64_t v) const { return Int(static_cast<long>(v)); }
  elem from_mpz(const Int& v) const { return v; }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  bool is_unit(const elem& a) const { return a == 1 || a == -1; }
  elem inv(const elem& a) const {
    if (!is_unit(a)) throw not_invertible("mpz inverse");
    return a;
  }
  std::string to_string(const elem& a) const { return a.get_str(); }
};

struct mpq_ring {
  using elem = Rat;
  elem zero() const { return Rat(0); }
  elem one() const { return Rat(1); }
  elem from_int(int64_t v) const { return Rat(static_cast<long>(v)); }
  elem from_mpz(const Int& v) const { return Rat(v); }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  bool is_unit(const elem& a) const { return sgn(a) != 0; }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) throw not_invertible("mpq inverse of zero");
    return 1 / a;
  }
  std::string to_string(const elem& a) const { return a.get_str(); }
};

// Z/m with m < 2^63; products accumulated through __int128
struct zmod_ring {
  using elem = uint64_t;
  uint64_t m = 2;

  zmod_ring() = default;
  explicit zmod_ring(uint64_t m_) : m(m_) {}

  elem zero() const { return 0; }
  elem one() const { return 1 % m; }
  elem from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(m);
    if (r < 0) r += static_cast<int64_t>(m);
    return static_cast<uint64_t>(r);
  }
  elem from_mpz(const Int& v) const {
    Int r = v % Int(static_cast<unsigned long>(m));
    if (sgn(r) < 0) r += Int(static_cast<unsigned long>(m));
    return mpz_to_u64(r);
  }
  bool is_zero(const elem& a) const { return a == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
  elem sub(const elem& a, const elem& b) const {
    return a >= b ? a - b : a + m - b;
  }
  elem neg(const elem& a) const { return a ? m - a : 0; }
  elem mul(const elem& a, const elem& b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  }
  elem pow_u64(elem a, uint64_t e) const {
    elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }
  bool is_unit(const elem& a) const { return gcd_i64(static_cast<int64_t>(a % m), static_cast<int64_t>(m)) == 1; }
  elem inv(const elem& a) const {
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw not_invertible("zmod inverse of non-unit");
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
  }
  std::string to_string(const elem& a) const { return std::to_string(a); }
};

}  // namespace ramlift
