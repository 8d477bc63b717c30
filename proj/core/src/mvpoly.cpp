#include "ramlift/mvpoly.hpp"

#include <cassert>
#include <stdexcept>

#include "ramlift/util.hpp"

namespace ramlift {

mvq mv_zero(uint32_t nv) {
  mvq a;
  a.nv = nv;
  return a;
}

mvq mv_const(uint32_t nv, const Rat& c) {
  mvq a = mv_zero(nv);
  if (sgn(c) != 0) a.t.emplace(std::vector<uint16_t>(nv, 0), c);
  return a;
}

mvq mv_var(uint32_t nv, uint32_t i, uint32_t exp) {
  assert(i < nv && exp <= 0xffff);
  mvq a = mv_zero(nv);
  std::vector<uint16_t> k(nv, 0);
  k[i] = static_cast<uint16_t>(exp);
  a.t.emplace(std::move(k), Rat(1));
  return a;
}

void mv_add_term(mvq& a, const std::vector<uint16_t>& key, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = a.t.find(key);
  if (it == a.t.end()) {
    a.t.emplace(key, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) a.t.erase(it);
  }
}

mvq mv_add(const mvq& a, const mvq& b) {
  assert(a.nv == b.nv);
  mvq r = a;
  for (auto& [k, c] : b.t) mv_add_term(r, k, c);
  return r;
}

mvq mv_neg(const mvq& a) {
  mvq r = a;
  for (auto& [k, c] : r.t) c = -c;
  return r;
}

mvq mv_sub(const mvq& a, const mvq& b) { return mv_add(a, mv_neg(b)); }

mvq mv_mul(const mvq& a, const mvq& b) {
  assert(a.nv == b.nv);
  mvq r = mv_zero(a.nv);
  std::vector<uint16_t> key(a.nv);
  for (auto& [ka, ca] : a.t) {
    for (auto& [kb, cb] : b.t) {
      for (uint32_t i = 0; i < a.nv; ++i) {
        uint32_t e = static_cast<uint32_t>(ka[i]) + kb[i];
        if (e > 0xffff) throw domain_error("mvpoly exponent overflow");
        key[i] = static_cast<uint16_t>(e);
      }
      mv_add_term(r, key, ca * cb);
    }
  }
  return r;
}

mvq mv_pow(const mvq& a, uint64_t e) {
  mvq r = mv_const(a.nv, Rat(1));
  mvq base = a;
  while (e) {
    if (e & 1) r = mv_mul(r, base);
    e >>= 1;
    if (e) base = mv_mul(base, base);
  }
  return r;
}

mvq mv_scale(const mvq& a, const Rat& c) {
  if (sgn(c) == 0) return mv_zero(a.nv);
  mvq r = a;
  for (auto& [k, v] : r.t) v *= c;
  return r;
}

bool mv_is_integral(const mvq& a) {
  for (auto& [k, c] : a.t)
    if (c.get_den() != 1) return false;
  return true;
}

mvq mv_divexact(const mvq& a, const Int& den) {
  mvq r = mv_scale(a, rat(Int(1), den));
  if (!mv_is_integral(r))
    throw domain_error("mvpoly division produced non-integer coefficients");
  return r;
}

Rat mv_eval_q(const mvq& a, const std::vector<Rat>& vals) {
  assert(vals.size() == a.nv);
  Rat acc(0);
  for (auto& [k, c] : a.t) {
    Rat term = c;
    for (uint32_t i = 0; i < a.nv; ++i) {
      for (uint32_t e = 0; e < k[i]; ++e) term *= vals[i];
    }
    acc += term;
  }
  return acc;
}

}  // namespace ramlift
