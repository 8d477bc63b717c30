#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ramlift/rational.hpp"
#include "ramlift/util.hpp"

namespace ramlift {

// compiled sparse form of a universal Witt polynomial, integer coefficients
struct wterm {
  Int coeff;
  std::vector<std::pair<uint16_t, uint16_t>> pe;  // (var, exp), exp >= 1
};

struct wpoly {
  uint32_t nv = 0;
  std::vector<wterm> terms;
};

// Universal polynomials for length-N p-typical Witt vectors. S/P/NEG act on
// variable layout x_j = j, y_j = N + j (NEG uses only the x block); F uses
// x_0..x_N. Generated once by ghost inversion over Q, integrality asserted,
// and cached per (p, N).
struct witt_table {
  uint32_t p = 0, N = 0;
  std::vector<wpoly> S, P, F, NEG;
};

const witt_table& get_witt_table(uint32_t p, uint32_t N);

// one polynomial per line, sparse monomial format
std::string wpoly_to_line(const wpoly& f, uint32_t nx);
std::string witt_table_dump(const witt_table& T);

template <class R>
typename R::elem wpoly_eval(const wpoly& f, const R& K,
                            const std::vector<typename R::elem>& vals) {
  assert(vals.size() >= f.nv);
  std::vector<char> vz(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) vz[i] = K.is_zero(vals[i]) ? 1 : 0;
  // per-variable power caches, filled on demand
  std::vector<std::vector<typename R::elem>> pw(vals.size());
  auto power = [&](uint16_t v, uint16_t e) -> const typename R::elem& {
    auto& cache = pw[v];
    if (cache.empty()) cache.push_back(vals[v]);
    while (cache.size() < e) cache.push_back(K.mul(cache.back(), vals[v]));
    return cache[e - 1];
  };
  typename R::elem acc = K.zero();
  for (const wterm& t : f.terms) {
    bool dead = false;
    for (auto& [v, e] : t.pe)
      if (vz[v]) {
        dead = true;
        break;
      }
    if (dead) continue;
    typename R::elem prod = K.from_mpz(t.coeff);
    if (K.is_zero(prod)) continue;
    for (auto& [v, e] : t.pe) prod = K.mul(prod, power(v, e));
    acc = K.add(acc, prod);
  }
  return acc;
}

template <class R>
struct wvec {
  std::vector<typename R::elem> a;
};

template <class R>
wvec<R> witt_zero(const R& K, uint32_t N) {
  wvec<R> z;
  z.a.assign(N, K.zero());
  return z;
}

template <class R>
wvec<R> witt_teich(const R& K, uint32_t N, const typename R::elem& r) {
  wvec<R> z = witt_zero(K, N);
  z.a[0] = r;
  return z;
}

template <class R>
bool witt_eq(const R& K, const wvec<R>& x, const wvec<R>& y) {
  if (x.a.size() != y.a.size()) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!K.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class R>
bool witt_is_zero(const R& K, const wvec<R>& x) {
  for (auto& c : x.a)
    if (!K.is_zero(c)) return false;
  return true;
}

template <class R>
wvec<R> witt_add(const witt_table& T, const R& K, const wvec<R>& x,
                 const wvec<R>& y) {
  size_t N = x.a.size();
  if (y.a.size() != N || N > T.N) throw domain_error("witt length mismatch");
  std::vector<typename R::elem> vals;
  vals.reserve(2 * T.N);
  vals = x.a;
  vals.resize(T.N, K.zero());
  for (auto& c : y.a) vals.push_back(c);
  vals.resize(2 * T.N, K.zero());
  wvec<R> z;
  z.a.reserve(N);
  for (size_t i = 0; i < N; ++i) z.a.push_back(wpoly_eval(T.S[i], K, vals));
  return z;
}

template <class R>
wvec<R> witt_mul(const witt_table& T, const R& K, const wvec<R>& x,
                 const wvec<R>& y) {
  size_t N = x.a.size();
  if (y.a.size() != N || N > T.N) throw domain_error("witt length mismatch");
  std::vector<typename R::elem> vals = x.a;
  vals.resize(T.N, K.zero());
  for (auto& c : y.a) vals.push_back(c);
  vals.resize(2 * T.N, K.zero());
  wvec<R> z;
  z.a.reserve(N);
  for (size_t i = 0; i < N; ++i) z.a.push_back(wpoly_eval(T.P[i], K, vals));
  return z;
}

// coordinatewise negation is valid for odd p
template <class R>
wvec<R> witt_neg(const witt_table& T, const R& K, const wvec<R>& x) {
  assert(T.p % 2 == 1);
  wvec<R> z = x;
  for (auto& c : z.a) c = K.neg(c);
  return z;
}

template <class R>
wvec<R> witt_sub(const witt_table& T, const R& K, const wvec<R>& x,
                 const wvec<R>& y) {
  return witt_add(T, K, x, witt_neg(T, K, y));
}

template <class R>
wvec<R> witt_vshift(const R& K, const wvec<R>& x, uint32_t k = 1) {
  wvec<R> z;
  z.a.assign(x.a.size(), K.zero());
  for (size_t i = 0; i + k < x.a.size(); ++i) z.a[i + k] = x.a[i];
  return z;
}

// Frobenius over characteristic-p coefficient rings: coordinatewise p-power
template <class R>
wvec<R> witt_frob_charp(const R& K, const wvec<R>& x, uint32_t k = 1) {
  wvec<R> z = x;
  for (uint32_t j = 0; j < k; ++j)
    for (auto& c : z.a) c = K.frob(c);
  return z;
}

// table Frobenius, length N input to length N-1 output
template <class R>
wvec<R> witt_frob_table(const witt_table& T, const R& K, const wvec<R>& x) {
  size_t N = x.a.size();
  if (N > T.N || N < 1) throw domain_error("witt length mismatch");
  std::vector<typename R::elem> vals = x.a;
  vals.resize(T.N + 1, K.zero());
  wvec<R> z;
  for (size_t i = 0; i + 1 < N; ++i) z.a.push_back(wpoly_eval(T.F[i], K, vals));
  return z;
}

// p * x = V(F(x)); table route works over any coefficient ring
template <class R>
wvec<R> witt_mult_p(const witt_table& T, const R& K, const wvec<R>& x) {
  wvec<R> f = witt_frob_table(T, K, x);
  wvec<R> z;
  z.a.assign(x.a.size(), K.zero());
  for (size_t i = 0; i < f.a.size(); ++i) z.a[i + 1] = f.a[i];
  return z;
}

template <class R>
wvec<R> witt_mult_p_charp(const R& K, const wvec<R>& x) {
  return witt_vshift(K, witt_frob_charp(K, x), 1);
}

// [s] * x is coordinatewise: coordinate i scaled by s^{p^i}
template <class R>
wvec<R> witt_teich_scale(const R& K, uint32_t p, const typename R::elem& s,
                         const wvec<R>& x) {
  wvec<R> z = x;
  typename R::elem sp = s;
  for (size_t i = 0; i < z.a.size(); ++i) {
    z.a[i] = K.mul(sp, z.a[i]);
    if (i + 1 < z.a.size()) {
      typename R::elem acc = sp;
      for (uint32_t j = 1; j < p; ++j) acc = K.mul(acc, sp);
      sp = acc;
    }
  }
  return z;
}

// ghost components over a torsion-free or Q-algebra coefficient ring
template <class R>
std::vector<typename R::elem> witt_ghost(const R& K, uint32_t p,
                                         const wvec<R>& x) {
  size_t N = x.a.size();
  std::vector<typename R::elem> w(N, K.zero());
  for (size_t i = 0; i < N; ++i) {
    typename R::elem acc = K.zero();
    Int pj(1);
    for (size_t j = 0; j <= i; ++j) {
      uint64_t e = ipow_u64(p, static_cast<uint32_t>(i - j));
      typename R::elem t = K.one();
      typename R::elem base = x.a[j];
      while (e) {
        if (e & 1) t = K.mul(t, base);
        e >>= 1;
        if (e) base = K.mul(base, base);
      }
      acc = K.add(acc, K.mul(K.from_mpz(pj), t));
      pj *= p;
    }
    w[i] = acc;
  }
  return w;
}

// balanced tree sum, cheaper than a left fold when summands are many
template <class R>
wvec<R> witt_sum_tree(const witt_table& T, const R& K,
                      std::vector<wvec<R>> items, uint32_t N) {
  if (items.empty()) return witt_zero(K, N);
  while (items.size() > 1) {
    std::vector<wvec<R>> next;
    next.reserve((items.size() + 1) / 2);
    for (size_t i = 0; i + 1 < items.size(); i += 2)
      next.push_back(witt_add(T, K, items[i], items[i + 1]));
    if (items.size() % 2) next.push_back(items.back());
    items = std::move(next);
  }
  return items[0];
}

// solve x * y = z for y, coordinate by coordinate, over a characteristic-p
// coefficient ring in which x_0 is invertible; valid because P_i mod p is
// linear in y_i with coefficient x_0^{p^i} (asserted at table build)
template <class R>
wvec<R> witt_solve_mul(const witt_table& T, const R& K, const wvec<R>& x,
                       const wvec<R>& z) {
  size_t N = x.a.size();
  if (z.a.size() != N || N > T.N) throw domain_error("witt length mismatch");
  if (!K.is_unit(x.a[0]))
    throw not_invertible("witt division needs invertible first coordinate");
  std::vector<typename R::elem> vals = x.a;
  vals.resize(T.N, K.zero());
  vals.resize(2 * T.N, K.zero());
  typename R::elem x0inv = K.inv(x.a[0]);
  wvec<R> y;
  y.a.reserve(N);
  uint64_t pi = 1;
  for (size_t i = 0; i < N; ++i) {
    typename R::elem rhs = wpoly_eval(T.P[i], K, vals);  // y_i slot still zero
    typename R::elem num = K.sub(z.a[i], rhs);
    typename R::elem coef = K.one();
    {
      typename R::elem base = x0inv;
      uint64_t e = pi;
      while (e) {
        if (e & 1) coef = K.mul(coef, base);
        e >>= 1;
        if (e) base = K.mul(base, base);
      }
    }
    typename R::elem yi = K.mul(num, coef);
    y.a.push_back(yi);
    vals[T.N + i] = yi;
    pi *= T.p;
  }
  return y;
}

}  // namespace ramlift
