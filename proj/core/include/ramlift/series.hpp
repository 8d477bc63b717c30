#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ramlift/util.hpp"

namespace ramlift {

// Precision-tracked Laurent/Puiseux series over a runtime ring context R.
// R supplies: elem, zero(), one(), is_zero, eq, add, sub, neg, mul, from_int,
// is_unit, inv; optionally frob and pth_root.
//
// Exponents are integer multiples of 1/e. c[i] is the coefficient of
// X^{(lo+i)/e}; coefficients at exponents >= prec/e are unknown. Normal form:
// c is empty iff the series is zero to precision, and then lo == prec; when c
// is nonempty, c.front() != 0 and c.back() != 0.
template <class R>
struct series {
  const R* K = nullptr;
  int64_t e = 1;
  int64_t lo = PREC_INF;
  int64_t prec = PREC_INF;
  std::vector<typename R::elem> c;
};

struct cong_result {
  tri verdict = tri::undecided;
  int64_t witness_exp = 0;  // offending exponent numerator when verdict == no
};

template <class R>
void ls_normalize(series<R>& f) {
  const R& K = *f.K;
  size_t lead = 0;
  while (lead < f.c.size() && K.is_zero(f.c[lead])) ++lead;
  if (lead) {
    f.c.erase(f.c.begin(), f.c.begin() + static_cast<long>(lead));
    f.lo += static_cast<int64_t>(lead);
  }
  if (!prec_is_inf(f.prec) && !f.c.empty()) {
    int64_t keep = f.prec - f.lo;
    if (keep < 0) keep = 0;
    if (static_cast<int64_t>(f.c.size()) > keep)
      f.c.resize(static_cast<size_t>(keep));
  }
  while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
  if (f.c.empty()) f.lo = f.prec;
}

template <class R>
series<R> ls_zero(const R& K, int64_t prec = PREC_INF, int64_t e = 1) {
  series<R> f;
  f.K = &K;
  f.e = e;
  f.lo = prec;
  f.prec = prec;
  return f;
}

template <class R>
series<R> ls_monomial(const R& K, const typename R::elem& a, int64_t n,
                      int64_t e = 1, int64_t prec = PREC_INF) {
  series<R> f;
  f.K = &K;
  f.e = e;
  f.lo = n;
  f.prec = prec;
  f.c.push_back(a);
  ls_normalize(f);
  return f;
}

template <class R>
series<R> ls_one(const R& K, int64_t e = 1, int64_t prec = PREC_INF) {
  return ls_monomial(K, K.one(), 0, e, prec);
}

template <class R>
series<R> ls_from_terms(const R& K,
                        const std::vector<std::pair<int64_t, typename R::elem>>& ts,
                        int64_t e = 1, int64_t prec = PREC_INF) {
  if (ts.empty()) return ls_zero(K, prec, e);
  int64_t mn = ts[0].first, mx = ts[0].first;
  for (auto& t : ts) {
    mn = std::min(mn, t.first);
    mx = std::max(mx, t.first);
  }
  series<R> f;
  f.K = &K;
  f.e = e;
  f.lo = mn;
  f.prec = prec;
  f.c.assign(static_cast<size_t>(mx - mn + 1), K.zero());
  for (auto& t : ts)
    f.c[static_cast<size_t>(t.first - mn)] = K.add(f.c[static_cast<size_t>(t.first - mn)], t.second);
  ls_normalize(f);
  return f;
}

// valuation lower bound: the true valuation is >= this
template <class R>
int64_t ls_vlb(const series<R>& f) {
  return f.c.empty() ? f.prec : f.lo;
}

template <class R>
bool ls_is_exact_zero(const series<R>& f) {
  return f.c.empty() && prec_is_inf(f.prec);
}

template <class R>
int64_t ls_val(const series<R>& f) {
  if (f.c.empty()) throw precision_error("valuation of (possibly) zero series");
  return f.lo;
}

template <class R>
typename R::elem ls_lead(const series<R>& f) {
  if (f.c.empty()) throw precision_error("leading coefficient of zero series");
  return f.c.front();
}

// coefficient at exponent n/e; n must be below the precision bound
template <class R>
typename R::elem ls_coeff(const series<R>& f, int64_t n) {
  if (n >= f.prec) throw precision_error("coefficient beyond known precision");
  if (f.c.empty() || n < f.lo || n >= f.lo + static_cast<int64_t>(f.c.size()))
    return f.K->zero();
  return f.c[static_cast<size_t>(n - f.lo)];
}

template <class R>
series<R> ls_truncate(series<R> f, int64_t new_prec) {
  if (new_prec < f.prec) {
    f.prec = new_prec;
    if (f.c.empty()) f.lo = f.prec;
    ls_normalize(f);
  }
  return f;
}

// reinterpret exponents in units 1/E, E a multiple of e
template <class R>
series<R> ls_rescale(const series<R>& f, int64_t E) {
  if (E == f.e) return f;
  if (E % f.e != 0) throw domain_error("ram index rescale must be a multiple");
  int64_t k = E / f.e;
  series<R> g;
  g.K = f.K;
  g.e = E;
  g.prec = pmul(f.prec, k);
  if (f.c.empty()) {
    g.lo = g.prec;
    return g;
  }
  g.lo = f.lo * k;
  g.c.assign(static_cast<size_t>((static_cast<int64_t>(f.c.size()) - 1) * k + 1),
             f.K->zero());
  for (size_t i = 0; i < f.c.size(); ++i) g.c[i * static_cast<size_t>(k)] = f.c[i];
  return g;
}

template <class R>
int64_t ls_common_e(const series<R>& f, const series<R>& g) {
  return lcm_i64(f.e, g.e);
}

template <class R>
series<R> ls_neg(const series<R>& f) {
  series<R> g = f;
  for (auto& x : g.c) x = f.K->neg(x);
  return g;
}

template <class R>
series<R> ls_add(const series<R>& a0, const series<R>& b0) {
  int64_t E = ls_common_e(a0, b0);
  series<R> a = ls_rescale(a0, E), b = ls_rescale(b0, E);
  const R& K = *a.K;
  series<R> r;
  r.K = &K;
  r.e = E;
  r.prec = pmin(a.prec, b.prec);
  if (a.c.empty() && b.c.empty()) {
    r.lo = r.prec;
    return r;
  }
  int64_t mn = std::min(ls_vlb(a), ls_vlb(b));
  int64_t mx_excl = mn;
  if (!a.c.empty()) mx_excl = std::max(mx_excl, a.lo + static_cast<int64_t>(a.c.size()));
  if (!b.c.empty()) mx_excl = std::max(mx_excl, b.lo + static_cast<int64_t>(b.c.size()));
  if (!prec_is_inf(r.prec)) mx_excl = std::min(mx_excl, r.prec);
  if (mx_excl <= mn) return ls_zero(K, r.prec, E);
  r.lo = mn;
  r.c.assign(static_cast<size_t>(mx_excl - mn), K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    int64_t n = a.lo + static_cast<int64_t>(i);
    if (n >= mx_excl) break;
    r.c[static_cast<size_t>(n - mn)] = a.c[i];
  }
  for (size_t i = 0; i < b.c.size(); ++i) {
    int64_t n = b.lo + static_cast<int64_t>(i);
    if (n >= mx_excl) break;
    size_t k = static_cast<size_t>(n - mn);
    r.c[k] = K.add(r.c[k], b.c[i]);
  }
  ls_normalize(r);
  return r;
}

template <class R>
series<R> ls_sub(const series<R>& a, const series<R>& b) {
  return ls_add(a, ls_neg(b));
}

template <class R>
series<R> ls_scale(const series<R>& f, const typename R::elem& s) {
  series<R> g = f;
  for (auto& x : g.c) x = f.K->mul(s, x);
  ls_normalize(g);
  return g;
}

// multiply by X^{n/e}
template <class R>
series<R> ls_shift(series<R> f, int64_t n) {
  f.lo = padd(f.lo, n);
  f.prec = padd(f.prec, n);
  return f;
}

template <class R>
series<R> ls_mul(const series<R>& a0, const series<R>& b0) {
  int64_t E = ls_common_e(a0, b0);
  series<R> a = ls_rescale(a0, E), b = ls_rescale(b0, E);
  const R& K = *a.K;
  int64_t prec = pmin(padd(a.prec, ls_vlb(b)), padd(b.prec, ls_vlb(a)));
  if (a.c.empty() || b.c.empty()) return ls_zero(K, prec, E);
  series<R> r;
  r.K = &K;
  r.e = E;
  r.prec = prec;
  r.lo = a.lo + b.lo;
  int64_t full = static_cast<int64_t>(a.c.size() + b.c.size()) - 1;
  int64_t keep = full;
  if (!prec_is_inf(prec)) keep = std::min(keep, prec - r.lo);
  if (keep <= 0) return ls_zero(K, prec, E);
  r.c.assign(static_cast<size_t>(keep), K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (K.is_zero(a.c[i])) continue;
    if (static_cast<int64_t>(i) >= keep) break;
    for (size_t j = 0; j < b.c.size(); ++j) {
      size_t k = i + j;
      if (static_cast<int64_t>(k) >= keep) break;
      if (K.is_zero(b.c[j])) continue;
      r.c[k] = K.add(r.c[k], K.mul(a.c[i], b.c[j]));
    }
  }
  ls_normalize(r);
  return r;
}

// f^n for n >= 0, truncating intermediates at cap (exponent numerator bound)
template <class R>
series<R> ls_pow(const series<R>& f, uint64_t n, int64_t cap = PREC_INF) {
  series<R> r = ls_one(*f.K, f.e, cap);
  series<R> base = ls_truncate(f, cap);
  while (n) {
    if (n & 1) r = ls_truncate(ls_mul(r, base), cap);
    n >>= 1;
    if (n) base = ls_truncate(ls_mul(base, base), cap);
  }
  return r;
}

// inverse of a series whose leading coefficient is a unit; result precision
// is prec - 2*val, or cap for exact non-monomial inputs
template <class R>
series<R> ls_inv(const series<R>& f, int64_t cap = PREC_INF) {
  const R& K = *f.K;
  if (f.c.empty()) throw not_invertible("inverse of (possibly) zero series");
  if (!K.is_unit(f.c.front()))
    throw not_invertible("leading coefficient is not a unit");
  int64_t v = f.lo;
  if (f.c.size() == 1) {
    int64_t prec = pmin(padd(f.prec, -2 * v), cap);
    return ls_monomial(K, K.inv(f.c.front()), -v, f.e, prec);
  }
  int64_t prec = pmin(padd(f.prec, -2 * v), cap);
  if (prec_is_inf(prec))
    throw precision_error("inverse of exact non-monomial series needs a cap");
  int64_t len = prec + v;  // relative precision
  if (len <= 0) return ls_zero(K, prec, f.e);
  typename R::elem a0i = K.inv(f.c.front());
  std::vector<typename R::elem> b(static_cast<size_t>(len), K.zero());
  b[0] = a0i;
  for (int64_t n = 1; n < len; ++n) {
    typename R::elem s = K.zero();
    int64_t kmax = std::min<int64_t>(n, static_cast<int64_t>(f.c.size()) - 1);
    for (int64_t k = 1; k <= kmax; ++k) {
      if (K.is_zero(f.c[static_cast<size_t>(k)])) continue;
      s = K.add(s, K.mul(f.c[static_cast<size_t>(k)], b[static_cast<size_t>(n - k)]));
    }
    b[static_cast<size_t>(n)] = K.neg(K.mul(a0i, s));
  }
  series<R> r;
  r.K = &K;
  r.e = f.e;
  r.lo = -v;
  r.prec = prec;
  r.c = std::move(b);
  ls_normalize(r);
  return r;
}

// f(g). Outer exponents must be integers (f.e == 1); g must have positive
// valuation. cap bounds the result precision and enables exact Laurent f
// with exact non-monomial g.
template <class R>
series<R> ls_compose(const series<R>& f, const series<R>& g, int64_t cap = PREC_INF) {
  const R& K = *f.K;
  if (f.e != 1) throw domain_error("compose: outer series must have e == 1");
  if (g.c.empty()) {
    if (!ls_is_exact_zero(g))
      throw domain_error("compose: inner series is zero to finite precision");
    if (!f.c.empty() && f.lo < 0)
      throw not_invertible("compose: negative exponent at inner zero");
    return ls_monomial(K, ls_coeff(f, 0), 0, 1, cap);
  }
  int64_t vg = g.lo;
  if (vg <= 0) throw domain_error("compose: inner series must have positive valuation");
  if (f.c.empty()) {
    int64_t P = prec_is_inf(f.prec) ? PREC_INF : pmul(f.prec, vg);
    return ls_zero(K, pmin(pmin(P, cap), g.prec), g.e);
  }
  int64_t nmin = f.lo;
  int64_t P = cap;
  if (!prec_is_inf(f.prec)) P = pmin(P, pmul(f.prec, vg));
  if (!prec_is_inf(g.prec)) P = pmin(P, padd(g.prec, (nmin - 1) * vg));
  series<R> gt = ls_truncate(g, P);
  int64_t hi = f.lo + static_cast<int64_t>(f.c.size()) - 1;
  series<R> acc = ls_zero(K, PREC_INF, g.e);
  if (hi >= 0) {
    // Horner over nonnegative exponents, top down; coefficients of acc at
    // exponents >= P only move up under multiplication by gt, so dropping
    // them never disturbs the result below P
    for (int64_t n = hi; n >= 0; --n) {
      acc = ls_truncate(ls_mul(acc, gt), P);
      typename R::elem a = (n >= f.lo) ? f.c[static_cast<size_t>(n - f.lo)] : K.zero();
      if (!K.is_zero(a)) acc = ls_add(acc, ls_monomial(K, a, 0, g.e, PREC_INF));
    }
  }
  if (f.lo < 0) {
    int64_t M = -f.lo;
    if (prec_is_inf(P) && g.c.size() > 1)
      throw precision_error("compose: Laurent outer with exact inner needs a cap");
    int64_t inv_cap = prec_is_inf(P) ? PREC_INF : P + (M - 1) * vg;
    series<R> h = ls_inv(g, inv_cap);
    series<R> negacc = ls_zero(K, PREC_INF, g.e);
    for (int64_t m = M; m >= 1; --m) {
      typename R::elem a = K.zero();
      int64_t n = -m;
      if (n >= f.lo && n <= hi) a = f.c[static_cast<size_t>(n - f.lo)];
      if (!K.is_zero(a)) negacc = ls_add(negacc, ls_monomial(K, a, 0, g.e, PREC_INF));
      // m-1 more h factors follow, each lowering exponents by vg
      negacc = ls_truncate(ls_mul(negacc, h), padd(P, (m - 1) * vg));
    }
    acc = ls_add(acc, negacc);
  }
  acc = ls_truncate(acc, P);
  return acc;
}

// coefficientwise p-power with exponents scaled by p (exact in char p)
template <class R>
series<R> ls_frob_p(const series<R>& f, uint32_t p) {
  series<R> g;
  g.K = f.K;
  g.e = f.e;
  g.prec = pmul(f.prec, p);
  if (f.c.empty()) {
    g.lo = g.prec;
    return g;
  }
  g.lo = f.lo * static_cast<int64_t>(p);
  g.c.assign(static_cast<size_t>((f.c.size() - 1) * p + 1), f.K->zero());
  for (size_t i = 0; i < f.c.size(); ++i)
    g.c[i * p] = f.K->frob(f.c[i]);
  return g;
}

template <class R>
series<R> ls_pth_root(const series<R>& f, uint32_t p) {
  series<R> g;
  g.K = f.K;
  g.e = f.e;
  g.prec = prec_is_inf(f.prec) ? PREC_INF : cdiv_i64(f.prec, static_cast<int64_t>(p));
  if (f.c.empty()) {
    g.lo = g.prec;
    return g;
  }
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.K->is_zero(f.c[i])) continue;
    int64_t n = f.lo + static_cast<int64_t>(i);
    if (n % static_cast<int64_t>(p) != 0) throw non_pth_power(n);
  }
  g.lo = f.lo / static_cast<int64_t>(p);
  int64_t hi = (f.lo + static_cast<int64_t>(f.c.size()) - 1) / static_cast<int64_t>(p);
  g.c.assign(static_cast<size_t>(hi - g.lo + 1), f.K->zero());
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.K->is_zero(f.c[i])) continue;
    int64_t n = f.lo + static_cast<int64_t>(i);
    g.c[static_cast<size_t>(n / static_cast<int64_t>(p) - g.lo)] = f.K->pth_root(f.c[i]);
  }
  ls_normalize(g);
  return g;
}

// is f congruent to 0 modulo X^{tau/e}?
template <class R>
cong_result ls_zero_mod(const series<R>& f, int64_t tau) {
  cong_result r;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.K->is_zero(f.c[i])) continue;
    int64_t n = f.lo + static_cast<int64_t>(i);
    if (n < tau) {
      r.verdict = tri::no;
      r.witness_exp = n;
      return r;
    }
  }
  r.verdict = (f.prec >= tau) ? tri::yes : tri::undecided;
  if (r.verdict == tri::undecided) r.witness_exp = f.prec;
  return r;
}

template <class R>
tri ls_zero3(const series<R>& f) {
  if (!f.c.empty()) return tri::no;
  return prec_is_inf(f.prec) ? tri::yes : tri::undecided;
}

template <class R>
tri ls_eq3(const series<R>& a, const series<R>& b) {
  return ls_zero3(ls_sub(a, b));
}

template <class R>
std::string ls_to_string(const series<R>& f) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.K->is_zero(f.c[i])) continue;
    int64_t n = f.lo + static_cast<int64_t>(i);
    if (any) os << " + ";
    os << f.K->to_string(f.c[i]) << "*X^";
    if (f.e == 1)
      os << n;
    else
      os << "(" << n << "/" << f.e << ")";
    any = true;
  }
  if (!any) os << "0";
  if (!prec_is_inf(f.prec)) {
    os << " + O(X^";
    if (f.e == 1)
      os << f.prec;
    else
      os << "(" << f.prec << "/" << f.e << ")";
    os << ")";
  }
  return os.str();
}

// Ring adapter whose elements are series over B truncated at a fixed cap.
// Models B((X)) worked modulo X^{cap/e}: every operation truncates, equality
// and zero tests compare stored coefficients. Callers must feed elements
// accurate to the cap.
template <class B>
struct series_ring {
  using elem = series<B>;
  const B* base = nullptr;
  int64_t e = 1;
  int64_t cap = PREC_INF;

  series_ring() = default;
  series_ring(const B& b, int64_t cap_, int64_t e_ = 1) : base(&b), e(e_), cap(cap_) {}

  elem clip(elem f) const {
    f = ls_truncate(std::move(f), cap);
    f.prec = cap;
    if (f.c.empty()) f.lo = f.prec;
    return f;
  }
  elem zero() const { return ls_zero(*base, cap, e); }
  elem one() const { return clip(ls_one(*base, e)); }
  elem from_int(int64_t v) const {
    return clip(ls_monomial(*base, base->from_int(v), 0, e));
  }
  template <class I>
  elem from_mpz(const I& v) const {
    return clip(ls_monomial(*base, base->from_mpz(v), 0, e));
  }
  bool is_zero(const elem& a) const { return a.c.empty(); }
  bool eq(const elem& a, const elem& b) const {
    return is_zero(ls_sub(a, b));
  }
  elem add(const elem& a, const elem& b) const { return clip(ls_add(a, b)); }
  elem sub(const elem& a, const elem& b) const { return clip(ls_sub(a, b)); }
  elem neg(const elem& a) const { return ls_neg(a); }
  elem mul(const elem& a, const elem& b) const { return clip(ls_mul(a, b)); }
  // Laurent-field sense: invertible iff the leading coefficient is a unit.
  // Inverting at nonzero valuation spends accuracy; callers budget for it.
  bool is_unit(const elem& a) const {
    return !a.c.empty() && base->is_unit(a.c.front());
  }
  elem inv(const elem& a) const {
    if (!is_unit(a)) throw not_invertible("series ring inverse needs a unit");
    return clip(ls_inv(a, cap));
  }
  elem frob(const elem& a) const { return clip(ls_frob_p(a, base->p())); }
  elem pth_root(const elem& a) const { return clip(ls_pth_root(a, base->p())); }
  std::string to_string(const elem& a) const { return ls_to_string(a); }
};

}  // namespace ramlift
