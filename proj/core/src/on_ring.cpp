#include "ramlift/on_ring.hpp"

#include <utility>
#include <vector>

namespace ramlift {

series<fq_ctx> on_digit(const gr_ctx& W, const series<gr_ctx>& f, uint32_t i) {
  if (i >= W.N()) throw domain_error("digit index out of range");
  const fq_ctx& k = W.residue_field();
  series<fq_ctx> g;
  g.K = &k;
  g.e = f.e;
  g.prec = f.prec;
  g.lo = f.lo;
  g.c.reserve(f.c.size());
  for (const auto& a : f.c) g.c.push_back(W.digits(a)[i]);
  ls_normalize(g);
  return g;
}

series<gr_ctx> on_teich_lift(const gr_ctx& W, const series<fq_ctx>& fbar) {
  series<gr_ctx> g;
  g.K = &W;
  g.e = fbar.e;
  g.prec = fbar.prec;
  g.lo = fbar.lo;
  g.c.reserve(fbar.c.size());
  for (const auto& a : fbar.c) g.c.push_back(W.teich(a));
  ls_normalize(g);
  return g;
}

series<gr_ctx> on_from_zmod(const gr_ctx& W, const zmod_ring& R,
                            const series<zmod_ring>& f) {
  if (R.m != W.pN()) throw domain_error("scalar modulus differs from p^N");
  series<gr_ctx> g;
  g.K = &W;
  g.e = f.e;
  g.prec = f.prec;
  g.lo = f.lo;
  g.c.reserve(f.c.size());
  for (const auto& a : f.c) g.c.push_back(W.from_int(static_cast<int64_t>(a)));
  ls_normalize(g);
  return g;
}

series<gr_ctx> sigma_on(const gr_ctx& W, const series<gr_ctx>& f) {
  const int64_t p = W.p();
  series<gr_ctx> g;
  g.K = &W;
  g.e = f.e;
  g.prec = pmul(f.prec, p);
  if (f.c.empty()) {
    g.lo = g.prec;
    return g;
  }
  g.lo = f.lo * p;
  g.c.assign(static_cast<size_t>((f.c.size() - 1) * static_cast<size_t>(p) + 1),
             W.zero());
  for (size_t i = 0; i < f.c.size(); ++i)
    g.c[i * static_cast<size_t>(p)] = W.sigma(f.c[i]);
  ls_normalize(g);
  return g;
}

series<gr_ctx> sigma_on_pow(const gr_ctx& W, const series<gr_ctx>& f, uint32_t k) {
  series<gr_ctx> g = f;
  for (uint32_t i = 0; i < k; ++i) g = sigma_on(W, g);
  return g;
}

series<gr_ctx> on_invert(const gr_ctx& W, const series<gr_ctx>& f, int64_t cap) {
  series<fq_ctx> fbar = on_residue(W, f);
  if (fbar.c.empty()) {
    if (prec_is_inf(fbar.prec)) throw not_invertible("residue is zero");
    throw precision_error("unit test undecided at this precision");
  }
  if (W.is_unit(f.c.front())) return ls_inv(f, cap);

  const int64_t v = f.lo;
  const int64_t vb = fbar.lo;
  const int64_t delta = vb - v;
  const uint32_t N = W.N();

  if (fbar.c.size() == 1) {
    // monomial residue: split off the exact Teichmuller monomial A and
    // invert the cofactor 1 + m, m in pO, by the finite geometric sum.
    // Result precision is f.prec - 2 vb - (N-2)*delta, the first two terms
    // being unavoidable for any inversion from f known mod u^prec.
    series<gr_ctx> one = ls_one(W, f.e);
    series<gr_ctx> minv =
        ls_monomial(W, W.teich(fbar.K->inv(fbar.c.front())), -vb, f.e);
    series<gr_ctx> m = ls_sub(ls_mul(f, minv), one);
    if (!on_residue(W, m).c.empty())
      throw domain_error("internal: residue survived monomial split");
    series<gr_ctx> s = one;
    for (uint32_t k = 1; k < N; ++k) s = ls_sub(one, ls_mul(m, s));
    return ls_truncate(ls_mul(minv, s), cap);
  }
  // absolute working precision: the answer is zh * sum_{k<N} w^k with
  // val(zh) = -vb and val(w) >= -delta, so every partial product needs
  // cap + vb + (N-1)*delta known exponents
  const int64_t T =
      prec_is_inf(cap) ? PREC_INF : cap + vb + static_cast<int64_t>(N - 1) * delta;

  series<gr_ctx> zh = on_teich_lift(W, ls_inv(fbar, padd(T, -v)));
  series<gr_ctx> one = ls_one(W, f.e);
  series<gr_ctx> w = ls_sub(one, ls_truncate(ls_mul(f, zh), T));
  series<fq_ctx> w0 = on_residue(W, w);
  if (!w0.c.empty())
    throw domain_error("internal: residue survived residue inversion");

  series<gr_ctx> s = one;
  for (uint32_t k = 1; k < N; ++k)
    s = ls_add(one, ls_truncate(ls_mul(w, s), T));
  return ls_truncate(ls_mul(zh, s), cap);
}

cong_result on_in_ideal(const gr_ctx& W, const series<gr_ctx>& z,
                        const series<gr_ctx>& g, int64_t shift, int64_t cap) {
  series<gr_ctx> q = ls_mul(z, on_invert(W, g, cap));
  return ls_zero_mod(q, shift);
}

tri on_is_o0_unit(const gr_ctx& W, const series<gr_ctx>& f) {
  for (size_t i = 0; i < f.c.size(); ++i) {
    int64_t n = f.lo + static_cast<int64_t>(i);
    if (n >= 0) break;
    if (!W.is_zero(f.c[i])) return tri::no;
  }
  if (f.prec < 1) return tri::undecided;
  return W.is_unit(ls_coeff(f, 0)) ? tri::yes : tri::no;
}

series<gr_ctx> on_rand(const gr_ctx& W, rng& r, int64_t lo, int64_t width,
                       int64_t prec) {
  std::vector<std::pair<int64_t, gr_elem>> ts;
  ts.reserve(static_cast<size_t>(width));
  for (int64_t n = lo; n < lo + width; ++n) ts.emplace_back(n, W.rand_elem(r));
  series<gr_ctx> f = ls_from_terms(W, ts, 1, prec);
  return f;
}

}  // namespace ramlift
