#include "ramlift/witt_coords.hpp"

#include <utility>

namespace ramlift {

namespace {

using sring = series_ring<fq_ctx>;

void require_integral(const wcoord& x, const char* who) {
  for (const auto& f : x.c)
    if (!f.c.empty() && f.lo < 0)
      throw domain_error(std::string(who) + ": negative exponent coordinate");
}

void require_match(const wcoord& x, const wcoord& y) {
  if (x.p != y.p || x.levels() != y.levels())
    throw domain_error("witt coordinate shape mismatch");
  if (x.k->p() != y.k->p() || x.k->d() != y.k->d() ||
      x.k->modulus() != y.k->modulus())
    throw domain_error("witt coordinate field mismatch");
}

int64_t min_prec(const wcoord& x) {
  int64_t m = PREC_INF;
  for (const auto& f : x.c) m = pmin(m, f.prec);
  return m;
}

wcoord from_wvec(const fq_ctx& k, uint32_t p, wvec<sring>&& v) {
  wcoord z;
  z.k = &k;
  z.p = p;
  z.c = std::move(v.a);
  return z;
}

wvec<sring> to_wvec(const sring& B, const wcoord& x) {
  wvec<sring> v;
  v.a.reserve(x.c.size());
  for (const auto& f : x.c) v.a.push_back(B.clip(f));
  return v;
}

void require_field(const gr_ctx& W, const series<fq_ctx>& ubar) {
  const fq_ctx& k = W.residue_field();
  if (!ubar.K || ubar.K->p() != k.p() || ubar.K->d() != k.d() ||
      ubar.K->modulus() != k.modulus())
    throw domain_error("residue field mismatch");
  if (ubar.e != 1) throw domain_error("uniformizer series must have e == 1");
}

}  // namespace

wcoord wc_zero(const fq_ctx& k, uint32_t p, uint32_t N, int64_t prec) {
  wcoord z;
  z.k = &k;
  z.p = p;
  z.c.assign(N, ls_zero(k, prec));
  return z;
}

wcoord wc_level(const fq_ctx& k, uint32_t p, uint32_t N, uint32_t i,
                const series<fq_ctx>& x) {
  if (i >= N) throw domain_error("level index out of range");
  wcoord z = wc_zero(k, p, N, x.prec);
  z.c[i] = x;
  return z;
}

wcoord wc_rand(const fq_ctx& k, uint32_t p, uint32_t N, rng& r, int64_t lo,
               int64_t width, int64_t prec) {
  if (lo < 0) throw domain_error("wc_rand: negative support");
  wcoord z;
  z.k = &k;
  z.p = p;
  for (uint32_t i = 0; i < N; ++i) {
    std::vector<std::pair<int64_t, fq_elem>> ts;
    for (int64_t n = lo; n < lo + width; ++n) ts.emplace_back(n, k.rand_elem(r));
    z.c.push_back(ls_from_terms(k, ts, 1, prec));
  }
  return z;
}

wcoord wc_add(const wcoord& x, const wcoord& y, int64_t cap) {
  require_match(x, y);
  require_integral(x, "wc_add");
  require_integral(y, "wc_add");
  int64_t P = pmin(cap, pmin(min_prec(x), min_prec(y)));
  sring B(*x.k, P);
  const witt_table& T = get_witt_table(x.p, x.levels());
  return from_wvec(*x.k, x.p, witt_add(T, B, to_wvec(B, x), to_wvec(B, y)));
}

wcoord wc_neg(const wcoord& x) {
  wcoord z = x;
  for (auto& f : z.c) f = ls_neg(f);
  return z;
}

wcoord wc_sub(const wcoord& x, const wcoord& y, int64_t cap) {
  return wc_add(x, wc_neg(y), cap);
}

wcoord wc_mul(const wcoord& x, const wcoord& y, int64_t cap) {
  require_match(x, y);
  require_integral(x, "wc_mul");
  require_integral(y, "wc_mul");
  int64_t P = pmin(cap, pmin(min_prec(x), min_prec(y)));
  sring B(*x.k, P);
  const witt_table& T = get_witt_table(x.p, x.levels());
  return from_wvec(*x.k, x.p, witt_mul(T, B, to_wvec(B, x), to_wvec(B, y)));
}

wcoord wc_mult_p(const wcoord& x, int64_t cap) {
  require_integral(x, "wc_mult_p");
  int64_t P = pmin(cap, min_prec(x));
  sring B(*x.k, P);
  return from_wvec(*x.k, x.p, witt_mult_p_charp(B, to_wvec(B, x)));
}

tri wc_zero3(const wcoord& x) {
  bool exact = true;
  for (const auto& f : x.c) {
    tri t = ls_zero3(f);
    if (t == tri::no) return tri::no;
    if (t == tri::undecided) exact = false;
  }
  return exact ? tri::yes : tri::undecided;
}

tri wc_eq3(const wcoord& x, const wcoord& y, int64_t cap) {
  return wc_zero3(wc_sub(x, y, cap));
}

wcoord to_witt_coords(const gr_ctx& W, const series<gr_ctx>& z,
                      const series<fq_ctx>& ubar, int64_t cap) {
  require_field(W, ubar);
  if (z.e != 1) throw domain_error("to_witt_coords: z must have e == 1");
  if (!z.c.empty() && z.lo < 0)
    throw domain_error("to_witt_coords: z must be integral");
  if (ubar.c.empty()) throw domain_error("to_witt_coords: zero uniformizer");
  const fq_ctx& k = *ubar.K;
  const uint32_t p = W.p(), N = W.N();
  int64_t w = ubar.lo;
  if (w < 1) throw domain_error("to_witt_coords: uniformizer needs val >= 1");

  // errors: truncating z costs w * z.prec, the uniformizer itself costs
  // ubar.prec (worst at exponent 1, level 0)
  int64_t P = pmin(cap, pmin(pmul(z.prec, w), ubar.prec));
  sring B(k, P);
  const witt_table& T = get_witt_table(p, N);

  std::vector<wvec<sring>> leaves;
  series<fq_ctx> pw = B.one();
  for (size_t idx = 0; idx < z.c.size(); ++idx) {
    int64_t j = z.lo + static_cast<int64_t>(idx);
    if (idx == 0)
      pw = (j == 0) ? B.one() : B.clip(ls_pow(ubar, static_cast<uint64_t>(j), P));
    else
      pw = B.mul(pw, B.clip(ubar));
    if (W.is_zero(z.c[idx])) continue;
    std::vector<fq_elem> digs = W.digits(z.c[idx]);
    for (uint32_t i = 0; i < N; ++i) {
      if (k.is_zero(digs[i])) continue;
      series<fq_ctx> val = ls_scale(pw, digs[i]);
      for (uint32_t f = 0; f < i; ++f) val = B.frob(val);
      wvec<sring> leaf = witt_zero(B, N);
      leaf.a[i] = std::move(val);
      leaves.push_back(std::move(leaf));
    }
  }
  return from_wvec(k, p, witt_sum_tree(T, B, std::move(leaves), N));
}

wcoord wc_eval(const gr_ctx& W, const series<gr_ctx>& z, const wcoord& S,
               int64_t cap) {
  const fq_ctx& k = W.residue_field();
  if (S.k->p() != k.p() || S.k->d() != k.d() || S.k->modulus() != k.modulus())
    throw domain_error("wc_eval: residue field mismatch");
  if (z.e != 1) throw domain_error("wc_eval: z must have e == 1");
  if (!z.c.empty() && z.lo < 0) throw domain_error("wc_eval: z must be integral");
  if (S.levels() != W.N()) throw domain_error("wc_eval: level count differs from N");
  require_integral(S, "wc_eval");
  const uint32_t p = W.p(), N = W.N();
  int64_t vmin = PREC_INF;
  for (const auto& f : S.c) vmin = pmin(vmin, ls_vlb(f));
  if (vmin < 1) throw domain_error("wc_eval: coordinates need val >= 1");

  int64_t P = pmin(cap, pmin(min_prec(S), pmul(z.prec, vmin)));
  sring B(k, P);
  const witt_table& T = get_witt_table(p, N);
  wvec<sring> Sv = to_wvec(B, S);

  std::vector<wvec<sring>> leaves;
  wvec<sring> pw = witt_teich(B, N, B.one());
  for (size_t idx = 0; idx < z.c.size(); ++idx) {
    int64_t j = z.lo + static_cast<int64_t>(idx);
    if (idx == 0) {
      for (int64_t m = 0; m < j; ++m) pw = witt_mul(T, B, pw, Sv);
    } else {
      pw = witt_mul(T, B, pw, Sv);
    }
    if (W.is_zero(z.c[idx])) continue;
    std::vector<fq_elem> digs = W.digits(z.c[idx]);
    for (uint32_t i = 0; i < N; ++i) {
      if (k.is_zero(digs[i])) continue;
      series<fq_ctx> cs = ls_monomial(k, digs[i], 0, 1, P);
      wvec<sring> leaf = witt_teich_scale(B, p, cs, pw);
      for (uint32_t f = 0; f < i; ++f) leaf = witt_mult_p_charp(B, leaf);
      leaves.push_back(std::move(leaf));
    }
  }
  return from_wvec(k, p, witt_sum_tree(T, B, std::move(leaves), N));
}

on_expansion from_witt_coords(const gr_ctx& W, const wcoord& x,
                              const series<fq_ctx>& ubar) {
  require_field(W, ubar);
  require_integral(x, "from_witt_coords");
  if (x.levels() != W.N())
    throw domain_error("from_witt_coords: level count differs from N");
  if (ubar.c.empty()) throw domain_error("from_witt_coords: zero uniformizer");
  const fq_ctx& k = *ubar.K;
  const uint32_t p = W.p(), N = W.N();
  const int64_t w = ubar.lo;
  if (w < 1) throw domain_error("from_witt_coords: uniformizer needs val >= 1");
  const witt_table& T = get_witt_table(p, N);
  const fq_elem linv = k.inv(ls_lead(ubar));

  on_expansion out;
  std::vector<series<fq_ctx>> rem = x.c;
  int64_t P = pmin(min_prec(x), ubar.prec);
  series<gr_ctx> acc = ls_zero(W, PREC_INF);
  gr_elem pd = W.one();

  // powers of ubar at the initial precision, grown on demand and clipped to
  // the per-round cap where used
  sring B0(k, P);
  std::vector<series<fq_ctx>> upow{B0.one()};
  auto power = [&](int64_t m) -> const series<fq_ctx>& {
    while (static_cast<int64_t>(upow.size()) <= m)
      upow.push_back(B0.mul(upow.back(), ubar));
    return upow[static_cast<size_t>(m)];
  };

  for (uint32_t d = 0; d < N; ++d) {
    if (!prec_is_inf(P) && P <= 0) {
      out.verdict = tri::undecided;
      out.digit = d;
      out.exponent = P;
      return out;
    }
    sring B(k, P);
    series<fq_ctx> r = B.clip(rem[0]);
    // digit series read greedily off coordinate 0: the lowest remaining term
    // a*v^e must be b*ubar^m with m = e/w and b = a / lead(ubar)^m
    std::vector<std::pair<int64_t, fq_elem>> terms;
    std::vector<series<fq_ctx>> leaves;
    while (!r.c.empty()) {
      int64_t e = r.lo;
      if (e % w != 0) {
        out.verdict = tri::no;
        out.digit = d;
        out.exponent = e;
        return out;
      }
      int64_t m = e / w;
      fq_elem b = k.mul(ls_lead(r), k.pow_u64(linv, static_cast<uint64_t>(m)));
      series<fq_ctx> piece = B.clip(ls_scale(power(m), b));
      terms.emplace_back(m, b);
      leaves.push_back(piece);
      r = ls_sub(r, piece);
    }
    series<fq_ctx> gd =
        ls_from_terms(k, terms, 1, prec_is_inf(P) ? PREC_INF : cdiv_i64(P, w));
    acc = ls_add(acc, ls_scale(on_teich_lift(W, gd), pd));
    pd = W.times_p(pd);

    uint32_t len = N - d;
    if (len == 1) break;
    // subtract the Teichmuller sum of this digit and shift one level down
    std::vector<wvec<sring>> wl;
    wl.reserve(leaves.size());
    for (auto& piece : leaves) {
      wvec<sring> leaf = witt_zero(B, len);
      leaf.a[0] = B.neg(piece);
      wl.push_back(std::move(leaf));
    }
    wvec<sring> cur;
    cur.a.reserve(len);
    for (uint32_t i = 0; i < len; ++i) cur.a.push_back(B.clip(rem[i]));
    wvec<sring> diff =
        witt_add(T, B, cur, witt_sum_tree(T, B, std::move(wl), len));
    if (!diff.a[0].c.empty())
      throw domain_error("internal: coordinate 0 survived digit subtraction");
    rem.assign(len - 1, ls_zero(k, P));
    for (uint32_t i = 1; i < len; ++i) {
      try {
        rem[i - 1] = ls_pth_root(diff.a[i], p);
      } catch (const non_pth_power& ex) {
        out.verdict = tri::no;
        out.digit = d + 1;
        out.exponent = ex.exponent;
        return out;
      }
    }
    P = prec_is_inf(P) ? PREC_INF : cdiv_i64(P, static_cast<int64_t>(p));
  }

  out.verdict = tri::yes;
  out.z = std::move(acc);
  return out;
}

}  // namespace ramlift
