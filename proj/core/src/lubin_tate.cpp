#include "ramlift/lubin_tate.hpp"

#include <algorithm>

namespace ramlift {

namespace {

// p^k as a modulus; zmod_ring needs m to fit in int64
uint64_t ppow_checked(uint32_t p, uint32_t k) {
  unsigned __int128 m = 1;
  for (uint32_t i = 0; i < k; ++i) {
    m *= p;
    if (m > (static_cast<unsigned __int128>(1) << 62))
      throw precision_error("modulus headroom overflows 64-bit arithmetic");
  }
  return static_cast<uint64_t>(m);
}

// exponent k with p^k == m
uint32_t plog(uint64_t m, uint32_t p) {
  uint32_t k = 0;
  uint64_t v = 1;
  while (v < m) {
    v *= p;
    ++k;
  }
  if (v != m) throw domain_error("modulus is not a power of p");
  return k;
}

// extra digits consumed by the division steps: one per level of the
// p-power chain reaching degree D
uint32_t chain_depth(uint32_t p, int64_t D) {
  uint32_t k = 0;
  int64_t v = 1;
  while (v < D) {
    v *= p;
    ++k;
  }
  return k;
}

// Coefficients a_0..a_D of the unique series f with a_1 = c and
// f(pX + X^p) = p f + f^p over Z/m, m a power of p. Maintains
// incrementally: pw[k] = coefficients of f^k, and L = coefficients of
// f(pX + X^p) restricted to contributions landing above their source
// degree. At degree n the balance reads
//   a_n (p^n - p) = pw[p][n] - L[n]
// and the right side never involves a_n. When sampling, the quotient is
// only determined mod p^{N-1}; noise_scale = p^{N-1} marks that mode.
std::vector<uint64_t> endo_rec(const zmod_ring& Rw, uint32_t p, uint64_t c,
                               int64_t D, uint64_t noise_scale, rng* nz) {
  const uint64_t m = Rw.m;
  std::vector<uint64_t> pp(static_cast<size_t>(D + 1));
  pp[0] = 1 % m;
  for (int64_t k = 1; k <= D; ++k) pp[static_cast<size_t>(k)] = Rw.mul(pp[static_cast<size_t>(k - 1)], p % m);

  std::vector<std::vector<uint64_t>> pw(p + 1, std::vector<uint64_t>(static_cast<size_t>(D + 1), 0));
  pw[0][0] = 1 % m;
  std::vector<uint64_t> L(static_cast<size_t>(D + 1), 0);
  std::vector<uint64_t> a(static_cast<size_t>(D + 1), 0);

  auto append = [&](int64_t n, uint64_t v) {
    a[static_cast<size_t>(n)] = v;
    if (v == 0) return;
    // (f + v X^n)^k = sum_j C(k,j) v^j X^{jn} f^{k-j}; update high powers
    // first so the lower pw rows read pre-append values
    for (uint32_t k = p; k >= 2; --k) {
      uint64_t vj = 1 % m;
      uint64_t bin = 1;
      for (uint32_t j = 1; j <= k; ++j) {
        vj = Rw.mul(vj, v);
        bin = bin * (k - j + 1) / j;
        int64_t shift = static_cast<int64_t>(j) * n;
        if (shift > D) break;
        uint64_t f = Rw.mul(vj, bin % m);
        const auto& src = pw[k - j];
        auto& dst = pw[k];
        for (int64_t idx = shift; idx <= D; ++idx) {
          uint64_t s = src[static_cast<size_t>(idx - shift)];
          if (s) dst[static_cast<size_t>(idx)] = Rw.add(dst[static_cast<size_t>(idx)], Rw.mul(f, s));
        }
      }
    }
    pw[1][static_cast<size_t>(n)] = Rw.add(pw[1][static_cast<size_t>(n)], v);
    // v (pX + X^p)^n contributes v C(n,k) p^{n-k} at degree n + k(p-1);
    // the k = 0 term lands back on degree n whose balance is already
    // settled, so only k >= 1 is recorded
    for (int64_t k = 1; k <= n; ++k) {
      int64_t e = n + k * static_cast<int64_t>(p - 1);
      if (e > D) break;
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      uint64_t bm = mpz_fdiv_ui(b.get_mpz_t(), m);
      uint64_t term = Rw.mul(Rw.mul(v, bm), pp[static_cast<size_t>(n - k)]);
      L[static_cast<size_t>(e)] = Rw.add(L[static_cast<size_t>(e)], term);
    }
  };

  append(1, c);
  for (int64_t n = 2; n <= D; ++n) {
    uint64_t num = Rw.sub(pw[p][static_cast<size_t>(n)], L[static_cast<size_t>(n)]);
    if (static_cast<uint64_t>(n - 1) % (p - 1) != 0) {
      // both sides of the balance vanish identically off the grading
      if (num != 0) throw precision_error("endomorphism recursion left the support grading");
      continue;
    }
    if (num % p != 0) throw precision_error("endomorphism recursion hit a non-divisible step");
    uint64_t x = num / p;
    uint64_t rho = Rw.sub(pp[static_cast<size_t>(n - 1)], 1 % m);
    uint64_t v = Rw.mul(x, Rw.inv(rho));
    if (noise_scale > 1 && nz && n >= static_cast<int64_t>(p))
      v = Rw.add(v, Rw.mul(noise_scale % m, nz->below(p)));
    else if (noise_scale == 1 && nz && n >= static_cast<int64_t>(p))
      v = nz->below(m);
    append(n, v);
  }
  return a;
}

series<zmod_ring> coeffs_to_series(const zmod_ring& R, const std::vector<uint64_t>& a,
                                   uint64_t reduce_mod, int64_t prec) {
  std::vector<std::pair<int64_t, uint64_t>> ts;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t v = reduce_mod ? a[i] % reduce_mod : a[i];
    if (v) ts.emplace_back(static_cast<int64_t>(i), v);
  }
  return ls_from_terms(R, ts, 1, prec);
}

using biv_mat = std::vector<std::vector<uint64_t>>;

biv_mat biv_zero(int64_t deg) {
  biv_mat c(static_cast<size_t>(deg + 1));
  for (int64_t i = 0; i <= deg; ++i) c[static_cast<size_t>(i)].assign(static_cast<size_t>(deg + 1 - i), 0);
  return c;
}

biv_mat biv_mul(const zmod_ring& R, const biv_mat& A, const biv_mat& B, int64_t deg) {
  biv_mat C = biv_zero(deg);
  for (int64_t i = 0; i <= deg; ++i)
    for (int64_t j = 0; i + j <= deg; ++j) {
      uint64_t av = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!av) continue;
      for (int64_t k = 0; i + j + k <= deg; ++k)
        for (int64_t l = 0; i + j + k + l <= deg; ++l) {
          uint64_t bv = B[static_cast<size_t>(k)][static_cast<size_t>(l)];
          if (!bv) continue;
          auto& dst = C[static_cast<size_t>(i + k)][static_cast<size_t>(j + l)];
          dst = R.add(dst, R.mul(av, bv));
        }
    }
  return C;
}

// substitute X -> pX + X^p, Y -> pY + Y^p
biv_mat biv_sub_mult_p(const zmod_ring& R, const biv_mat& A, uint32_t p, int64_t deg) {
  biv_mat C = biv_zero(deg);
  // ([p]X)^i = sum_k C(i,k) p^{i-k} X^{i + k(p-1)}
  auto expand = [&](int64_t i) {
    std::vector<std::pair<int64_t, uint64_t>> out;
    for (int64_t k = 0; k <= i; ++k) {
      int64_t e = i + k * static_cast<int64_t>(p - 1);
      if (e > deg) break;
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
      uint64_t v = R.mul(mpz_fdiv_ui(b.get_mpz_t(), R.m), R.pow_u64(p % R.m, static_cast<uint64_t>(i - k)));
      if (v) out.emplace_back(e, v);
    }
    return out;
  };
  std::vector<std::vector<std::pair<int64_t, uint64_t>>> ex(static_cast<size_t>(deg + 1));
  for (int64_t i = 0; i <= deg; ++i) ex[static_cast<size_t>(i)] = expand(i);
  for (int64_t i = 0; i <= deg; ++i)
    for (int64_t j = 0; i + j <= deg; ++j) {
      uint64_t av = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!av) continue;
      for (auto& [ei, vi] : ex[static_cast<size_t>(i)])
        for (auto& [ej, vj] : ex[static_cast<size_t>(j)]) {
          if (ei + ej > deg) break;
          auto& dst = C[static_cast<size_t>(ei)][static_cast<size_t>(ej)];
          dst = R.add(dst, R.mul(av, R.mul(vi, vj)));
        }
    }
  return C;
}

}  // namespace

series<zmod_ring> lt_mult_p(const zmod_ring& R, uint32_t p) {
  std::vector<std::pair<int64_t, uint64_t>> ts = {
      {1, p % R.m}, {static_cast<int64_t>(p), 1 % R.m}};
  return ls_from_terms(R, ts);
}

series<zmod_ring> lt_endo(const zmod_ring& R, uint32_t p, const Int& c,
                          int64_t prec) {
  if (p < 3) throw domain_error("lt_endo: p must be an odd prime");
  if (prec < 1) throw domain_error("lt_endo: prec must be at least 1");
  uint32_t M = plog(R.m, p);
  uint32_t Mw = M + chain_depth(p, prec) + 1;
  zmod_ring Rw(ppow_checked(p, Mw));
  uint64_t cm = Rw.from_mpz(c);
  auto a = endo_rec(Rw, p, cm, prec, 0, nullptr);
  return coeffs_to_series(R, a, R.m, prec + 1);
}

series<zmod_ring> lt_commutant_sample(const zmod_ring& R, uint32_t p,
                                      uint32_t N, const Int& c, int64_t prec,
                                      rng& r) {
  if (p < 3) throw domain_error("lt_commutant_sample: p must be an odd prime");
  if (plog(R.m, p) != N) throw domain_error("lt_commutant_sample: R.m must equal p^N");
  uint64_t cm = R.from_mpz(c);
  if (!R.is_unit(cm)) throw domain_error("lt_commutant_sample: c must be a unit");
  uint64_t scale = 1;
  for (uint32_t i = 0; i + 1 < N; ++i) scale *= p;
  auto a = endo_rec(R, p, cm, prec, scale, &r);
  return coeffs_to_series(R, a, 0, prec + 1);
}

lt_biv lt_group_law(const zmod_ring& R, uint32_t p, int64_t deg) {
  if (p < 3) throw domain_error("lt_group_law: p must be an odd prime");
  if (deg < 1) throw domain_error("lt_group_law: deg must be at least 1");
  uint32_t M = plog(R.m, p);
  uint32_t Mw = M + chain_depth(p, deg) + 1;
  zmod_ring Rw(ppow_checked(p, Mw));
  biv_mat F = biv_zero(deg);
  F[1][0] = 1 % Rw.m;
  F[0][1] = 1 % Rw.m;
  for (int64_t lvl = 2; lvl <= deg; ++lvl) {
    // discrepancy D = F([p]X, [p]Y) - (pF + F^p); with F correct below
    // total degree lvl, the degree-lvl slice H obeys
    // (p^lvl - p) H = -D_lvl
    biv_mat A = biv_sub_mult_p(Rw, F, p, lvl);
    biv_mat Fp = F;
    for (uint32_t k = 1; k < p; ++k) Fp = biv_mul(Rw, Fp, F, lvl);
    uint64_t rho = Rw.sub(Rw.pow_u64(p % Rw.m, static_cast<uint64_t>(lvl - 1)), 1 % Rw.m);
    uint64_t ri = Rw.inv(rho);
    for (int64_t i = 0; i <= lvl; ++i) {
      int64_t j = lvl - i;
      uint64_t lhs = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
      uint64_t rhs = Rw.add(Rw.mul(p % Rw.m, F[static_cast<size_t>(i)][static_cast<size_t>(j)]),
                            Fp[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      uint64_t d = Rw.sub(lhs, rhs);
      if (d % p != 0) throw precision_error("group law recursion hit a non-divisible step");
      uint64_t h = Rw.mul(Rw.neg(d / p), ri);
      F[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Rw.add(F[static_cast<size_t>(i)][static_cast<size_t>(j)], h);
    }
  }
  lt_biv out;
  out.p = p;
  out.mod = R.m;
  out.deg = deg;
  out.c = biv_zero(deg);
  for (int64_t i = 0; i <= deg; ++i)
    for (int64_t j = 0; i + j <= deg; ++j)
      out.c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          F[static_cast<size_t>(i)][static_cast<size_t>(j)] % R.m;
  return out;
}

uint64_t lt_biv_eval(const lt_biv& F, const zmod_ring& R, uint64_t x,
                     uint64_t y) {
  std::vector<uint64_t> xp(static_cast<size_t>(F.deg + 1)), yp(static_cast<size_t>(F.deg + 1));
  xp[0] = 1 % R.m;
  yp[0] = 1 % R.m;
  for (int64_t i = 1; i <= F.deg; ++i) {
    xp[static_cast<size_t>(i)] = R.mul(xp[static_cast<size_t>(i - 1)], x % R.m);
    yp[static_cast<size_t>(i)] = R.mul(yp[static_cast<size_t>(i - 1)], y % R.m);
  }
  uint64_t acc = 0;
  for (int64_t i = 0; i <= F.deg; ++i)
    for (int64_t j = 0; i + j <= F.deg; ++j) {
      uint64_t c = F.c[static_cast<size_t>(i)][static_cast<size_t>(j)] % R.m;
      if (!c) continue;
      acc = R.add(acc, R.mul(c, R.mul(xp[static_cast<size_t>(i)], yp[static_cast<size_t>(j)])));
    }
  return acc;
}

std::vector<Rat> artin_hasse_q(uint32_t p, int64_t prec) {
  if (prec < 0) throw domain_error("artin_hasse_q: negative precision");
  std::vector<Rat> E(static_cast<size_t>(prec + 1));
  E[0] = Rat(1);
  for (int64_t n = 1; n <= prec; ++n) {
    // n E_n = sum over p-power steps p^j <= n of E_{n - p^j}
    Rat s(0);
    for (int64_t q = 1; q <= n; q *= p) s += E[static_cast<size_t>(n - q)];
    E[static_cast<size_t>(n)] = s / Rat(static_cast<long>(n));
    const Rat& v = E[static_cast<size_t>(n)];
    if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), p))
      throw domain_error("artin_hasse_q: coefficient is not p-integral");
  }
  return E;
}

series<zmod_ring> artin_hasse(const zmod_ring& R, uint32_t p, int64_t prec) {
  plog(R.m, p);
  auto E = artin_hasse_q(p, prec);
  std::vector<std::pair<int64_t, uint64_t>> ts;
  for (size_t i = 0; i < E.size(); ++i) {
    uint64_t num = R.from_mpz(E[i].get_num());
    uint64_t den = R.from_mpz(E[i].get_den());
    uint64_t v = R.mul(num, R.inv(den));
    if (v) ts.emplace_back(static_cast<int64_t>(i), v);
  }
  return ls_from_terms(R, ts, 1, prec + 1);
}

lt_canonical canonical_elems(const gr_ctx& W, int64_t prec) {
  uint32_t p = W.p(), N = W.N();
  int64_t need = static_cast<int64_t>(p - 1);
  for (uint32_t i = 0; i + 1 < N; ++i) need *= p;
  need += 2;
  if (prec < need) throw domain_error("canonical_elems: prec too small to see the top term of t");
  zmod_ring R(W.pN());
  std::vector<series<zmod_ring>> uz(N + 1);
  uz[N] = ls_monomial(R, 1 % R.m, 1, 1, prec);
  for (uint32_t m = N; m-- > 0;) {
    const auto& g = uz[m + 1];
    uz[m] = ls_add(ls_scale(g, R.from_int(p)), ls_pow(g, p, prec));
  }
  lt_canonical out;
  out.u.resize(N + 1);
  for (uint32_t m = 0; m <= N; ++m) {
    std::vector<std::pair<int64_t, gr_elem>> ts;
    for (size_t i = 0; i < uz[m].c.size(); ++i) {
      uint64_t v = uz[m].c[i];
      if (v) ts.emplace_back(uz[m].lo + static_cast<int64_t>(i), W.from_int(static_cast<int64_t>(v)));
    }
    out.u[m] = ls_from_terms(W, ts, 1, prec);
  }
  auto cpow = [&](const series<gr_ctx>& f) { return ls_pow(f, p - 1, prec); };
  series<gr_ctx> cp = ls_monomial(W, W.from_int(static_cast<int64_t>(p)), 0, 1, PREC_INF);
  out.t = ls_add(cp, cpow(out.u[1]));
  out.sigma_t = ls_add(cp, cpow(out.u[0]));
  return out;
}

}  // namespace ramlift
