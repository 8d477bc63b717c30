#include "ramlift/embedding.hpp"

#include <utility>
#include <vector>

#include "ramlift/on_ring.hpp"
#include "ramlift/scalar_rings.hpp"

namespace ramlift {

namespace {

int64_t pow_i64(int64_t b, uint32_t e) {
  int64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > (int64_t(1) << 40)) throw domain_error("emb_params: degree overflow");
    r *= b;
  }
  return r;
}

emb_params base_params(uint32_t p, uint32_t N, uint32_t d, uint32_t nstar) {
  if (p < 2 || N == 0 || d == 0)
    throw domain_error("emb_params: p, N, d must be positive");
  if (nstar == 0) throw domain_error("emb_params: nstar must be positive");
  emb_params par;
  par.p = p;
  par.N = N;
  par.d = d;
  par.nstar = nstar;
  par.q = pow_i64(p, nstar);
  return par;
}

void check_bstar(const emb_params& par) {
  if (par.bstar <= 0) throw domain_error("emb_params: bstar must be positive");
  if (par.bstar % par.p == 0)
    throw domain_error("emb_params: bstar must be prime to p");
}

// canonical tower elements in the new variable, deep enough that every
// twisted modulus below keeps more precision than the expansion it meets
lt_canonical primed_elems(const gr_ctx& W, const emb_params& par,
                          int64_t zprec) {
  int64_t zp = prec_is_inf(zprec) ? 0 : zprec;
  int64_t pc = cdiv_i64(zp * static_cast<int64_t>(W.p()), par.q) +
               4 * pow_i64(W.p(), W.N()) + 8;
  return canonical_elems(W, pc);
}

}  // namespace

emb_params emb_from_bstar(uint32_t p, uint32_t N, uint32_t d, uint32_t nstar,
                          int64_t bstar) {
  emb_params par = base_params(p, N, d, nstar);
  par.bstar = bstar;
  check_bstar(par);
  par.rstar = rat(bstar, par.q - 1);
  return par;
}

emb_params emb_from_rstar(uint32_t p, uint32_t N, uint32_t d, uint32_t nstar,
                          const Rat& rstar) {
  emb_params par = base_params(p, N, d, nstar);
  Rat b = rstar * (par.q - 1);
  if (!rat_is_int(b))
    throw domain_error("emb_params: rstar (q - 1) is not an integer");
  if (!b.get_num().fits_slong_p())
    throw domain_error("emb_params: bstar overflows the supported range");
  par.bstar = b.get_num().get_si();
  check_bstar(par);
  par.rstar = rstar;
  return par;
}

bool emb_in_window(const emb_params& par, int64_t a) {
  if (a <= 0) throw domain_error("emb_in_window: weight must be positive");
  return par.bstar + par.q >
         par.q * (a + 1) * pow_i64(par.p, par.N - 1);
}

series<fq_ctx> emb_ubar(const fq_ctx& k, const emb_params& par, int64_t prec) {
  if (prec <= par.q + 1)
    throw domain_error("emb_ubar: precision does not reach past the lead");
  zmod_ring R(par.p);
  int64_t inner = cdiv_i64(prec, par.bstar) + 2;
  series<zmod_ring> E = artin_hasse(R, par.p, inner);
  std::vector<std::pair<int64_t, fq_elem>> ts;
  for (size_t i = 0; i < E.c.size(); ++i) {
    if (E.c[i] == 0) continue;
    int64_t n = E.lo + static_cast<int64_t>(i);
    ts.emplace_back(n * par.bstar, k.from_int(static_cast<int64_t>(E.c[i])));
  }
  series<fq_ctx> eb = ls_from_terms(k, ts, 1, pmul(E.prec, par.bstar));
  series<fq_ctx> u = ls_shift(ls_inv(eb, prec), par.q);
  return ls_truncate(u, prec);
}

std::vector<series<fq_ctx>> emb_weierstrass(const fq_ctx& k,
                                            const emb_params& par,
                                            int64_t prec) {
  if (k.p() != par.p || k.d() != par.d)
    throw domain_error("emb_weierstrass: field does not match the parameters");
  if (prec < 2) throw domain_error("emb_weierstrass: window below the lead");
  const int64_t q = par.q;
  const int64_t M = prec;
  // X-degrees beyond this can no longer reach the factor modulo ubar^M:
  // each correction pass lowers the reachable degree by at most q
  const int64_t D = q * (M + 2) + par.bstar;

  // F(X) = X^q - ubar E(X^{bstar}) as a vector of ubar-coefficients
  zmod_ring R(par.p);
  series<zmod_ring> ah = artin_hasse(R, par.p, D / par.bstar + 2);
  std::vector<series<fq_ctx>> F(static_cast<size_t>(D) + 1, ls_zero(k, M));
  F[static_cast<size_t>(q)] =
      ls_add(F[static_cast<size_t>(q)], ls_one(k));
  for (size_t i = 0; i < ah.c.size(); ++i) {
    if (ah.c[i] == 0) continue;
    int64_t deg = (ah.lo + static_cast<int64_t>(i)) * par.bstar;
    if (deg > D) break;
    fq_elem a = k.from_int(-static_cast<int64_t>(ah.c[i]));
    F[static_cast<size_t>(deg)] =
        ls_add(F[static_cast<size_t>(deg)], ls_monomial(k, a, 1, 1, M));
  }

  // Hensel split F = P U against the reduction F = X^q mod ubar; adding the
  // full residual to both factors gains one power of ubar per pass
  std::vector<series<fq_ctx>> P(static_cast<size_t>(q) + 1, ls_zero(k, M));
  P[static_cast<size_t>(q)] = ls_one(k, 1, M);
  std::vector<series<fq_ctx>> U(static_cast<size_t>(D - q) + 1,
                                ls_zero(k, M));
  U[0] = ls_one(k, 1, M);
  bool clean = false;
  for (int64_t pass = 0; pass <= M + 1 && !clean; ++pass) {
    std::vector<series<fq_ctx>> rem = F;
    for (size_t i = 0; i < P.size(); ++i) {
      if (P[i].c.empty()) continue;
      for (size_t j = 0; j < U.size(); ++j) {
        if (U[j].c.empty()) continue;
        size_t t = i + j;
        if (t > static_cast<size_t>(D)) break;
        rem[t] = ls_sub(rem[t], ls_mul(P[i], U[j]));
      }
    }
    clean = true;
    for (size_t t = 0; t <= static_cast<size_t>(D); ++t) {
      if (rem[t].c.empty()) continue;
      clean = false;
      if (t < static_cast<size_t>(q))
        P[t] = ls_truncate(ls_add(P[t], rem[t]), M);
      else
        U[t - static_cast<size_t>(q)] =
            ls_truncate(ls_add(U[t - static_cast<size_t>(q)], rem[t]), M);
    }
  }
  if (!clean)
    throw precision_error("emb_weierstrass: factorization did not converge");

  if (P[0].c.empty() || ls_val(P[0]) != 1)
    throw precision_error("emb_weierstrass: factor is not Eisenstein");
  for (size_t i = 1; i < static_cast<size_t>(q); ++i)
    if (!P[i].c.empty() && ls_val(P[i]) < 1)
      throw precision_error("emb_weierstrass: factor is not Eisenstein");
  P[static_cast<size_t>(q)] = ls_one(k);
  return P;
}

int64_t emb_weierstrass_prec(const emb_params& par) {
  return cdiv_i64(par.bstar + par.q - 1, par.q) + 10;
}

int64_t emb_default_prec(const emb_params& par, int64_t a) {
  int64_t pn1 = pow_i64(par.p, par.N - 1);
  int64_t window =
      par.q * pn1 * (2 * (static_cast<int64_t>(par.p) - 1) + 3 * a) + 48;
  return pn1 * window;
}

emb_context embed_ext(const gr_ctx& W, const emb_params& par, int64_t prec) {
  if (W.p() != par.p || W.N() != par.N || W.residue_field().d() != par.d)
    throw domain_error("embed_ext: ring does not match the parameters");
  const fq_ctx& k = W.residue_field();

  emb_context E;
  E.par = par;
  E.ubar = emb_ubar(k, par, prec);

  int64_t prec_u = cdiv_i64(prec, par.q) + 2;
  lt_canonical T = canonical_elems(W, prec_u);

  E.uN_img = wc_level(k, par.p, par.N, 0, E.ubar);
  E.u1_img = to_witt_coords(W, T.u[1], E.ubar, prec);
  E.u0_img = to_witt_coords(W, T.u[0], E.ubar, prec);
  E.t_img = to_witt_coords(W, T.t, E.ubar, prec);

  series<fq_ctx> vid = ls_monomial(k, k.one(), 1);
  E.uN_exp = from_witt_coords(W, E.uN_img, vid);
  E.u1_exp = from_witt_coords(W, E.u1_img, vid);
  E.u0_exp = from_witt_coords(W, E.u0_img, vid);
  E.t_exp = from_witt_coords(W, E.t_img, vid);
  return E;
}

cong_result emb_u1_ratio_cong(const gr_ctx& W, const emb_context& E,
                              int64_t e) {
  if (E.u1_exp.verdict != tri::yes)
    throw domain_error("emb_u1_ratio_cong: u1 expansion is missing");
  lt_canonical T = primed_elems(W, E.par, E.u1_exp.z.prec);
  series<gr_ctx> tw = q_twist(W, T.u[1], E.par.nstar);
  series<gr_ctx> x = ls_mul(E.u1_exp.z, on_invert(W, tw));
  series<gr_ctx> dev = ls_sub(x, ls_one(W));
  return on_in_ideal_oplus(W, dev, ls_pow(tw, e), PREC_INF);
}

tri emb_u0_ratio_unit(const gr_ctx& W, const emb_context& E) {
  if (E.u0_exp.verdict != tri::yes)
    throw domain_error("emb_u0_ratio_unit: u0 expansion is missing");
  lt_canonical T = primed_elems(W, E.par, E.u0_exp.z.prec);
  series<gr_ctx> tw = q_twist(W, T.u[0], E.par.nstar);
  series<gr_ctx> x = ls_mul(E.u0_exp.z, on_invert(W, tw));
  return on_is_o0_unit(W, x);
}

cong_result emb_t_ratio_cong(const gr_ctx& W, const emb_context& E,
                             int64_t e) {
  if (E.t_exp.verdict != tri::yes)
    throw domain_error("emb_t_ratio_cong: t expansion is missing");
  lt_canonical T = primed_elems(W, E.par, E.t_exp.z.prec);
  series<gr_ctx> tw_t = q_twist(W, T.t, E.par.nstar);
  series<gr_ctx> y = ls_mul(E.t_exp.z, on_invert(W, tw_t));
  series<gr_ctx> dev = ls_sub(sigma_on(W, y), ls_one(W));
  series<gr_ctx> tw_u0 = q_twist(W, T.u[0], E.par.nstar);
  return on_in_ideal_oplus(W, dev, ls_pow(tw_u0, e), PREC_INF);
}

}  // namespace ramlift
