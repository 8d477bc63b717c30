#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ramlift/embedding.hpp>
#include <ramlift/on_ring.hpp>

using namespace ramlift;

// the anchor cell used throughout: degree 3 extension with bstar = 16,
// the smallest prime-to-3 value inside the weight-1 window
static emb_params anchor() { return emb_from_bstar(3, 2, 1, 1, 16); }

TEST_CASE("extension parameters and the depth window") {
  emb_params par = anchor();
  CHECK(par.q == 3);
  CHECK(par.rstar == rat(8));

  emb_params par2 = emb_from_rstar(3, 2, 1, 1, rat(8));
  CHECK(par2.bstar == 16);

  CHECK(emb_in_window(par, 1));
  CHECK(!emb_in_window(emb_from_bstar(3, 2, 1, 1, 14), 1));
  CHECK(!emb_in_window(par, 2));
  CHECK(emb_in_window(emb_from_bstar(3, 2, 1, 1, 26), 2));

  // bstar = 16 is the least choice that clears q * astar = 15 and stays
  // prime to p
  for (int64_t b = 1; b < 16; ++b) {
    if (b % 3 == 0) continue;
    CHECK(!emb_in_window(emb_from_bstar(3, 2, 1, 1, b), 1));
  }

  CHECK(emb_in_window(emb_from_bstar(5, 2, 1, 1, 46), 1));
  CHECK(!emb_in_window(emb_from_bstar(5, 2, 1, 1, 44), 1));
}

TEST_CASE("residue image of the base uniformizer") {
  fq_ctx k(3, 1);
  emb_params par = anchor();
  series<fq_ctx> ub = emb_ubar(k, par, 200);

  CHECK(ls_val(ub) == 3);
  CHECK(k.eq(ls_lead(ub), k.one()));
  CHECK(k.eq(ls_coeff(ub, 3 + 16), k.from_int(-1)));
  CHECK(k.eq(ls_coeff(ub, 3 + 32), k.from_int(2)));
  for (int64_t n = 4; n < 19; ++n) CHECK(k.is_zero(ls_coeff(ub, n)));

  // multiplying the Artin-Hasse factor back in must recover the plain
  // monomial of degree q
  zmod_ring R(3);
  series<zmod_ring> E = artin_hasse(R, 3, 14);
  std::vector<std::pair<int64_t, fq_elem>> ts;
  for (size_t i = 0; i < E.c.size(); ++i)
    if (E.c[i] != 0)
      ts.emplace_back((E.lo + (int64_t)i) * 16,
                      k.from_int((int64_t)E.c[i]));
  series<fq_ctx> eb = ls_from_terms(k, ts, 1, pmul(E.prec, 16));
  series<fq_ctx> diff = ls_sub(ls_mul(ub, eb), ls_monomial(k, k.one(), 3));
  CHECK(diff.c.empty());
  CHECK(!prec_is_inf(diff.prec));
}

TEST_CASE("embedding the canonical tower at the anchor cell") {
  gr_ctx W(3, 2, 1);
  emb_params par = anchor();
  int64_t prec = emb_default_prec(par, 1);
  CHECK(prec == 333);
  emb_context E = embed_ext(W, par, prec);

  CHECK(E.u1_exp.verdict == tri::yes);
  CHECK(E.u0_exp.verdict == tri::yes);
  CHECK(E.t_exp.verdict == tri::yes);

  // the Teichmuller lift of the old uniformizer is not a series in the new
  // one; the first obstruction is the level-1 cross term at p q + bstar
  CHECK(E.uN_exp.verdict == tri::no);
  CHECK(E.uN_exp.digit == 1);
  CHECK(E.uN_exp.exponent == 3 * 3 + 16);

  CHECK(ls_val(E.t_exp.z) == 0);
  CHECK(W.eq(ls_coeff(E.t_exp.z, 0), W.from_int(3)));

  // residues of the expansions are the expected powers of the image
  CHECK(ls_zero3(ls_sub(on_residue(W, E.u1_exp.z), ls_pow(E.ubar, 3))) !=
        tri::no);
  CHECK(ls_zero3(ls_sub(on_residue(W, E.u0_exp.z), ls_pow(E.ubar, 9))) !=
        tri::no);
  CHECK(ls_zero3(ls_sub(on_residue(W, E.t_exp.z), ls_pow(E.ubar, 6))) !=
        tri::no);

  // digit 1 of the level-1 expansion picks up a carry against the plain
  // image: the deviation starts exactly at (p q + bstar) + q - p q
  series<fq_ctx> d1 = ls_sub(on_digit(W, E.u1_exp.z, 1), E.ubar);
  CHECK(ls_val(d1) == 25);
  CHECK(W.residue_field().eq(ls_lead(d1), W.residue_field().from_int(-1)));

  // evaluating the expansions back at the Teichmuller image returns the
  // original coordinates
  series<fq_ctx> vid = ls_monomial(W.residue_field(), W.residue_field().one(), 1);
  CHECK(wc_eq3(to_witt_coords(W, E.u1_exp.z, vid, 100), E.u1_img, 100) !=
        tri::no);
  CHECK(wc_eq3(to_witt_coords(W, E.t_exp.z, vid, 100), E.t_img, 100) !=
        tri::no);

  // precision bookkeeping: one digit peel divides the window by p
  CHECK(E.u1_exp.z.prec >= prec / 3 - 2);
  CHECK(E.u1_exp.z.prec <= prec);

  // a window short of the obstruction depth reports a shallow yes with the
  // matching precision; one long enough flips to no
  emb_context Elow = embed_ext(W, par, 20);
  CHECK(Elow.uN_exp.verdict == tri::yes);
  CHECK(Elow.uN_exp.z.prec <= 20);
  emb_context Emid = embed_ext(W, par, 30);
  CHECK(Emid.uN_exp.verdict == tri::no);
  CHECK(Emid.uN_exp.exponent == 25);
}

TEST_CASE("level comparisons across the extension") {
  gr_ctx W(3, 2, 1);
  emb_params par = anchor();
  emb_context E = embed_ext(W, par, emb_default_prec(par, 1));

  CHECK(emb_u1_ratio_cong(W, E, 1).verdict == tri::yes);
  CHECK(emb_u0_ratio_unit(W, E) == tri::yes);
  CHECK(emb_t_ratio_cong(W, E, 1).verdict == tri::yes);

  // one exponent higher fails at the minimal bstar but holds again once
  // bstar clears the deeper window
  cong_result aux = emb_u1_ratio_cong(W, E, 2);
  CHECK(aux.verdict == tri::no);
  CHECK(aux.witness_exp < 1);

  emb_params fat = emb_from_bstar(3, 2, 1, 1, 26);
  emb_context Ef = embed_ext(W, fat, emb_default_prec(fat, 2));
  CHECK(emb_u1_ratio_cong(W, Ef, 2).verdict == tri::yes);
  CHECK(emb_u1_ratio_cong(W, Ef, 1).verdict == tri::yes);

  // undersized bstar breaks the level-1 comparison
  emb_params thin = emb_from_bstar(3, 2, 1, 1, 14);
  emb_context Et = embed_ext(W, thin, emb_default_prec(thin, 1));
  CHECK(emb_u1_ratio_cong(W, Et, 1).verdict == tri::no);
  CHECK(emb_u1_ratio_cong(W, Et, 1).witness_exp < 1);
}

TEST_CASE("single level collapse") {
  gr_ctx W(3, 1, 1);
  emb_params par = emb_from_bstar(3, 1, 1, 1, 4);
  emb_context E = embed_ext(W, par, emb_default_prec(par, 1));

  // with one level the lift ring is the whole Laurent field, so the top
  // element is its own expansion
  CHECK(E.uN_exp.verdict == tri::yes);
  CHECK(E.u1_exp.verdict == tri::yes);
  CHECK(ls_zero3(ls_sub(E.u1_exp.z, on_teich_lift(W, E.ubar))) != tri::no);

  CHECK(emb_u1_ratio_cong(W, E, 1).verdict == tri::yes);
  CHECK(emb_u0_ratio_unit(W, E) == tri::yes);
  CHECK(emb_t_ratio_cong(W, E, 1).verdict == tri::yes);

  emb_params thin = emb_from_bstar(3, 1, 1, 1, 2);
  emb_context Et = embed_ext(W, thin, emb_default_prec(thin, 1));
  CHECK(emb_u1_ratio_cong(W, Et, 1).verdict == tri::no);
}

TEST_CASE("wider residue fields and larger degree") {
  gr_ctx W(3, 1, 2);
  emb_params par = emb_from_bstar(3, 1, 2, 2, 20);
  CHECK(par.q == 9);
  CHECK(emb_in_window(par, 1));
  emb_context E = embed_ext(W, par, emb_default_prec(par, 1));
  CHECK(E.u1_exp.verdict == tri::yes);
  CHECK(emb_u1_ratio_cong(W, E, 1).verdict == tri::yes);
  CHECK(emb_t_ratio_cong(W, E, 1).verdict == tri::yes);
}

TEST_CASE("five adic cell") {
  gr_ctx W(5, 2, 1);
  emb_params par = emb_from_bstar(5, 2, 1, 1, 46);
  emb_context E = embed_ext(W, par, emb_default_prec(par, 1));

  CHECK(E.u1_exp.verdict == tri::yes);
  CHECK(E.u0_exp.verdict == tri::yes);
  CHECK(E.t_exp.verdict == tri::yes);
  CHECK(E.uN_exp.verdict == tri::no);
  CHECK(E.uN_exp.exponent == 5 * 5 + 46);

  CHECK(emb_u1_ratio_cong(W, E, 1).verdict == tri::yes);
  CHECK(emb_u0_ratio_unit(W, E) == tri::yes);
  CHECK(emb_t_ratio_cong(W, E, 1).verdict == tri::yes);
}

TEST_CASE("embedding input validation") {
  CHECK_THROWS_AS(emb_from_bstar(3, 2, 1, 1, 15), domain_error);
  CHECK_THROWS_AS(emb_from_bstar(3, 2, 1, 1, -2), domain_error);
  CHECK_THROWS_AS(emb_from_bstar(3, 2, 1, 0, 16), domain_error);
  CHECK_THROWS_AS(emb_from_rstar(3, 2, 1, 1, rat(7, 3)), domain_error);
  CHECK(emb_from_rstar(3, 2, 1, 1, rat(7)).bstar == 14);

  emb_params par = anchor();
  CHECK_THROWS_AS(emb_in_window(par, 0), domain_error);

  fq_ctx k(3, 1);
  CHECK_THROWS_AS(emb_ubar(k, par, 4), domain_error);

  gr_ctx W5(5, 2, 1);
  CHECK_THROWS_AS(embed_ext(W5, par, 100), domain_error);

  gr_ctx W(3, 2, 1);
  emb_context empty;
  empty.par = par;
  CHECK_THROWS_AS(emb_u1_ratio_cong(W, empty, 1), domain_error);
  CHECK_THROWS_AS(emb_u0_ratio_unit(W, empty), domain_error);
  CHECK_THROWS_AS(emb_t_ratio_cong(W, empty, 1), domain_error);
}
