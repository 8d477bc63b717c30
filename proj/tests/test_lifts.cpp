#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ramlift/lubin_tate.hpp>
#include <ramlift/on_ring.hpp>

#include "support/oracles.hpp"

using namespace ramlift;

static series<gr_ctx> gr_terms(const gr_ctx& W,
                               const std::vector<std::pair<int64_t, int64_t>>& ts,
                               int64_t prec = PREC_INF) {
  std::vector<std::pair<int64_t, gr_elem>> v;
  for (auto& t : ts) v.emplace_back(t.first, W.from_int(t.second));
  return ls_from_terms(W, v, 1, prec);
}

TEST_CASE("digit split and teichmuller lift round trips") {
  gr_ctx W(3, 3, 2);
  rng r(71);
  for (int it = 0; it < 20; ++it) {
    series<gr_ctx> f = on_rand(W, r, -4 + (int64_t)r.below(5), 9, 30);
    // reassemble sum_i p^i * [digit_i]
    series<gr_ctx> acc = ls_zero(W, f.prec);
    gr_elem pw = W.one();
    for (uint32_t i = 0; i < W.N(); ++i) {
      series<gr_ctx> level = ls_scale(on_teich_lift(W, on_digit(W, f, i)), pw);
      acc = ls_add(acc, level);
      pw = W.times_p(pw);
    }
    CHECK(ls_zero3(ls_sub(acc, f)) != tri::no);
    CHECK(ls_sub(acc, f).c.empty());
  }
  // residue of a lift is the original
  series<fq_ctx> fbar;
  {
    const fq_ctx& k = W.residue_field();
    std::vector<std::pair<int64_t, fq_elem>> ts;
    for (int64_t n = -2; n < 6; ++n) ts.emplace_back(n, k.rand_elem(r));
    fbar = ls_from_terms(k, ts);
  }
  CHECK(ls_zero3(ls_sub(on_residue(W, on_teich_lift(W, fbar)), fbar)) == tri::yes);
  CHECK_THROWS_AS(on_digit(W, on_teich_lift(W, fbar), 3), domain_error);
}

TEST_CASE("frobenius on laurent series") {
  gr_ctx W(3, 2, 2);
  rng r(72);
  series<gr_ctx> u = ls_monomial(W, W.one(), 1);
  CHECK(ls_zero3(ls_sub(sigma_on(W, u), ls_monomial(W, W.one(), 3))) == tri::yes);
  for (int it = 0; it < 15; ++it) {
    series<gr_ctx> f = on_rand(W, r, -3, 7, 12);
    series<gr_ctx> g = on_rand(W, r, -2, 7, 12);
    series<gr_ctx> lhs = sigma_on(W, ls_mul(f, g));
    series<gr_ctx> rhs = ls_mul(sigma_on(W, f), sigma_on(W, g));
    CHECK(ls_sub(lhs, rhs).c.empty());
    CHECK(ls_sub(sigma_on(W, ls_add(f, g)),
                 ls_add(sigma_on(W, f), sigma_on(W, g))).c.empty());
  }
  // constants move by the coefficient frobenius, order d
  series<gr_ctx> c = ls_monomial(W, W.rand_elem(r), 0);
  series<gr_ctx> cc = sigma_on_pow(W, c, W.d());
  CHECK(ls_zero3(ls_sub(cc, c)) == tri::yes);
  // twist by sigma^0 is the identity
  series<gr_ctx> f = on_rand(W, r, -1, 5, 9);
  CHECK(ls_zero3(ls_sub(sigma_on_pow(W, f, 0), f)) != tri::no);
}

TEST_CASE("frobenius matches the canonical element ladder") {
  for (uint32_t p : {3u, 5u}) {
    gr_ctx W(p, 2, 1);
    int64_t prec = (int64_t)(p - 1) * (int64_t)(p * p) + 2;
    lt_canonical C = canonical_elems(W, prec);
    CHECK(ls_sub(sigma_on(W, C.u[1]), C.u[0]).c.empty());
    CHECK(ls_sub(sigma_on(W, C.t), C.sigma_t).c.empty());
  }
}

TEST_CASE("inversion of laurent units") {
  gr_ctx W(3, 2, 1);
  // exact inverse when the residue is a monomial: (3 + u^2)^{-1}
  series<gr_ctx> f = gr_terms(W, {{0, 3}, {2, 1}});
  series<gr_ctx> g = on_invert(W, f);
  CHECK(prec_is_inf(g.prec));
  CHECK(ls_zero3(ls_sub(g, gr_terms(W, {{-2, 1}, {-4, -3}}))) == tri::yes);
  CHECK(ls_zero3(ls_sub(ls_mul(f, g), ls_one(W))) == tri::yes);

  // p-divisible leading term: (3u + u^2)^{-1} = u^{-2} - 3u^{-3}
  series<gr_ctx> h = gr_terms(W, {{1, 3}, {2, 1}});
  series<gr_ctx> hi = on_invert(W, h);
  CHECK(ls_zero3(ls_sub(hi, gr_terms(W, {{-2, 1}, {-3, -3}}))) == tri::yes);

  // unit leading coefficient takes the direct path
  series<gr_ctx> w = gr_terms(W, {{-1, 2}, {0, 1}, {3, 4}});
  series<gr_ctx> wi = on_invert(W, w, 12);
  series<gr_ctx> prod = ls_sub(ls_mul(w, wi), ls_one(W));
  CHECK(prod.c.empty());
  CHECK(prod.prec >= 10);

  // random units across N, including residue valuation above the valuation
  for (uint32_t N : {1u, 2u, 3u}) {
    gr_ctx WN(3, N, 2);
    rng r(100 + N);
    for (int it = 0; it < 12; ++it) {
      series<gr_ctx> z = on_rand(WN, r, -3 + (int64_t)r.below(4), 8, 25);
      if (on_residue(WN, z).c.empty()) continue;
      series<gr_ctx> zi = on_invert(WN, z, 15);
      series<gr_ctx> t = ls_sub(ls_mul(z, zi), ls_one(WN));
      CHECK(t.c.empty());
      CHECK(t.prec >= 10);
    }
  }

  // non-units and undecidable inputs
  series<gr_ctx> np = ls_scale(gr_terms(W, {{0, 1}, {1, 2}}), W.from_int(3));
  CHECK_THROWS_AS(on_invert(W, np), not_invertible);
  series<gr_ctx> zz = ls_zero(W, 5);
  CHECK_THROWS_AS(on_invert(W, zz), precision_error);
  // exact non-monomial residue needs a finite cap
  series<gr_ctx> nm = gr_terms(W, {{0, 1}, {1, 1}});
  CHECK_THROWS_AS(on_invert(W, nm), precision_error);
  CHECK(ls_sub(ls_mul(on_invert(W, nm, 9), nm), ls_one(W)).c.empty());
}

TEST_CASE("ideal membership with witnesses") {
  gr_ctx W(3, 2, 1);
  series<gr_ctx> g = gr_terms(W, {{2, 1}, {3, 3}, {5, 2}});
  rng r(55);
  for (int it = 0; it < 10; ++it) {
    series<gr_ctx> h = on_rand(W, r, 0, 6, 20);
    cong_result in0 = on_in_ideal_o0(W, ls_mul(g, h), g, 18);
    CHECK(in0.verdict == tri::yes);
    cong_result inp = on_in_ideal_oplus(W, ls_mul(g, ls_shift(h, 1)), g, 18);
    CHECK(inp.verdict == tri::yes);
  }
  cong_result bad = on_in_ideal_o0(W, ls_mul(g, gr_terms(W, {{-1, 1}})), g, 18);
  CHECK(bad.verdict == tri::no);
  CHECK(bad.witness_exp == -1);
  cong_result edge = on_in_ideal_oplus(W, g, g, 18);
  CHECK(edge.verdict == tri::no);
  CHECK(edge.witness_exp == 0);
  // a quotient only known to negative precision stays undecided
  series<gr_ctx> vague = ls_truncate(ls_mul(g, gr_terms(W, {{0, 1}})), 1);
  cong_result ud = on_in_ideal_o0(W, vague, g, 18);
  CHECK(ud.verdict == tri::undecided);
}

TEST_CASE("integral unit detection") {
  gr_ctx W(3, 2, 1);
  CHECK(on_is_o0_unit(W, gr_terms(W, {{0, 1}, {1, 5}})) == tri::yes);
  CHECK(on_is_o0_unit(W, gr_terms(W, {{0, 4}, {2, 3}})) == tri::yes);
  CHECK(on_is_o0_unit(W, gr_terms(W, {{1, 1}})) == tri::no);
  CHECK(on_is_o0_unit(W, gr_terms(W, {{0, 3}, {1, 1}})) == tri::no);
  CHECK(on_is_o0_unit(W, gr_terms(W, {{-1, 1}, {0, 1}})) == tri::no);
  CHECK(on_is_o0_unit(W, ls_zero(W, 0)) == tri::undecided);
  CHECK(on_is_o0_unit(W, ls_truncate(gr_terms(W, {{0, 1}}), 1)) == tri::yes);
}

TEST_CASE("scalar series inclusion") {
  gr_ctx W(3, 2, 2);
  zmod_ring R(9);
  series<zmod_ring> k = lt_endo(R, 3, Int(2), 12);
  series<gr_ctx> kg = on_from_zmod(W, R, k);
  CHECK(kg.lo == 1);
  CHECK(W.eq(ls_lead(kg), W.from_int(2)));
  CHECK(kg.prec == k.prec);
  zmod_ring wrong(27);
  CHECK_THROWS_AS(on_from_zmod(W, wrong, lt_endo(wrong, 3, Int(2), 6)),
                  domain_error);
}

#include <ramlift/witt_coords.hpp>

static series<fq_ctx> fq_terms(const fq_ctx& k,
                               const std::vector<std::pair<int64_t, int64_t>>& ts,
                               int64_t prec = PREC_INF) {
  std::vector<std::pair<int64_t, fq_elem>> v;
  for (auto& t : ts) v.emplace_back(t.first, k.from_int(t.second));
  return ls_from_terms(k, v, 1, prec);
}

TEST_CASE("witt coordinate images of simple elements") {
  gr_ctx W(3, 2, 1);
  const fq_ctx& k = W.residue_field();
  series<fq_ctx> v1 = ls_monomial(k, k.one(), 1);

  // u itself maps to the Teichmuller vector of the uniformizer residue
  series<gr_ctx> u = ls_monomial(W, W.one(), 1);
  wcoord cu = to_witt_coords(W, u, v1, 40);
  CHECK(ls_zero3(ls_sub(cu.c[0], ls_truncate(v1, 40))) != tri::no);
  CHECK(cu.c[1].c.empty());

  // the constant p maps to (0, 1)
  wcoord cp = to_witt_coords(W, ls_monomial(W, W.from_int(3), 0), v1, 40);
  CHECK(cp.c[0].c.empty());
  CHECK(ls_zero3(ls_sub(cp.c[1], ls_one(k, 1, 40))) != tri::no);

  // a general uniformizer image lands on its residue series
  series<fq_ctx> ut = fq_terms(k, {{1, 1}, {2, 2}, {5, 1}});
  wcoord cu2 = to_witt_coords(W, u, ut, 40);
  CHECK(ls_zero3(ls_sub(cu2.c[0], ls_truncate(ut, 40))) != tri::no);
  CHECK(cu2.c[1].c.empty());
}

TEST_CASE("witt coordinate conversion is a ring homomorphism") {
  struct cell { uint32_t p, N, d; };
  for (cell C : {cell{3, 2, 1}, cell{3, 3, 2}, cell{5, 2, 2}}) {
    gr_ctx W(C.p, C.N, C.d);
    const fq_ctx& k = W.residue_field();
    rng r(C.p * 100 + C.N * 10 + C.d);
    std::vector<std::pair<int64_t, fq_elem>> uts;
    uts.emplace_back(1, k.one());
    uts.emplace_back(2, k.rand_elem(r));
    uts.emplace_back(3, k.rand_elem(r));
    series<fq_ctx> ub = ls_from_terms(k, uts);
    int64_t cap = 30;
    for (int it = 0; it < 8; ++it) {
      series<gr_ctx> z1 = on_rand(W, r, 0, 6, 25);
      series<gr_ctx> z2 = on_rand(W, r, 0, 6, 25);
      wcoord a = to_witt_coords(W, z1, ub, cap);
      wcoord b = to_witt_coords(W, z2, ub, cap);
      CHECK(wc_eq3(wc_add(a, b), to_witt_coords(W, ls_add(z1, z2), ub, cap)) !=
            tri::no);
      CHECK(wc_eq3(wc_mul(a, b), to_witt_coords(W, ls_mul(z1, z2), ub, cap)) !=
            tri::no);
      series<gr_ctx> pz = ls_scale(z1, W.from_int(C.p));
      CHECK(wc_eq3(wc_mult_p(a), to_witt_coords(W, pz, ub, cap)) != tri::no);
    }
  }
}

TEST_CASE("witt coordinate round trips") {
  struct cell { uint32_t p, N, d; };
  int checked = 0;
  for (cell C : {cell{3, 2, 1}, cell{3, 3, 1}, cell{5, 2, 2}}) {
    gr_ctx W(C.p, C.N, C.d);
    const fq_ctx& k = W.residue_field();
    rng r(900 + C.p + C.N + C.d);
    series<fq_ctx> v1 = ls_monomial(k, k.one(), 1);
    std::vector<std::pair<int64_t, fq_elem>> uts;
    uts.emplace_back(1, k.one());
    uts.emplace_back(3, k.rand_elem(r));
    series<fq_ctx> ut = ls_from_terms(k, uts);
    for (int it = 0; it < 9; ++it) {
      // exact inputs round-trip to equality, not just congruence
      series<gr_ctx> z = on_rand(W, r, 0, 8, PREC_INF);
      for (const series<fq_ctx>& ub : {v1, ut}) {
        wcoord c = to_witt_coords(W, z, ub);
        on_expansion back = from_witt_coords(W, c, ub);
        REQUIRE(back.verdict == tri::yes);
        CHECK(ls_eq3(back.z, z) == tri::yes);
        ++checked;
      }
    }
    // truncated input: agreement holds on the whole tracked window, which
    // shrinks by a factor p per digit read
    series<gr_ctx> zt = on_rand(W, r, 0, 8, 12);
    wcoord ct = to_witt_coords(W, zt, v1, 200);
    on_expansion bt = from_witt_coords(W, ct, v1);
    REQUIRE(bt.verdict == tri::yes);
    series<gr_ctx> diff = ls_sub(bt.z, zt);
    CHECK(diff.c.empty());
    CHECK(diff.prec >= 1);
    CHECK(diff.prec <= 12);
  }
  CHECK(checked >= 50);
}

TEST_CASE("witt coordinate membership refusals and witnesses") {
  gr_ctx W(3, 2, 1);
  const fq_ctx& k = W.residue_field();
  series<fq_ctx> v1 = ls_monomial(k, k.one(), 1, 1, 40);

  // [v] against the uniformizer v^2: odd exponent at digit 0
  series<fq_ctx> v2 = ls_monomial(k, k.one(), 2, 1, 40);
  on_expansion r1 = from_witt_coords(W, wc_level(k, 3, 2, 0, v1), v2);
  CHECK(r1.verdict == tri::no);
  CHECK(r1.digit == 0);
  CHECK(r1.exponent == 1);

  // (0, v): the level-1 coordinate is not a p-th power
  on_expansion r2 = from_witt_coords(W, wc_level(k, 3, 2, 1, v1), v1);
  CHECK(r2.verdict == tri::no);
  CHECK(r2.digit == 1);
  CHECK(r2.exponent == 1);

  // no usable window: everything unknown from exponent 0 on
  wcoord blind = wc_level(k, 3, 2, 0, ls_truncate(v1, 0));
  on_expansion r3 = from_witt_coords(W, blind, v1);
  CHECK(r3.verdict == tri::undecided);

  // shape and context guards
  series<gr_ctx> laur = ls_monomial(W, W.one(), -1);
  CHECK_THROWS_AS(to_witt_coords(W, laur, v1, 20), domain_error);
  gr_ctx W3(3, 3, 1);
  CHECK_THROWS_AS(from_witt_coords(W3, wc_level(k, 3, 2, 0, v1), v1),
                  domain_error);
}
