#include "ramlift/actions.hpp"

#include "ramlift/scalar_rings.hpp"

namespace ramlift {

series<gr_ctx> gamma_kappa(const gr_ctx& W, const Int& c, gamma_mode mode,
                           int64_t prec, rng& r) {
  zmod_ring R(W.pN());
  if (!R.is_unit(R.from_mpz(c))) throw domain_error("gamma_kappa: c not a unit");
  series<zmod_ring> f;
  switch (mode) {
    case gamma_mode::exact_endo:
      f = lt_endo(R, W.p(), c, prec);
      break;
    case gamma_mode::perturbed:
      f = lt_commutant_sample(R, W.p(), W.N(), c, prec, r);
      break;
    case gamma_mode::control: {
      f = lt_endo(R, W.p(), c, prec);
      int64_t b = 2 + static_cast<int64_t>(r.below(W.p() - 2));
      uint64_t s = 1 + r.below(W.p() - 1);
      f = ls_add(f, ls_monomial(R, s, b, 1, prec));
      break;
    }
  }
  return on_from_zmod(W, R, f);
}

series<gr_ctx> gamma_action(const gr_ctx& W, const series<gr_ctx>& kappa,
                            const series<gr_ctx>& z, int64_t cap) {
  (void)W;
  return ls_compose(z, kappa, cap);
}

series<gr_ctx> semilinear_subst(const gr_ctx& W, const series<gr_ctx>& z,
                                const series<gr_ctx>& s, int64_t cap) {
  series<gr_ctx> zs = z;
  for (auto& a : zs.c) a = W.sigma(a);
  return ls_compose(zs, s, cap);
}

series<gr_ctx> tau_action(const gr_ctx& W, const series<gr_ctx>& eta,
                          const series<gr_ctx>& z, int64_t cap) {
  if (!eta.c.empty() && eta.lo < 1)
    throw domain_error("tau_action: eta needs val >= 1");
  series<gr_ctx> s = ls_add(ls_monomial(W, W.one(), 1), eta);
  return ls_compose(z, s, cap);
}

wcoord tau_action_wc(const gr_ctx& W, const series<gr_ctx>& eta,
                     const wcoord& w, const series<gr_ctx>& z, int64_t cap) {
  const fq_ctx& k = W.residue_field();
  if (!eta.c.empty() && eta.lo < 1)
    throw domain_error("tau_action_wc: eta needs val >= 1");
  series<fq_ctx> vid = ls_monomial(k, k.one(), 1);
  series<gr_ctx> s = ls_add(ls_monomial(W, W.one(), 1), eta);
  wcoord S = to_witt_coords(W, s, vid, cap);
  if (w.levels() > 0) S = wc_add(S, wc_mult_p(w, cap), cap);
  return wc_eval(W, z, S, cap);
}

}  // namespace ramlift
