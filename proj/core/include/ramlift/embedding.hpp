#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/lubin_tate.hpp"
#include "ramlift/rational.hpp"
#include "ramlift/witt_coords.hpp"

namespace ramlift {

// Totally ramified extension of degree q = p^nstar of the base field
// k((ubar)), presented by the uniformizer relation
//   ubar = vbar^q * E(vbar^bstar)^{-1}
// with E the Artin-Hasse exponential. bstar must be a positive integer
// prime to p; rstar = bstar / (q - 1) is the single edge point of the
// relative Herbrand function of the extension.
struct emb_params {
  uint32_t p = 0;
  uint32_t N = 0;
  uint32_t d = 1;
  uint32_t nstar = 1;
  int64_t q = 0;
  int64_t bstar = 0;
  Rat rstar;
};

emb_params emb_from_bstar(uint32_t p, uint32_t N, uint32_t d, uint32_t nstar,
                          int64_t bstar);
// requires rstar * (q - 1) integral
emb_params emb_from_rstar(uint32_t p, uint32_t N, uint32_t d, uint32_t nstar,
                          const Rat& rstar);

// depth condition bstar + q > q (a + 1) p^{N-1} that drives the level-1
// comparison at weight a; equivalently rstar (q - 1) > q astar
bool emb_in_window(const emb_params& par, int64_t a);

// residue image of the base uniformizer through vbar-precision prec
series<fq_ctx> emb_ubar(const fq_ctx& k, const emb_params& par, int64_t prec);

// Witt coordinate images over k((vbar)) of the canonical tower elements,
// with their expansions in the lift ring of the extension. The expansions
// of u1, u0 and t always exist. The top element uN stops being a power
// series in the new Teichmuller lift once N >= 2, so uN_exp carries the
// obstruction witness instead; at N = 1 it coincides with u1_exp.
struct emb_context {
  emb_params par;
  series<fq_ctx> ubar;
  wcoord uN_img, u1_img, u0_img, t_img;
  on_expansion uN_exp, u1_exp, u0_exp, t_exp;
};

// prec is the vbar-precision carried by the Witt images; the expansions
// retain about prec / p^{N-1} of it after digit peeling. The default
// covers the three ratio checks below at weight a with slack when bstar
// sits in the usual window just above q * astar.
int64_t emb_default_prec(const emb_params& par, int64_t a);
emb_context embed_ext(const gr_ctx& W, const emb_params& par, int64_t prec);

// Frobenius power twist matching the degree of the extension
inline series<gr_ctx> q_twist(const gr_ctx& W, const series<gr_ctx>& z,
                              uint32_t nstar) {
  return sigma_on_pow(W, z, nstar);
}

// Distinguished degree-q factor of X^q - ubar E(X^{bstar}) in k[[ubar]][X],
// the minimal polynomial of the new uniformizer over the base field. Slot i
// holds the coefficient of X^i; the top slot is the exact series 1 and the
// lower coefficients are known modulo ubar^prec. The factor is Eisenstein
// with bottom coefficient -ubar times a unit.
std::vector<series<fq_ctx>> emb_weierstrass(const fq_ctx& k,
                                            const emb_params& par,
                                            int64_t prec);
// coefficient window that certifies the conjugate Newton polygon of the
// factor with slack
int64_t emb_weierstrass_prec(const emb_params& par);

// u1 / twist(u1') = 1 modulo twist(u1')^e O^+; the depth window above
// guarantees this at e = a
cong_result emb_u1_ratio_cong(const gr_ctx& W, const emb_context& E,
                              int64_t e);
// u0 / twist(u0') is a unit of the integral lift ring
tri emb_u0_ratio_unit(const gr_ctx& W, const emb_context& E);
// sigma(t / twist(t')) = 1 modulo twist(u0')^e O^+
cong_result emb_t_ratio_cong(const gr_ctx& W, const emb_context& E,
                             int64_t e);

}  // namespace ramlift
