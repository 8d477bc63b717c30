#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/on_ring.hpp"
#include "ramlift/witt.hpp"

namespace ramlift {

// Element of W_N(k((v))) in Witt coordinates: one Laurent series per level.
// All operations here require integral coordinates (no negative exponents);
// with that restriction the universal polynomials never push an error term
// below its own exponent, so a single absolute cap is an honest precision.
struct wcoord {
  const fq_ctx* k = nullptr;
  uint32_t p = 0;
  std::vector<series<fq_ctx>> c;

  uint32_t levels() const { return static_cast<uint32_t>(c.size()); }
};

wcoord wc_zero(const fq_ctx& k, uint32_t p, uint32_t N, int64_t prec = PREC_INF);
// [x] at level i: coordinates zero except c[i] = x
wcoord wc_level(const fq_ctx& k, uint32_t p, uint32_t N, uint32_t i,
                const series<fq_ctx>& x);
wcoord wc_rand(const fq_ctx& k, uint32_t p, uint32_t N, rng& r, int64_t lo,
               int64_t width, int64_t prec);

wcoord wc_add(const wcoord& x, const wcoord& y, int64_t cap = PREC_INF);
wcoord wc_neg(const wcoord& x);
wcoord wc_sub(const wcoord& x, const wcoord& y, int64_t cap = PREC_INF);
wcoord wc_mul(const wcoord& x, const wcoord& y, int64_t cap = PREC_INF);
wcoord wc_mult_p(const wcoord& x, int64_t cap = PREC_INF);
tri wc_zero3(const wcoord& x);
tri wc_eq3(const wcoord& x, const wcoord& y, int64_t cap = PREC_INF);

// image of z under the substitution u -> [ubar], computed digit by digit:
// z = sum_j c_j u^j with c_j = sum_i p^i [c_{j,i}] maps to the Witt sum of
// the level-i vectors [(c_{j,i} ubar^j)^{p^i}]. Requires z integral and
// val(ubar) >= 1.
wcoord to_witt_coords(const gr_ctx& W, const series<gr_ctx>& z,
                      const series<fq_ctx>& ubar, int64_t cap = PREC_INF);

// image of z under the substitution u -> S for an arbitrary integral
// coordinate element S whose coordinates all have valuation >= 1. Same digit
// decomposition as to_witt_coords, with [c_{j,i}] S^j assembled through Witt
// multiplication and i-fold multiplication by p.
wcoord wc_eval(const gr_ctx& W, const series<gr_ctx>& z, const wcoord& S,
               int64_t cap = PREC_INF);

struct on_expansion {
  tri verdict = tri::undecided;
  series<gr_ctx> z;    // canonical expansion in the new variable, on yes
  uint32_t digit = 0;  // obstructing digit level, on no
  int64_t exponent = 0;  // obstructing v-exponent, on no
};

// decides membership of x in W_N(k)((X)) under X -> [ubar] and returns the
// canonical expansion. Peels one digit per round: reads the digit series off
// coordinate 0 by greedy expansion in powers of ubar, subtracts the matching
// Teichmuller sum by Witt arithmetic, then divides by p via a coordinate
// shift and p-th roots. Each round costs a factor p of precision. A yes
// verdict certifies the digits only inside the precision window carried by
// x; obstructions deeper than the window stay invisible, so callers must
// size the window from the expected obstruction depth.
on_expansion from_witt_coords(const gr_ctx& W, const wcoord& x,
                              const series<fq_ctx>& ubar);

}  // namespace ramlift
