#pragma once

#include <cstdint>
#include <vector>

#include "ramlift/galois_ring.hpp"
#include "ramlift/rational.hpp"
#include "ramlift/scalar_rings.hpp"
#include "ramlift/series.hpp"
#include "ramlift/util.hpp"

namespace ramlift {

// Formal group whose multiplication-by-p series is pX + X^p: scalar
// endomorphisms, the group law, the Artin-Hasse exponential, and the
// element tower u_m obtained by iterating multiplication by p.

// pX + X^p over R, exact
series<zmod_ring> lt_mult_p(const zmod_ring& R, uint32_t p);

// The unique series f = cX + ... with f(pX + X^p) = p f(X) + f(X)^p,
// computed through degree prec inclusive. R.m must be a power of p.
// The coefficient recursion runs with extra headroom digits so every
// returned coefficient is exact mod R.m. Coefficients vanish outside
// degrees congruent to 1 mod (p-1); in particular degrees 2..p-1 are
// zero, so f == cX mod X^p.
series<zmod_ring> lt_endo(const zmod_ring& R, uint32_t p, const Int& c,
                          int64_t prec);

// A random series f = cX + ... that commutes with pX + X^p mod p^N,
// with degrees 2..p-1 exactly zero. R.m must equal p^N and c must be a
// unit. At each free degree (congruent to 1 mod (p-1), at least p) the
// solution is determined only mod p^{N-1}; the sampler draws the
// remaining digit uniformly, so repeated calls give genuinely distinct
// series that all satisfy the commutation identity mod p^N.
series<zmod_ring> lt_commutant_sample(const zmod_ring& R, uint32_t p,
                                      uint32_t N, const Int& c, int64_t prec,
                                      rng& r);

// group law truncated at total degree deg; c[i][j] multiplies X^i Y^j
struct lt_biv {
  uint32_t p = 3;
  uint64_t mod = 0;
  int64_t deg = 0;
  std::vector<std::vector<uint64_t>> c;
};

// F(X, Y) with F(X, 0) = X, F symmetric, associative, and
// F(pX + X^p, pY + Y^p) = p F + F^p, all through total degree deg.
// R.m must be a power of p.
lt_biv lt_group_law(const zmod_ring& R, uint32_t p, int64_t deg);

// truncated evaluation; exact mod R.m when p divides both arguments and
// deg + 1 >= log_p(R.m)
uint64_t lt_biv_eval(const lt_biv& F, const zmod_ring& R, uint64_t x,
                     uint64_t y);

// Exact rational coefficients of exp(sum_{j>=0} X^{p^j} / p^j) through
// degree prec inclusive. Every coefficient is p-integral; a violation
// throws domain_error since it would mean the recurrence is wrong.
std::vector<Rat> artin_hasse_q(uint32_t p, int64_t prec);

// the same series reduced into R; R.m must be a power of p
series<zmod_ring> artin_hasse(const zmod_ring& R, uint32_t p, int64_t prec);

// u[m] = (multiplication by p, applied N-m times)(X) over W_N(F_{p^d})
// in the variable X = u_N, together with t = p + u[1]^{p-1} and
// sigma_t = p + u[0]^{p-1}. All series are truncated at X-precision
// prec and hold a pointer to W; keep W alive while using them.
struct lt_canonical {
  std::vector<series<gr_ctx>> u;
  series<gr_ctx> t;
  series<gr_ctx> sigma_t;
};

// requires prec >= (p-1) p^{N-1} + 2 so the top term of t is visible
lt_canonical canonical_elems(const gr_ctx& W, int64_t prec);

}  // namespace ramlift
