#pragma once

#include <cstdint>

#include "ramlift/lubin_tate.hpp"
#include "ramlift/on_ring.hpp"
#include "ramlift/witt_coords.hpp"

namespace ramlift {

// Simulated wild automorphisms of W_N(k)((u)): substitutions in the
// uniformizer with W_N(k) coefficients held fixed.

enum class gamma_mode {
  exact_endo,  // the formal group endomorphism with derivative c
  perturbed,   // random series commuting with [p] mod p^N, same derivative
  control      // unit noise at a degree in [2, p-1], breaks the commutation
};

// the substitution series kappa(u) = c u + ..., coefficients in W_N(k),
// known through u-degree prec inclusive; c must be a unit mod p
series<gr_ctx> gamma_kappa(const gr_ctx& W, const Int& c, gamma_mode mode,
                           int64_t prec, rng& r);

// z(kappa(u)); kappa needs val 1 and unit lead when z has negative exponents
series<gr_ctx> gamma_action(const gr_ctx& W, const series<gr_ctx>& kappa,
                            const series<gr_ctx>& z, int64_t cap = PREC_INF);

// sum_j sigma(c_j) s(u)^j for z = sum_j c_j u^j. Applying the Frobenius
// substitution before or after a gamma substitution lands in this shape:
// sigma(gamma_kappa(z)) uses s = sigma_on(kappa), and gamma_kappa(sigma(z))
// uses s = kappa^p; the two inner series differ above the residue level.
series<gr_ctx> semilinear_subst(const gr_ctx& W, const series<gr_ctx>& z,
                                const series<gr_ctx>& s,
                                int64_t cap = PREC_INF);

// z(u + eta); eta integral with val >= 1
series<gr_ctx> tau_action(const gr_ctx& W, const series<gr_ctx>& eta,
                          const series<gr_ctx>& z, int64_t cap = PREC_INF);

// z evaluated at the Witt coordinate element [image of u + eta] + p*w over
// k((v)); pass w with levels() == 0 for no additive Witt tail. Each pass
// through the tower map multiplies the tail by p, so for z built from u by
// at least N-1 applications of [p] the tail contributes nothing mod p^N,
// which callers can assert by comparing against tau_action.
wcoord tau_action_wc(const gr_ctx& W, const series<gr_ctx>& eta,
                     const wcoord& w, const series<gr_ctx>& z,
                     int64_t cap = PREC_INF);

}  // namespace ramlift
