#pragma once

#include <cstdint>

#include "ramlift/galois_ring.hpp"
#include "ramlift/scalar_rings.hpp"
#include "ramlift/series.hpp"

namespace ramlift {

// Laurent series over a Galois ring, W_N(k)((u)). The Frobenius acts by sigma
// on coefficients and u -> u^p. A series is a unit of the full Laurent ring
// exactly when its residue in k((u)) is nonzero; the residue valuation may
// exceed the series valuation when the low coefficients are divisible by p.

// digit i of every coefficient, as a series over the residue field; i < N
series<fq_ctx> on_digit(const gr_ctx& W, const series<gr_ctx>& f, uint32_t i);

inline series<fq_ctx> on_residue(const gr_ctx& W, const series<gr_ctx>& f) {
  return on_digit(W, f, 0);
}

// coefficientwise Teichmuller lift of a residue series
series<gr_ctx> on_teich_lift(const gr_ctx& W, const series<fq_ctx>& fbar);

// coefficientwise inclusion Z/p^N -> W_N(k); requires R.m == W.pN()
series<gr_ctx> on_from_zmod(const gr_ctx& W, const zmod_ring& R,
                            const series<zmod_ring>& f);

// ring endomorphism: sigma on coefficients, u -> u^p
series<gr_ctx> sigma_on(const gr_ctx& W, const series<gr_ctx>& f);
series<gr_ctx> sigma_on_pow(const gr_ctx& W, const series<gr_ctx>& f, uint32_t k);

// inverse of a Laurent-ring unit. With a monomial residue the exact
// Teichmuller monomial splits off and the cofactor 1 + m, m nilpotent in
// p*W_N(k)((u)), inverts by a finite geometric sum; this keeps precision at
// f.prec - 2*val(residue) - (N-2)*(val(residue) - val(f)). Otherwise the
// residue inverts over k((u)), lifts, and the gap closes by the same finite
// sum, at a larger precision cost. cap may stay infinite only when the
// residue is a monomial; otherwise the exact result has no finite support.
series<gr_ctx> on_invert(const gr_ctx& W, const series<gr_ctx>& f,
                         int64_t cap = PREC_INF);

// membership of z in g * u^{shift} * W_N(k)[[u]], by exponent inspection of
// z * g^{-1}; witness_exp reports the offending exponent on refusal and the
// first unknown exponent when undecided
cong_result on_in_ideal(const gr_ctx& W, const series<gr_ctx>& z,
                        const series<gr_ctx>& g, int64_t shift, int64_t cap);

inline cong_result on_in_ideal_o0(const gr_ctx& W, const series<gr_ctx>& z,
                                  const series<gr_ctx>& g, int64_t cap) {
  return on_in_ideal(W, z, g, 0, cap);
}

inline cong_result on_in_ideal_oplus(const gr_ctx& W, const series<gr_ctx>& z,
                                     const series<gr_ctx>& g, int64_t cap) {
  return on_in_ideal(W, z, g, 1, cap);
}

// is f a unit of the subring W_N(k)[[u]]: integral with unit constant term
tri on_is_o0_unit(const gr_ctx& W, const series<gr_ctx>& f);

// random series with support in [lo, lo + width) and the given precision
series<gr_ctx> on_rand(const gr_ctx& W, rng& r, int64_t lo, int64_t width,
                       int64_t prec);

}  // namespace ramlift
