#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramlift/embedding.hpp"
#include "ramlift/fq.hpp"
#include "ramlift/rational.hpp"
#include "ramlift/series.hpp"

namespace ramlift {

// Increasing piecewise linear function on [0, inf) with exact rational
// breakpoints, pinned at (0, 0). Segments run between consecutive
// breakpoints; beyond the last one the graph continues with slope fslope.
// Canonical form has no collinear interior breakpoint and the last segment
// slope different from fslope, so equality is field equality.
struct pl_func {
  std::vector<std::pair<Rat, Rat>> bp;
  Rat fslope;
};

// validates and canonicalizes; slopes must all be positive
pl_func pl_make(std::vector<std::pair<Rat, Rat>> bp, const Rat& fslope);
pl_func pl_identity();
// slope 1 up to (r, r), then 1/q
pl_func pl_single_edge(const Rat& r, int64_t q);

Rat pl_eval(const pl_func& f, const Rat& x);
std::vector<Rat> pl_slopes(const pl_func& f);
bool pl_is_concave(const pl_func& f);
bool pl_eq(const pl_func& f, const pl_func& g);

pl_func pl_compose(const pl_func& f, const pl_func& g);
pl_func pl_invert(const pl_func& f);

// Left-continuous index staircase of an extension: index 1 before the
// first jump, then the listed value from each jump on. Jump positions and
// indices are strictly increasing; the last index is the total degree.
struct ramdata {
  std::vector<std::pair<Rat, int64_t>> jumps;
};

// integral of the reciprocal staircase
pl_func phi_from_ramdata(const ramdata& d);

// (a + 1) p^{N-1} - 1 for 0 <= a <= p - 2
int64_t a_star(int64_t a, uint32_t N, uint32_t p);

// Inverse Herbrand function of the p-cyclotomic tower, truncated to level
// N: breakpoints (k, p^k - 1) and final slope (p-1) p^{N-1}. Satisfies
// psi(N - 1 + a/(p-1)) = a_star(a, N, p) for every 0 <= a <= p - 2; the
// weight argument is validated but the function does not depend on it.
pl_func cyclotomic_psi(uint32_t p, int64_t a, uint32_t N);

// Herbrand function of the extension generated by a root of the monic
// polynomial P (coefficient i of X^i in P[i], leading coefficient the
// exact unit series 1). P must be Eisenstein: positive coefficient
// valuations below the top and valuation exactly 1 at the bottom. The
// conjugate distance multiset is read off the Newton polygon of P(Y + x)
// over the extension; distances below 1, non-separable input, or ball
// sizes that fail to partition the degree raise domain_error, and
// coefficient windows too short to certify the polygon raise
// precision_error.
pl_func ramification_polygon(const std::vector<series<fq_ctx>>& P);

struct no_admissible_params : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest extension degree and the smallest integer bstar inside the
// open window (astar * q, vstar * (q - 1)), skipping multiples of p.
// Throws no_admissible_params when vstar <= astar (the window is empty
// for every degree) or when no degree up to p^200 admits a choice.
emb_params emb_choose_params(const Rat& vstar, int64_t a, uint32_t N,
                             uint32_t p, uint32_t d = 1);

// image of vstar under the single-edge Herbrand function of the
// extension, rstar + (vstar - rstar)/q; requires vstar >= rstar and is
// strictly below vstar whenever vstar > rstar
Rat emb_descent_value(const Rat& vstar, const emb_params& par);

// iterates parameter choice and descent from v0 until the window empties
// or max_steps values have been appended; returns the full trajectory
// starting at v0
std::vector<Rat> emb_descent_trace(const Rat& v0, int64_t a, uint32_t N,
                                   uint32_t p, int max_steps);

}  // namespace ramlift
