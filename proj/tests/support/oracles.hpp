#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the library's algorithms: ghost-map arithmetic over exact rationals,
// map-based series convolution, integer Teichmuller digits at d=1, factorial
// exponential for Artin-Hasse, pointwise rational evaluation for PL calculus.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using mpzv = std::vector<mpz_class>;

inline mpz_class zpow(const mpz_class& b, uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline uint64_t upow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ghost_i = sum_{j<=i} p^j x_j^{p^{i-j}}
inline mpzv ghost(uint32_t p, const mpzv& x) {
  mpzv g(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    mpz_class acc = 0;
    for (size_t j = 0; j <= i; ++j)
      acc += zpow(p, j) * zpow(x[j], upow(p, (uint32_t)(i - j)));
    g[i] = acc;
  }
  return g;
}

// inverse of the ghost map over Q, asserting integrality (valid input = ghost
// of an integer vector combined by + or *)
inline mpzv unghost(uint32_t p, const mpzv& g) {
  mpzv z(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    mpz_class acc = g[i];
    for (size_t j = 0; j < i; ++j)
      acc -= zpow(p, j) * zpow(z[j], upow(p, (uint32_t)(i - j)));
    mpz_class q, r, pi = zpow(p, i);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), pi.get_mpz_t());
    assert(r == 0);
    z[i] = q;
  }
  return z;
}

inline mpzv witt_add_via_ghost(uint32_t p, const mpzv& x, const mpzv& y) {
  mpzv gx = ghost(p, x), gy = ghost(p, y), g(gx.size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = gx[i] + gy[i];
  return unghost(p, g);
}

inline mpzv witt_mul_via_ghost(uint32_t p, const mpzv& x, const mpzv& y) {
  mpzv gx = ghost(p, x), gy = ghost(p, y), g(gx.size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = gx[i] * gy[i];
  return unghost(p, g);
}

// Teichmuller lift in Z/p^N (d = 1): omega(c) = c^{p^{N-1}} mod p^N
inline uint64_t teich_d1(uint32_t p, uint32_t N, uint64_t c) {
  mpz_class m = zpow(p, N), r, base = c, e = zpow(p, N - 1);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return mpz_get_ui(r.get_mpz_t());
}

// Teichmuller digits of x in Z/p^N (d = 1)
inline std::vector<uint64_t> digits_d1(uint32_t p, uint32_t N, uint64_t x) {
  uint64_t pN = upow(p, N);
  x %= pN;
  std::vector<uint64_t> out;
  for (uint32_t i = 0; i < N; ++i) {
    uint64_t d = x % p;
    out.push_back(d);
    uint64_t w = teich_d1(p, N, d);
    x = (x + pN - w) % pN;
    assert(x % p == 0);
    x /= p;
    // after dividing by p the value is only meaningful mod p^{N-1-i};
    // keep reducing within the loop
  }
  return out;
}

// naive map-based Laurent multiplication over an abstract field given by
// callbacks; exponents are plain integers
template <class E, class Mul, class Add, class IsZero>
std::map<int64_t, E> naive_mul(const std::map<int64_t, E>& f,
                               const std::map<int64_t, E>& g, Mul mul, Add add,
                               IsZero is_zero) {
  std::map<int64_t, E> out;
  for (auto& [ef, cf] : f)
    for (auto& [eg, cg] : g) {
      E prod = mul(cf, cg);
      auto it = out.find(ef + eg);
      if (it == out.end())
        out.emplace(ef + eg, prod);
      else
        it->second = add(it->second, prod);
    }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

// Artin-Hasse exponential over exact rationals via factorial series:
// E = sum_k L^k / k!, L = sum_i X^{p^i}/p^i. Independent of the library's
// logarithmic-derivative recurrence.
inline std::vector<mpq_class> artin_hasse_factorial(uint32_t p, uint32_t D) {
  std::vector<mpq_class> L(D + 1, 0), Lk(D + 1, 0), E(D + 1, 0);
  for (uint64_t pe = 1, i = 0; pe <= D; pe *= p, ++i)
    L[pe] = mpq_class(1, zpow(p, i));
  Lk[0] = 1;
  E[0] = 1;
  mpz_class fact = 1;
  for (uint32_t k = 1; k <= D; ++k) {
    // Lk = Lk * L, truncated at D; L has valuation 1 so degree-k term stable
    std::vector<mpq_class> nxt(D + 1, 0);
    for (uint32_t a = 0; a <= D; ++a) {
      if (Lk[a] == 0) continue;
      for (uint32_t b = 1; a + b <= D; ++b) {
        if (L[b] == 0) continue;
        nxt[a + b] += Lk[a] * L[b];
      }
    }
    Lk.swap(nxt);
    fact *= k;
    for (uint32_t n = k; n <= D; ++n) E[n] += Lk[n] / mpq_class(fact);
  }
  for (auto& q : E) q.canonicalize();
  return E;
}

// piecewise-linear function as breakpoint list; pointwise evaluation used as
// the oracle for composition and inversion
struct pl_pts {
  std::vector<std::pair<mpq_class, mpq_class>> bp;  // starts at (0,0)
  mpq_class final_slope;
};

inline mpq_class pl_eval_pts(const pl_pts& f, const mpq_class& x) {
  assert(x >= 0);
  size_t i = 1;
  while (i < f.bp.size() && f.bp[i].first < x) ++i;
  if (i < f.bp.size()) {
    auto& [x0, y0] = f.bp[i - 1];
    auto& [x1, y1] = f.bp[i];
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
  }
  auto& [x0, y0] = f.bp.back();
  return y0 + (x - x0) * f.final_slope;
}

}  // namespace oracle
