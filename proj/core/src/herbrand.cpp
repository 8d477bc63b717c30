#include "ramlift/herbrand.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ramlift {

namespace {

Rat seg_slope(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
  return Rat(b.second - a.second) / (b.first - a.first);
}

int64_t pow_i64(int64_t b, uint32_t e, const char* who) {
  int64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > (int64_t(1) << 40)) throw domain_error(std::string(who) + ": overflow");
    r *= b;
  }
  return r;
}

int64_t mod_pow(int64_t b, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Lucas: product over base-p digits of the digit binomials
int64_t binom_mod_p(int64_t m, int64_t r, uint32_t p) {
  const int64_t pp = p;
  int64_t res = 1;
  while (m > 0 || r > 0) {
    int64_t md = m % pp, rd = r % pp;
    m /= pp;
    r /= pp;
    if (rd > md) return 0;
    for (int64_t i = 1; i <= rd; ++i) {
      res = res * ((md - i + 1) % pp) % pp;
      res = res * mod_pow(i, pp - 2, pp) % pp;
    }
  }
  return res;
}

}  // namespace

pl_func pl_make(std::vector<std::pair<Rat, Rat>> bp, const Rat& fslope) {
  if (bp.empty() || bp.front().first != 0 || bp.front().second != 0)
    throw domain_error("pl_make: breakpoints must start at the origin");
  if (fslope <= 0) throw domain_error("pl_make: slopes must be positive");
  std::vector<std::pair<Rat, Rat>> out;
  out.push_back(bp.front());
  for (size_t i = 1; i < bp.size(); ++i) {
    if (bp[i].first <= out.back().first)
      throw domain_error("pl_make: breakpoints must be strictly increasing");
    Rat s = seg_slope(out.back(), bp[i]);
    if (s <= 0) throw domain_error("pl_make: slopes must be positive");
    if (out.size() >= 2 && seg_slope(out[out.size() - 2], out.back()) == s)
      out.back() = bp[i];
    else
      out.push_back(bp[i]);
  }
  while (out.size() >= 2 &&
         seg_slope(out[out.size() - 2], out.back()) == fslope)
    out.pop_back();
  pl_func f;
  f.bp = std::move(out);
  f.fslope = fslope;
  return f;
}

pl_func pl_identity() { return pl_make({{Rat(0), Rat(0)}}, Rat(1)); }

pl_func pl_single_edge(const Rat& r, int64_t q) {
  if (r < 0) throw domain_error("pl_single_edge: edge point must be >= 0");
  if (q < 2) throw domain_error("pl_single_edge: index must be at least 2");
  if (r == 0) return pl_make({{Rat(0), Rat(0)}}, rat(1, q));
  return pl_make({{Rat(0), Rat(0)}, {r, r}}, rat(1, q));
}

Rat pl_eval(const pl_func& f, const Rat& x) {
  if (x < 0) throw domain_error("pl_eval: argument must be >= 0");
  size_t i = f.bp.size() - 1;
  while (i > 0 && f.bp[i].first > x) --i;
  if (i + 1 < f.bp.size())
    return f.bp[i].second +
           seg_slope(f.bp[i], f.bp[i + 1]) * (x - f.bp[i].first);
  return f.bp[i].second + f.fslope * (x - f.bp[i].first);
}

std::vector<Rat> pl_slopes(const pl_func& f) {
  std::vector<Rat> s;
  for (size_t i = 0; i + 1 < f.bp.size(); ++i)
    s.push_back(seg_slope(f.bp[i], f.bp[i + 1]));
  s.push_back(f.fslope);
  return s;
}

bool pl_is_concave(const pl_func& f) {
  std::vector<Rat> s = pl_slopes(f);
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) return false;
  return true;
}

bool pl_eq(const pl_func& f, const pl_func& g) {
  return f.bp == g.bp && f.fslope == g.fslope;
}

pl_func pl_invert(const pl_func& f) {
  std::vector<std::pair<Rat, Rat>> bp;
  for (const auto& b : f.bp) bp.emplace_back(b.second, b.first);
  return pl_make(std::move(bp), Rat(1) / f.fslope);
}

pl_func pl_compose(const pl_func& f, const pl_func& g) {
  std::vector<Rat> xs;
  for (const auto& b : g.bp) xs.push_back(b.first);
  pl_func gi = pl_invert(g);
  for (const auto& b : f.bp) xs.push_back(pl_eval(gi, b.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Rat, Rat>> bp;
  for (const auto& x : xs) bp.emplace_back(x, pl_eval(f, pl_eval(g, x)));
  return pl_make(std::move(bp), f.fslope * g.fslope);
}

pl_func phi_from_ramdata(const ramdata& d) {
  std::vector<std::pair<Rat, Rat>> bp{{Rat(0), Rat(0)}};
  Rat x(0), y(0), slope(1);
  int64_t ind = 1;
  bool first = true;
  Rat last_jx;
  for (const auto& [jx, jind] : d.jumps) {
    if (jx < 0) throw domain_error("phi_from_ramdata: jump below x = 0");
    if (!first && jx <= last_jx)
      throw domain_error("phi_from_ramdata: jump positions must increase");
    if (jind <= ind)
      throw domain_error("phi_from_ramdata: indices must increase");
    if (jx > x) {
      y += slope * (jx - x);
      x = jx;
      bp.emplace_back(x, y);
    }
    ind = jind;
    slope = rat(1, ind);
    last_jx = jx;
    first = false;
  }
  return pl_make(std::move(bp), slope);
}

int64_t a_star(int64_t a, uint32_t N, uint32_t p) {
  if (p < 2) throw domain_error("a_star: p must be at least 2");
  if (N == 0) throw domain_error("a_star: level must be positive");
  if (a < 0 || a > static_cast<int64_t>(p) - 2)
    throw domain_error("a_star: weight outside [0, p-2]");
  return (a + 1) * pow_i64(p, N - 1, "a_star") - 1;
}

pl_func cyclotomic_psi(uint32_t p, int64_t a, uint32_t N) {
  a_star(a, N, p);
  std::vector<std::pair<Rat, Rat>> bp;
  int64_t pk = 1;
  for (uint32_t k = 0; k < N; ++k) {
    bp.emplace_back(rat(k), rat(pk - 1));
    if (pk > (int64_t(1) << 40)) throw domain_error("cyclotomic_psi: overflow");
    pk *= p;
  }
  return pl_make(std::move(bp),
                 rat((static_cast<int64_t>(p) - 1) * (pk / p)));
}

pl_func ramification_polygon(const std::vector<series<fq_ctx>>& P) {
  if (P.size() < 2)
    throw domain_error("ramification_polygon: degree must be at least 1");
  const series<fq_ctx>& top = P.back();
  if (top.K == nullptr || top.c.size() != 1 || !prec_is_inf(top.prec) ||
      top.lo != 0 || !top.K->eq(top.c.front(), top.K->one()))
    throw domain_error("ramification_polygon: top coefficient must be the exact series 1");
  const fq_ctx& k = *top.K;
  const uint32_t p = k.p();
  const int64_t n = static_cast<int64_t>(P.size()) - 1;

  if (P[0].c.empty()) {
    if (prec_is_inf(P[0].prec))
      throw domain_error("ramification_polygon: bottom coefficient vanishes");
    throw precision_error("ramification_polygon: bottom coefficient undetermined");
  }
  if (ls_val(P[0]) != 1)
    throw domain_error("ramification_polygon: polynomial is not Eisenstein");
  for (int64_t i = 1; i < n; ++i) {
    if (!P[i].c.empty()) {
      if (ls_val(P[i]) < 1)
        throw domain_error("ramification_polygon: polynomial is not Eisenstein");
    } else if (!prec_is_inf(P[i].prec) && P[i].prec < 1) {
      throw precision_error("ramification_polygon: coefficient integrality undetermined");
    }
  }

  // Shifting by the root x turns slot j into sum_i binom(i+j, j) P[i+j] x^i,
  // a polynomial in the root with base coefficients. Exponents are distinct
  // modulo the degree, so the minimum of n val + i is the exact valuation.
  struct pt {
    int64_t x, y;
  };
  std::vector<pt> pts;
  std::vector<pt> floors;
  for (int64_t j = 1; j <= n; ++j) {
    int64_t known = PREC_INF, floorv = PREC_INF;
    for (int64_t i = 0; i + j <= n; ++i) {
      if (binom_mod_p(i + j, j, p) == 0) continue;
      const series<fq_ctx>& s = P[static_cast<size_t>(i + j)];
      if (s.c.empty()) {
        if (!prec_is_inf(s.prec))
          floorv = std::min(floorv, n * s.prec + i);
      } else {
        known = std::min(known, n * ls_val(s) + i);
      }
    }
    if (known == PREC_INF) {
      if (j == 1) {
        if (floorv == PREC_INF)
          throw domain_error("ramification_polygon: polynomial is not separable");
        throw precision_error("ramification_polygon: derivative valuation undetermined");
      }
      if (floorv != PREC_INF) floors.push_back({j - 1, floorv});
      continue;
    }
    if (floorv < known)
      throw precision_error("ramification_polygon: coefficient window too short");
    pts.push_back({j - 1, known});
  }

  // lower convex hull, collinear interior points merged
  std::vector<pt> hull;
  for (const pt& q : pts) {
    while (hull.size() >= 2) {
      const pt& a = hull[hull.size() - 2];
      const pt& b = hull.back();
      __int128 cr = static_cast<__int128>(b.x - a.x) * (q.y - a.y) -
                    static_cast<__int128>(b.y - a.y) * (q.x - a.x);
      if (cr <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }

  // every point whose valuation is only bounded below must sit above the hull
  for (const pt& fl : floors) {
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      if (fl.x <= hull[i].x || fl.x >= hull[i + 1].x) continue;
      Rat hy = Rat(hull[i].y) +
               rat(hull[i + 1].y - hull[i].y, hull[i + 1].x - hull[i].x) *
                   (fl.x - hull[i].x);
      if (Rat(fl.y) < hy)
        throw precision_error("ramification_polygon: coefficient window too short");
    }
  }

  std::vector<std::pair<Rat, int64_t>> segs;  // (distance, count), descending
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    int64_t run = hull[i + 1].x - hull[i].x;
    Rat dist = rat(hull[i].y - hull[i + 1].y, run);
    if (dist < 1)
      throw domain_error("ramification_polygon: conjugate distance below 1");
    segs.emplace_back(dist, run);
  }

  ramdata rd;
  int64_t ball = n;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    ball -= it->second;
    if (ball <= 0 || n % ball != 0)
      throw domain_error("ramification_polygon: classes do not partition the degree");
    rd.jumps.emplace_back(it->first - 1, n / ball);
  }
  return phi_from_ramdata(rd);
}

emb_params emb_choose_params(const Rat& vstar, int64_t a, uint32_t N,
                             uint32_t p, uint32_t d) {
  int64_t as = a_star(a, N, p);
  if (vstar <= as)
    throw no_admissible_params(
        "window (astar q, vstar (q-1)) is empty for every degree");
  int64_t q = 1;
  uint32_t nstar = 0;
  while (nstar < 200 && q <= (int64_t(1) << 40) / p) {
    ++nstar;
    q *= p;
    Int lo = Int(as) * static_cast<long>(q);
    Rat hi = vstar * static_cast<long>(q - 1);
    for (Int b = lo + 1; Rat(b) < hi; ++b) {
      if (mpz_divisible_ui_p(b.get_mpz_t(), p)) continue;
      if (!b.fits_slong_p()) break;
      return emb_from_bstar(p, N, d, nstar, b.get_si());
    }
  }
  throw no_admissible_params(
      "no admissible window below degree p^" + std::to_string(nstar + 1));
}

Rat emb_descent_value(const Rat& vstar, const emb_params& par) {
  if (vstar < par.rstar)
    throw domain_error("emb_descent_value: value below the edge point");
  return par.rstar + (vstar - par.rstar) / static_cast<long>(par.q);
}

std::vector<Rat> emb_descent_trace(const Rat& v0, int64_t a, uint32_t N,
                                   uint32_t p, int max_steps) {
  std::vector<Rat> tr{v0};
  for (int s = 0; s < max_steps; ++s) {
    emb_params par;
    try {
      par = emb_choose_params(tr.back(), a, N, p);
    } catch (const no_admissible_params&) {
      break;
    }
    tr.push_back(emb_descent_value(tr.back(), par));
  }
  return tr;
}

}  // namespace ramlift
