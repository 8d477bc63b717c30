#include "ramlift/witt.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ramlift/mvpoly.hpp"

namespace ramlift {
namespace {

mvq ghost_poly(uint32_t nv, uint32_t base, uint32_t i, uint32_t p) {
  mvq g = mv_zero(nv);
  Rat pj(1);
  for (uint32_t j = 0; j <= i; ++j) {
    uint64_t e = ipow_u64(p, i - j);
    g = mv_add(g, mv_scale(mv_var(nv, base + j, static_cast<uint32_t>(e)), pj));
    pj *= p;
  }
  return g;
}

wpoly compile(const mvq& a) {
  wpoly f;
  f.nv = a.nv;
  for (auto& [k, c] : a.t) {
    wterm t;
    assert(c.get_den() == 1);
    t.coeff = c.get_num();
    for (uint32_t i = 0; i < a.nv; ++i)
      if (k[i]) t.pe.emplace_back(static_cast<uint16_t>(i), k[i]);
    f.terms.push_back(std::move(t));
  }
  return f;
}

// S_i must contain x_i and y_i only as bare monomials with coefficient 1;
// this backs the subtraction solver and the mod-p linearity claims
void check_sum_shape(const mvq& s, uint32_t N, uint32_t i) {
  for (auto& [k, c] : s.t) {
    bool hx = k[i] != 0, hy = k[N + i] != 0;
    if (!hx && !hy) continue;
    uint32_t total = 0;
    for (auto e : k) total += e;
    assert(total == 1 && c == 1);
  }
}

// P_i mod p must be linear in y_i with coefficient x_0^{p^i}
void check_prod_shape(const mvq& s, uint32_t N, uint32_t i, uint32_t p) {
  uint64_t pi = ipow_u64(p, i);
  for (auto& [k, c] : s.t) {
    if (k[N + i] == 0) continue;
    Int num = c.get_num();
    if (num % p == 0) continue;
    assert(k[N + i] == 1 && c == 1);
    for (uint32_t v = 0; v < 2 * N; ++v) {
      if (v == 0)
        assert(k[v] == pi);
      else if (v != N + i)
        assert(k[v] == 0);
    }
  }
}

std::unique_ptr<witt_table> build_table(uint32_t p, uint32_t N) {
  if (p < 3 || p % 2 == 0) throw domain_error("witt table needs an odd prime");
  if (ipow_u64(p, N) > 0xffff) throw domain_error("witt table exponent range");
  auto T = std::make_unique<witt_table>();
  T->p = p;
  T->N = N;
  uint32_t nv = 2 * N;

  std::vector<mvq> Sq, Pq, Fq;
  for (uint32_t i = 0; i < N; ++i) {
    Int pi = Int(1);
    for (uint32_t j = 0; j < i; ++j) pi *= p;
    {
      mvq G = mv_add(ghost_poly(nv, 0, i, p), ghost_poly(nv, N, i, p));
      for (uint32_t j = 0; j < i; ++j) {
        Int pj(1);
        for (uint32_t l = 0; l < j; ++l) pj *= p;
        G = mv_sub(G, mv_scale(mv_pow(Sq[j], ipow_u64(p, i - j)), Rat(pj)));
      }
      Sq.push_back(mv_divexact(G, pi));
      check_sum_shape(Sq.back(), N, i);
    }
    {
      mvq G = mv_mul(ghost_poly(nv, 0, i, p), ghost_poly(nv, N, i, p));
      for (uint32_t j = 0; j < i; ++j) {
        Int pj(1);
        for (uint32_t l = 0; l < j; ++l) pj *= p;
        G = mv_sub(G, mv_scale(mv_pow(Pq[j], ipow_u64(p, i - j)), Rat(pj)));
      }
      Pq.push_back(mv_divexact(G, pi));
      check_prod_shape(Pq.back(), N, i, p);
    }
    {
      mvq G = ghost_poly(N + 1, 0, i + 1, p);
      for (uint32_t j = 0; j < i; ++j) {
        Int pj(1);
        for (uint32_t l = 0; l < j; ++l) pj *= p;
        G = mv_sub(G, mv_scale(mv_pow(Fq[j], ipow_u64(p, i - j)), Rat(pj)));
      }
      Fq.push_back(mv_divexact(G, pi));
    }
  }
  for (uint32_t i = 0; i < N; ++i) {
    T->S.push_back(compile(Sq[i]));
    T->P.push_back(compile(Pq[i]));
    T->F.push_back(compile(Fq[i]));
    T->NEG.push_back(compile(mv_scale(mv_var(N, i), Rat(-1))));
  }
  return T;
}

std::mutex table_mutex;
std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<witt_table>> table_cache;

}  // namespace

const witt_table& get_witt_table(uint32_t p, uint32_t N) {
  std::lock_guard<std::mutex> lk(table_mutex);
  auto key = std::make_pair(p, N);
  auto it = table_cache.find(key);
  if (it == table_cache.end())
    it = table_cache.emplace(key, build_table(p, N)).first;
  return *it->second;
}

std::string wpoly_to_line(const wpoly& f, uint32_t nx) {
  std::ostringstream os;
  if (f.terms.empty()) {
    os << "0";
    return os.str();
  }
  // stable dump order: descending lex on dense exponent vectors, so x-terms
  // print before the matching y-terms
  std::vector<const wterm*> order;
  order.reserve(f.terms.size());
  for (const wterm& t : f.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](const wterm* a, const wterm* b) {
    std::vector<uint16_t> ea(f.nv, 0), eb(f.nv, 0);
    for (auto& [v, e] : a->pe) ea[v] = e;
    for (auto& [v, e] : b->pe) eb[v] = e;
    return ea > eb;
  });
  bool first = true;
  for (const wterm* tp : order) {
    const wterm& t = *tp;
    Int c = t.coeff;
    if (!first) os << " ";
    os << (sgn(c) < 0 ? "-" : "+");
    first = false;
    Int ac = abs(c);
    os << ac.get_str();
    for (auto& [v, e] : t.pe) {
      os << "*";
      if (v < nx)
        os << "x" << v;
      else
        os << "y" << (v - nx);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string witt_table_dump(const witt_table& T) {
  std::ostringstream os;
  os << "# witt polynomial table p=" << T.p << " N=" << T.N << "\n";
  for (uint32_t i = 0; i < T.N; ++i)
    os << "S" << i << ": " << wpoly_to_line(T.S[i], T.N) << "\n";
  for (uint32_t i = 0; i < T.N; ++i)
    os << "P" << i << ": " << wpoly_to_line(T.P[i], T.N) << "\n";
  for (uint32_t i = 0; i < T.N; ++i)
    os << "F" << i << ": " << wpoly_to_line(T.F[i], T.N + 1) << "\n";
  for (uint32_t i = 0; i < T.N; ++i)
    os << "NEG" << i << ": " << wpoly_to_line(T.NEG[i], T.N) << "\n";
  return os.str();
}

}  // namespace ramlift
