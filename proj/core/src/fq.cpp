#include "ramlift/fq.hpp"

#include <algorithm>

namespace ramlift {

namespace {

// dense polynomial arithmetic over F_p for modulus search and validation
using poly = std::vector<uint16_t>;

void ptrim(poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

poly pmulmod(const poly& a, const poly& b, const poly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + (uint32_t)a[i] * b[j]) % p;
  }
  // reduce by monic m
  size_t dm = m.size() - 1;
  for (size_t k = acc.size(); k-- > dm;) {
    uint32_t c = acc[k] % p;
    if (!c) continue;
    acc[k] = 0;
    for (size_t j = 0; j < dm; ++j)
      acc[k - dm + j] = (acc[k - dm + j] + (uint32_t)(p - m[j] % p) * c) % p;
  }
  poly out(dm);
  for (size_t i = 0; i < dm && i < acc.size(); ++i) out[i] = (uint16_t)(acc[i] % p);
  ptrim(out);
  return out;
}

poly ppowmod_x(uint64_t e_base_p, uint32_t reps, const poly& m, uint32_t p) {
  // computes x^{p^reps} mod m by repeated p-th powering
  poly x = {0, 1};
  poly cur = x;
  for (uint32_t r = 0; r < reps; ++r) {
    poly acc = {1};
    poly base = cur;
    uint64_t e = e_base_p;
    while (e) {
      if (e & 1) acc = pmulmod(acc, base, m, p);
      base = pmulmod(base, base, m, p);
      e >>= 1;
    }
    cur = acc;
  }
  return cur;
}

poly pgcd(poly a, poly b, uint32_t p) {
  auto inv_mod_p = [p](uint32_t v) {
    uint32_t r = 1, base = v % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
      uint32_t c = (uint32_t)a.back() * lead_inv % p;
      if (c) {
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[off + i] = (uint16_t)((a[off + i] + (p - (uint32_t)b[i] * c % p)) % p);
      }
      a.pop_back();
      ptrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const poly& m, uint32_t p) {
  uint32_t d = (uint32_t)m.size() - 1;
  if (d == 1) return true;
  // x^{p^d} == x mod m, and gcd(x^{p^{d/l}} - x, m) = 1 for prime l | d
  poly x = {0, 1};
  poly xq = ppowmod_x(p, d, m, p);
  if (xq != x) return false;
  for (uint32_t l = 2; l <= d; ++l) {
    if (d % l) continue;
    bool prime = true;
    for (uint32_t t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    poly xe = ppowmod_x(p, d / l, m, p);
    // xe - x
    poly diff = xe;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (uint16_t)((diff[1] + p - 1) % p);
    ptrim(diff);
    poly g = pgcd(diff, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

fq_ctx::fq_ctx(uint32_t p, uint32_t d) : p_(p), d_(d) {
  if (p < 3 || d < 1 || d > FQ_MAX_D) throw domain_error("fq_ctx: bad (p,d)");
  if (d == 1) {
    mod_ = {(uint16_t)(p - 1), 1};  // x - 1
  } else {
    // smallest coefficient tuple by value sum a_i p^i
    uint64_t total = 1;
    for (uint32_t i = 0; i < d; ++i) total *= p;
    for (uint64_t v = 0;; ++v) {
      if (v >= total) throw domain_error("fq_ctx: no irreducible found");
      poly m(d + 1, 0);
      uint64_t t = v;
      for (uint32_t i = 0; i < d; ++i) {
        m[i] = (uint16_t)(t % p);
        t /= p;
      }
      m[d] = 1;
      if (is_irreducible(m, p)) {
        mod_.assign(m.begin(), m.end());
        break;
      }
    }
  }
  init();
}

fq_ctx::fq_ctx(uint32_t p, uint32_t d, const std::vector<uint16_t>& modulus)
    : p_(p), d_(d), mod_(modulus) {
  if (p < 3 || d < 1 || d > FQ_MAX_D) throw domain_error("fq_ctx: bad (p,d)");
  if (mod_.size() != d + 1 || mod_[d] != 1)
    throw domain_error("fq_ctx: modulus must be monic of degree d");
  for (auto c : mod_)
    if (c >= p) throw domain_error("fq_ctx: modulus coefficient out of range");
  if (d >= 2 && !is_irreducible(poly(mod_.begin(), mod_.end()), p))
    throw domain_error("fq_ctx: modulus not irreducible");
  init();
}

void fq_ctx::init() {
  q_ = 1;
  for (uint32_t i = 0; i < d_; ++i) {
    if (q_ > (uint64_t(1) << 62) / p_) throw domain_error("fq_ctx: q too large");
    q_ *= p_;
  }
  // reduction rows: x^{d+k} mod modulus
  fq_elem row{};
  // start with x^d = -sum m_i x^i
  for (uint32_t i = 0; i < d_; ++i) row[i] = (uint16_t)((p_ - mod_[i]) % p_);
  red_[0] = row;
  for (uint32_t k = 1; k + 1 < d_; ++k) {
    // multiply previous row by x
    fq_elem nxt{};
    uint16_t top = red_[k - 1][d_ - 1];
    for (uint32_t i = d_ - 1; i > 0; --i) nxt[i] = red_[k - 1][i - 1];
    nxt[0] = 0;
    if (top)
      for (uint32_t i = 0; i < d_; ++i)
        nxt[i] = (uint16_t)((nxt[i] + (uint32_t)top * red_[0][i]) % p_);
    red_[k] = nxt;
  }
  // frobenius matrix rows: (x^j)^p
  poly m(mod_.begin(), mod_.end());
  for (uint32_t j = 0; j < d_; ++j) {
    poly xj(j + 1, 0);
    xj[j] = 1;
    poly acc = {1};
    poly base = xj;
    uint64_t e = p_;
    while (e) {
      if (e & 1) acc = pmulmod(acc, base, m, p_);
      base = pmulmod(base, base, m, p_);
      e >>= 1;
    }
    fq_elem r{};
    for (size_t i = 0; i < acc.size(); ++i) r[i] = acc[i];
    frob_mat_[j] = r;
  }
  // inverse frobenius = frobenius^{d-1}
  for (uint32_t j = 0; j < d_; ++j) {
    fq_elem v{};
    v[j] = 1;
    for (uint32_t k = 0; k + 1 < d_; ++k) {
      fq_elem w{};
      for (uint32_t i = 0; i < d_; ++i)
        if (v[i])
          for (uint32_t l = 0; l < d_; ++l)
            w[l] = (uint16_t)((w[l] + (uint32_t)v[i] * frob_mat_[i][l]) % p_);
      v = w;
    }
    root_mat_[j] = v;
  }
}

fq_elem fq_ctx::gen() const {
  fq_elem e{};
  if (d_ == 1) {
    e[0] = 1;  // class of x is 1 for modulus x - 1
  } else {
    e[1] = 1;
  }
  return e;
}

fq_elem fq_ctx::from_int(int64_t v) const {
  int64_t r = v % (int64_t)p_;
  if (r < 0) r += p_;
  fq_elem e{};
  e[0] = (uint16_t)r;
  return e;
}

fq_elem fq_ctx::add(const elem& a, const elem& b) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i) r[i] = (uint16_t)((a[i] + b[i]) % p_);
  return r;
}

fq_elem fq_ctx::sub(const elem& a, const elem& b) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i) r[i] = (uint16_t)((a[i] + p_ - b[i]) % p_);
  return r;
}

fq_elem fq_ctx::neg(const elem& a) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i) r[i] = (uint16_t)(a[i] ? p_ - a[i] : 0);
  return r;
}

fq_elem fq_ctx::mul(const elem& a, const elem& b) const {
  std::array<uint32_t, 2 * FQ_MAX_D> acc{};
  for (uint32_t i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    for (uint32_t j = 0; j < d_; ++j) acc[i + j] += (uint32_t)a[i] * b[j];
  }
  fq_elem r{};
  for (uint32_t k = 2 * d_ - 1; k-- > d_;) {
    uint32_t c = acc[k] % p_;
    if (!c) continue;
    for (uint32_t i = 0; i < d_; ++i) acc[i] += c * red_[k - d_][i];
  }
  for (uint32_t i = 0; i < d_; ++i) r[i] = (uint16_t)(acc[i] % p_);
  return r;
}

fq_elem fq_ctx::pow_u64(const elem& a, uint64_t e) const {
  fq_elem r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fq_elem fq_ctx::inv(const elem& a) const {
  if (is_zero(a)) throw not_invertible("fq inv of zero");
  return pow_u64(a, q_ - 2);
}

fq_elem fq_ctx::frob(const elem& a) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i)
    if (a[i])
      for (uint32_t l = 0; l < d_; ++l)
        r[l] = (uint16_t)((r[l] + (uint32_t)a[i] * frob_mat_[i][l]) % p_);
  return r;
}

fq_elem fq_ctx::frob_pow(const elem& a, uint32_t k) const {
  fq_elem r = a;
  for (uint32_t i = 0; i < k % d_; ++i) r = frob(r);
  return r;
}

fq_elem fq_ctx::pth_root(const elem& a) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i)
    if (a[i])
      for (uint32_t l = 0; l < d_; ++l)
        r[l] = (uint16_t)((r[l] + (uint32_t)a[i] * root_mat_[i][l]) % p_);
  return r;
}

fq_elem fq_ctx::elem_from_index(uint64_t idx) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d_; ++i) {
    r[i] = (uint16_t)(idx % p_);
    idx /= p_;
  }
  return r;
}

uint64_t fq_ctx::index_of(const elem& a) const {
  uint64_t idx = 0;
  for (uint32_t i = d_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

std::string fq_ctx::to_string(const elem& a) const {
  if (is_zero(a)) return "0";
  std::string s;
  for (uint32_t i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += "+";
    s += std::to_string(a[i]);
    if (i >= 1) s += "*g";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

fq_embed::fq_embed(const fq_ctx& s, const fq_ctx& t) : src(&s), dst(&t) {
  if (t.d() % s.d() != 0 || t.p() != s.p())
    throw domain_error("fq_embed: target is not an extension");
  // find the smallest-index root of the source modulus in the target
  const auto& m = s.modulus();
  for (uint64_t idx = 0; idx < t.q(); ++idx) {
    fq_elem cand = t.elem_from_index(idx);
    fq_elem acc = t.zero();
    for (size_t i = m.size(); i-- > 0;) {
      acc = t.mul(acc, cand);
      acc = t.add(acc, t.from_int(m[i]));
    }
    if (t.is_zero(acc)) {
      gen_image = cand;
      return;
    }
  }
  throw domain_error("fq_embed: no root of modulus in target");
}

fq_elem fq_embed::map(const fq_elem& a) const {
  fq_elem acc = dst->zero();
  for (uint32_t i = src->d(); i-- > 0;) {
    acc = dst->mul(acc, gen_image);
    acc = dst->add(acc, dst->from_int(a[i]));
  }
  return acc;
}

}  // namespace ramlift
