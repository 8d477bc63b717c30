#include "ramlift/galois_ring.hpp"

#include <cassert>
#include <sstream>

namespace ramlift {
namespace {

// dense polynomial arithmetic over Z/p^N modulo a monic polynomial,
// coefficients held in uint64 and kept strictly below p^N < 2^32
struct quot {
  uint64_t pN;
  std::vector<uint64_t> mod;  // size d+1, mod[d] == 1

  uint32_t deg() const { return static_cast<uint32_t>(mod.size() - 1); }

  std::vector<uint64_t> mul(const std::vector<uint64_t>& a,
                            const std::vector<uint64_t>& b) const {
    uint32_t d = deg();
    std::vector<unsigned __int128> acc(2 * d - 1 > 0 ? 2 * d - 1 : 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
      if (!a[i]) continue;
      for (uint32_t j = 0; j < d; ++j) {
        if (!b[j]) continue;
        acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      }
    }
    std::vector<uint64_t> t(acc.size());
    for (size_t i = 0; i < acc.size(); ++i)
      t[i] = static_cast<uint64_t>(acc[i] % pN);
    for (uint32_t k = static_cast<uint32_t>(t.size()) - 1; k >= d && k < t.size(); --k) {
      uint64_t c = t[k];
      if (c) {
        for (uint32_t i = 0; i <= d; ++i) {
          uint64_t s = (c * (mod[i] % pN)) % pN;
          uint64_t& slot = t[k - d + i];
          slot = (slot + pN - s) % pN;
        }
      }
      if (k == d) break;
    }
    t.resize(d);
    return t;
  }

  std::vector<uint64_t> pow_p(std::vector<uint64_t> a, uint32_t p) const {
    // a^p by square and multiply
    std::vector<uint64_t> r(deg(), 0);
    r[0] = 1;
    uint32_t e = p;
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }
};

}  // namespace

gr_ctx::gr_ctx(uint32_t p, uint32_t N, uint32_t d) : p_(p), N_(N), k_(p, d) {
  init();
}

gr_ctx::gr_ctx(const fq_ctx& k, uint32_t N) : p_(k.p()), N_(N), k_(k) { init(); }

void gr_ctx::init() {
  assert(N_ >= 1);
  uint64_t pn = 1;
  for (uint32_t i = 0; i < N_; ++i) {
    pn *= p_;
    assert(pn < (uint64_t(1) << 32));
  }
  pN_ = pn;
  uint32_t d = k_.d();

  // naive lift of the residue modulus; (Z/p^N)[x]/(m) is already the Galois
  // ring, but the class of x need not be a Teichmuller element there
  const auto& m = k_.modulus();
  quot q0;
  q0.pN = pN_;
  q0.mod.assign(d + 1, 0);
  for (uint32_t i = 0; i <= d; ++i) q0.mod[i] = m[i];

  // theta = x^{p^{d(N-1)}}: annihilates the 1+pR part of the unit group and
  // permutes the Teichmuller group, so theta^{p^d} = theta and theta = x mod p
  std::vector<uint64_t> theta(d, 0);
  if (d == 1)
    theta[0] = (pN_ - q0.mod[0]) % pN_;  // class of x in the degree-1 quotient
  else
    theta[1] = 1;
  for (uint32_t i = 0; i < d * (N_ - 1); ++i) theta = q0.pow_p(theta, p_);

  {
    auto chk = theta;
    for (uint32_t i = 0; i < d; ++i) chk = q0.pow_p(chk, p_);
    assert(chk == theta);
  }

  // mt(T) = prod_j (T - theta^{p^j}); coefficients are Frobenius-fixed hence
  // scalar in the quotient, and reduce to the residue modulus mod p
  std::vector<std::vector<uint64_t>> prod;  // coefficients in q0, low to high
  prod.push_back(std::vector<uint64_t>(d, 0));
  prod[0][0] = 1;
  auto conj = theta;
  for (uint32_t j = 0; j < d; ++j) {
    std::vector<std::vector<uint64_t>> nxt(prod.size() + 1,
                                           std::vector<uint64_t>(d, 0));
    for (size_t i = 0; i < prod.size(); ++i) {
      nxt[i + 1] = prod[i];  // T * prod
      auto s = q0.mul(prod[i], conj);
      for (uint32_t c = 0; c < d; ++c)
        nxt[i][c] = (nxt[i][c] + pN_ - s[c]) % pN_;
    }
    prod = std::move(nxt);
    conj = q0.pow_p(conj, p_);
  }
  assert(conj == theta);

  for (uint32_t i = 0; i <= d; ++i) {
    for (uint32_t c = 1; c < d; ++c) assert(prod[i][c] == 0);
    mt_[i] = prod[i][0];
    assert(mt_[i] % p_ == m[i] % p_);
  }
  assert(mt_[d] == 1);

  // working quotient: (Z/p^N)[T]/(mt), basis theta^i with theta Teichmuller
  quot q1;
  q1.pN = pN_;
  q1.mod.assign(mt_.begin(), mt_.begin() + d + 1);

  std::vector<uint64_t> x(d, 0);
  if (d == 1)
    x[0] = (pN_ - mt_[0]) % pN_;
  else
    x[1] = 1;
  {
    auto chk = x;
    for (uint32_t i = 0; i < d; ++i) chk = q1.pow_p(chk, p_);
    assert(chk == x);
  }

  auto pack = [&](const std::vector<uint64_t>& v) {
    gr_elem e{};
    for (uint32_t i = 0; i < d; ++i) e[i] = v[i];
    return e;
  };

  if (d >= 2) {
    auto row = x;
    for (uint32_t i = 1; i < d; ++i) row = q1.mul(row, x);  // now T^d
    red_[0] = pack(row);
    for (uint32_t k = 1; k + 1 < d; ++k) {
      row = q1.mul(row, x);
      red_[k] = pack(row);
    }
  }

  for (uint32_t j = 0; j < d; ++j) {
    std::vector<uint64_t> tj(d, 0);
    tj[0] = 1;
    for (uint32_t i = 0; i < j; ++i) tj = q1.mul(tj, x);
    sigma_mat_[j] = pack(q1.pow_p(tj, p_));
  }
}

gr_elem gr_ctx::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(pN_);
  if (r < 0) r += static_cast<int64_t>(pN_);
  gr_elem e{};
  e[0] = static_cast<uint64_t>(r);
  return e;
}

gr_elem gr_ctx::add(const elem& a, const elem& b) const {
  elem r{};
  for (uint32_t i = 0; i < d(); ++i) {
    uint64_t s = a[i] + b[i];
    r[i] = s >= pN_ ? s - pN_ : s;
  }
  return r;
}

gr_elem gr_ctx::sub(const elem& a, const elem& b) const {
  elem r{};
  for (uint32_t i = 0; i < d(); ++i) {
    uint64_t s = a[i] + pN_ - b[i];
    r[i] = s >= pN_ ? s - pN_ : s;
  }
  return r;
}

gr_elem gr_ctx::neg(const elem& a) const {
  elem r{};
  for (uint32_t i = 0; i < d(); ++i) r[i] = a[i] ? pN_ - a[i] : 0;
  return r;
}

gr_elem gr_ctx::mul(const elem& a, const elem& b) const {
  uint32_t dd = d();
  if (dd == 1) {
    elem r{};
    r[0] = (static_cast<unsigned __int128>(a[0]) * b[0]) % pN_;
    return r;
  }
  std::array<unsigned __int128, 2 * FQ_MAX_D> acc{};
  for (uint32_t i = 0; i < dd; ++i) {
    if (!a[i]) continue;
    for (uint32_t j = 0; j < dd; ++j) {
      if (!b[j]) continue;
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
  }
  elem r{};
  for (uint32_t i = 0; i < dd; ++i) r[i] = static_cast<uint64_t>(acc[i] % pN_);
  for (uint32_t k = 2 * dd - 2; k >= dd; --k) {
    uint64_t c = static_cast<uint64_t>(acc[k] % pN_);
    if (c) {
      const gr_elem& row = red_[k - dd];
      for (uint32_t i = 0; i < dd; ++i) {
        uint64_t s = (static_cast<unsigned __int128>(c) * row[i]) % pN_;
        r[i] = (r[i] + s) % pN_;
      }
    }
  }
  return r;
}

gr_elem gr_ctx::pow_u64(const elem& a, uint64_t e) const {
  elem base = a, r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

gr_elem gr_ctx::inv(const elem& a) const {
  if (!is_unit(a)) throw not_invertible("gr inverse of non-unit");
  elem b = lift(k_.inv(residue(a)));
  // Newton: b <- b(2 - ab) doubles p-adic accuracy each round
  uint32_t acc = 1;
  while (acc < N_) {
    elem t = sub(from_int(2), mul(a, b));
    b = mul(b, t);
    acc *= 2;
  }
  assert(eq(mul(a, b), one()));
  return b;
}

gr_elem gr_ctx::times_p(const elem& a) const {
  elem r{};
  for (uint32_t i = 0; i < d(); ++i) r[i] = (a[i] * p_) % pN_;
  return r;
}

gr_elem gr_ctx::divp_exact(const elem& a) const {
  elem r{};
  for (uint32_t i = 0; i < d(); ++i) {
    assert(a[i] % p_ == 0);
    r[i] = a[i] / p_;
  }
  return r;
}

fq_elem gr_ctx::residue(const elem& a) const {
  fq_elem r{};
  for (uint32_t i = 0; i < d(); ++i)
    r[i] = static_cast<uint16_t>(a[i] % p_);
  return r;
}

gr_elem gr_ctx::lift(const fq_elem& r) const {
  elem e{};
  for (uint32_t i = 0; i < d(); ++i) e[i] = r[i];
  return e;
}

gr_elem gr_ctx::teich(const fq_elem& r) const {
  elem e = lift(r);
  for (uint32_t i = 0; i < d() * (N_ - 1); ++i) e = pow_u64(e, p_);
  return e;
}

std::vector<fq_elem> gr_ctx::digits(const elem& a) const {
  std::vector<fq_elem> ds;
  ds.reserve(N_);
  elem cur = a;
  for (uint32_t i = 0; i < N_; ++i) {
    fq_elem di = residue(cur);
    ds.push_back(di);
    if (i + 1 < N_) cur = divp_exact(sub(cur, teich(di)));
  }
  return ds;
}

gr_elem gr_ctx::from_digits(const std::vector<fq_elem>& ds) const {
  assert(ds.size() <= N_);
  elem acc = zero();
  for (size_t i = ds.size(); i-- > 0;) {
    acc = times_p(acc);
    acc = add(acc, teich(ds[i]));
  }
  return acc;
}

gr_elem gr_ctx::sigma(const elem& a) const {
  uint32_t dd = d();
  std::array<unsigned __int128, FQ_MAX_D> acc{};
  for (uint32_t j = 0; j < dd; ++j) {
    if (!a[j]) continue;
    const gr_elem& row = sigma_mat_[j];
    for (uint32_t i = 0; i < dd; ++i)
      acc[i] += static_cast<unsigned __int128>(a[j]) * row[i];
  }
  elem r{};
  for (uint32_t i = 0; i < dd; ++i) r[i] = static_cast<uint64_t>(acc[i] % pN_);
  return r;
}

gr_elem gr_ctx::sigma_pow(const elem& a, uint32_t k) const {
  elem r = a;
  for (uint32_t i = 0; i < k % d(); ++i) r = sigma(r);
  return r;
}

gr_elem gr_ctx::rand_elem(rng& rr) const {
  elem e{};
  for (uint32_t i = 0; i < d(); ++i) e[i] = rr.below(pN_);
  return e;
}

std::string gr_ctx::to_string(const elem& a) const {
  std::ostringstream os;
  os << "(";
  for (uint32_t i = 0; i < d(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

}  // namespace ramlift
