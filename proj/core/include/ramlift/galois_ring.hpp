#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ramlift/fq.hpp"
#include "ramlift/rational.hpp"
#include "ramlift/util.hpp"

namespace ramlift {

// W_N(F_{p^d}) = the unramified extension of Z/p^N of degree d.
//
// Public contract (serialization, equality semantics, sigma): Teichmuller
// digit vectors, value = sum_i p^i [digit_i], sigma acting digitwise by the
// residue Frobenius. Internal representation: coefficient vectors over the
// basis 1, theta, ..., theta^{d-1} modulo p^N, where theta is the Teichmuller
// root of the Hensel-lifted modulus (theta^{p^d} = theta). The two views are
// interconvertible; the packed view gives O(d^2) multiplication and sigma as
// an exact linear map.
using gr_elem = std::array<uint64_t, FQ_MAX_D>;

class gr_ctx {
 public:
  using elem = gr_elem;

  gr_ctx(uint32_t p, uint32_t N, uint32_t d);
  gr_ctx(const fq_ctx& k, uint32_t N);

  uint32_t p() const { return p_; }
  uint32_t N() const { return N_; }
  uint32_t d() const { return k_.d(); }
  uint64_t pN() const { return pN_; }
  const fq_ctx& residue_field() const { return k_; }

  elem zero() const { return elem{}; }
  elem one() const {
    elem e{};
    e[0] = 1;
    return e;
  }
  elem from_int(int64_t v) const;
  elem from_mpz(const Int& v) const {
    elem e{};
    e[0] = mpz_fdiv_ui(v.get_mpz_t(), pN_);
    return e;
  }
  bool is_zero(const elem& a) const { return a == elem{}; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem neg(const elem& a) const;
  elem mul(const elem& a, const elem& b) const;
  elem pow_u64(const elem& a, uint64_t e) const;
  bool is_unit(const elem& a) const { return !k_.is_zero(residue(a)); }
  elem inv(const elem& a) const;

  elem times_p(const elem& a) const;
  // exact division by p; requires every digit-0 component to vanish
  elem divp_exact(const elem& a) const;

  fq_elem residue(const elem& a) const;         // reduction mod p
  elem teich(const fq_elem& r) const;           // omega: multiplicative lift
  elem lift(const fq_elem& r) const;            // naive coefficient lift
  std::vector<fq_elem> digits(const elem& a) const;      // N digits
  elem from_digits(const std::vector<fq_elem>& ds) const;

  elem sigma(const elem& a) const;               // Frobenius lift, order d
  elem sigma_pow(const elem& a, uint32_t k) const;
  elem sigma_inv(const elem& a) const { return sigma_pow(a, d() == 0 ? 0 : d() - 1); }

  elem rand_elem(rng& r) const;
  std::string to_string(const elem& a) const;

 private:
  void init();
  uint32_t p_, N_;
  uint64_t pN_;
  fq_ctx k_;
  std::array<uint64_t, FQ_MAX_D + 1> mt_{};       // Hensel-lifted modulus
  std::array<gr_elem, FQ_MAX_D> red_;             // x^{d+k} mod mt
  std::array<gr_elem, FQ_MAX_D> sigma_mat_;       // theta^{jp} expansions
};

}  // namespace ramlift
