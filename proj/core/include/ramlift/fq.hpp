#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ramlift/rational.hpp"
#include "ramlift/util.hpp"

namespace ramlift {

// F_{p^d} elements as coefficient vectors over the basis 1, g, ..., g^{d-1}
// where g is the class of x modulo the defining polynomial. Entries are < p
// and slots at indices >= d are zero, so equality is plain array equality.
inline constexpr uint32_t FQ_MAX_D = 8;
using fq_elem = std::array<uint16_t, FQ_MAX_D>;

class fq_ctx {
 public:
  using elem = fq_elem;

  // default modulus: the monic irreducible of degree d whose coefficient
  // tuple (a_0, a_1, ..., a_{d-1}) has the smallest value sum a_i p^i.
  // For d = 1 the modulus is x - 1 so that the class of x is 1 (a Teichmuller
  // root, matching the Galois-ring construction).
  fq_ctx(uint32_t p, uint32_t d);
  fq_ctx(uint32_t p, uint32_t d, const std::vector<uint16_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t d() const { return d_; }
  uint64_t q() const { return q_; }
  const std::vector<uint16_t>& modulus() const { return mod_; }

  elem zero() const { return elem{}; }
  elem one() const {
    elem e{};
    e[0] = 1;
    return e;
  }
  elem gen() const;  // class of x
  elem from_int(int64_t v) const;
  elem from_mpz(const Int& v) const {
    long r = mpz_fdiv_ui(v.get_mpz_t(), p_);
    return from_int(r);
  }
  bool is_zero(const elem& a) const { return a == elem{}; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem neg(const elem& a) const;
  elem mul(const elem& a, const elem& b) const;
  bool is_unit(const elem& a) const { return !is_zero(a); }
  elem inv(const elem& a) const;
  elem pow_u64(const elem& a, uint64_t e) const;
  elem frob(const elem& a) const;          // x -> x^p
  elem frob_pow(const elem& a, uint32_t k) const;
  elem pth_root(const elem& a) const;      // unique in a finite field

  // bijective enumeration, index = sum a_i p^i < q
  elem elem_from_index(uint64_t idx) const;
  uint64_t index_of(const elem& a) const;
  elem rand_elem(rng& r) const { return elem_from_index(r.below(q_)); }
  elem rand_unit(rng& r) const { return elem_from_index(1 + r.below(q_ - 1)); }

  std::string to_string(const elem& a) const;

 private:
  void init();
  uint32_t p_, d_;
  uint64_t q_;
  std::vector<uint16_t> mod_;                 // coeffs 0..d, monic
  std::array<fq_elem, FQ_MAX_D> red_;         // x^{d+k} mod modulus
  std::array<fq_elem, FQ_MAX_D> frob_mat_;    // (x^j)^p mod modulus
  std::array<fq_elem, FQ_MAX_D> root_mat_;    // inverse Frobenius matrix
};

// embedding F_{p^d} -> F_{p^{d*m}} determined by the smallest-index root of
// the source modulus in the target field
struct fq_embed {
  const fq_ctx* src = nullptr;
  const fq_ctx* dst = nullptr;
  fq_elem gen_image{};
  fq_embed() = default;
  fq_embed(const fq_ctx& s, const fq_ctx& t);
  fq_elem map(const fq_elem& a) const;
};

}  // namespace ramlift
