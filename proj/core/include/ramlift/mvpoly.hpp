#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ramlift/rational.hpp"

namespace ramlift {

// sparse multivariate polynomial over Q with uint16 exponents; exponent
// vectors always have length nv
struct mvq {
  uint32_t nv = 0;
  std::map<std::vector<uint16_t>, Rat> t;
};

mvq mv_zero(uint32_t nv);
mvq mv_const(uint32_t nv, const Rat& c);
mvq mv_var(uint32_t nv, uint32_t i, uint32_t exp = 1);
void mv_add_term(mvq& a, const std::vector<uint16_t>& key, const Rat& c);
mvq mv_add(const mvq& a, const mvq& b);
mvq mv_sub(const mvq& a, const mvq& b);
mvq mv_neg(const mvq& a);
mvq mv_mul(const mvq& a, const mvq& b);
mvq mv_pow(const mvq& a, uint64_t e);
mvq mv_scale(const mvq& a, const Rat& c);
bool mv_is_integral(const mvq& a);
// divide every coefficient by den and require the result to be integral
mvq mv_divexact(const mvq& a, const Int& den);
Rat mv_eval_q(const mvq& a, const std::vector<Rat>& vals);

}  // namespace ramlift
