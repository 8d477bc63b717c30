#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramlift {

// Error taxonomy shared by all modules. Contract violations throw; checks
// that can answer "don't know at this precision" return trileans instead.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};
struct not_invertible : std::runtime_error {
  explicit not_invertible(const std::string& m) : std::runtime_error(m) {}
};
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};
struct non_pth_power : std::runtime_error {
  // offending scaled exponent
  int64_t exponent;
  non_pth_power(const std::string& m, int64_t e)
      : std::runtime_error(m), exponent(e) {}
  explicit non_pth_power(int64_t e)
      : std::runtime_error("exponent not divisible by p: " +
                           std::to_string(e)),
        exponent(e) {}
};
struct no_admissible_params : std::runtime_error {
  explicit no_admissible_params(const std::string& m)
      : std::runtime_error(m) {}
};
struct config_error : std::runtime_error {
  explicit config_error(const std::string& m) : std::runtime_error(m) {}
};
struct solver_scope_error : std::runtime_error {
  explicit solver_scope_error(const std::string& m)
      : std::runtime_error(m) {}
};

// Three-valued verdicts for equality/congruence/membership at finite precision.
enum class tri : uint8_t { yes, no, undecided };

inline const char* tri_name(tri t) {
  switch (t) {
    case tri::yes: return "yes";
    case tri::no: return "no";
    default: return "undecided";
  }
}

constexpr int64_t PREC_INF = int64_t(1) << 60;

inline bool prec_is_inf(int64_t p) { return p >= PREC_INF; }

// Saturating add on the precision scale; PREC_INF is absorbing.
inline int64_t padd(int64_t a, int64_t b) {
  if (prec_is_inf(a) || prec_is_inf(b)) return PREC_INF;
  int64_t s = a + b;
  if (s >= PREC_INF) return PREC_INF;
  if (s <= -PREC_INF) return -PREC_INF;
  return s;
}

inline int64_t pmul(int64_t a, int64_t m) {
  if (prec_is_inf(a)) return PREC_INF;
  if (a <= -PREC_INF) return -PREC_INF;
  __int128 s = (__int128)a * m;
  if (s >= PREC_INF) return PREC_INF;
  if (s <= -PREC_INF) return -PREC_INF;
  return (int64_t)s;
}

inline int64_t pmin(int64_t a, int64_t b) { return a < b ? a : b; }

inline uint64_t ipow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline int64_t cdiv_i64(int64_t a, int64_t b) {
  // ceil division for positive b
  if (prec_is_inf(a)) return PREC_INF;
  if (a <= -PREC_INF) return -PREC_INF;
  int64_t q = a / b, r = a % b;
  if (r != 0 && a > 0) ++q;
  return q;
}

inline int64_t fdiv_i64(int64_t a, int64_t b) {
  // floor division for positive b
  if (prec_is_inf(a)) return PREC_INF;
  if (a <= -PREC_INF) return -PREC_INF;
  int64_t q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline int64_t gcd_i64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int64_t lcm_i64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_i64(a, b) * b;
}

inline uint64_t hash_str(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Deterministic PRNG used everywhere randomness appears. splitmix64 is
// platform-independent, unlike <random> distributions.
struct rng {
  uint64_t s;
  explicit rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n), n > 0, by rejection
  uint64_t below(uint64_t n) {
    uint64_t lim = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }
  int64_t range(int64_t lo, int64_t hi) {  // inclusive ends
    return lo + (int64_t)below((uint64_t)(hi - lo + 1));
  }
  // derive an independent stream for a labeled subtask
  rng fork(uint64_t label) const {
    rng r(s ^ (0x6a09e667f3bcc909ULL + label * 0x9e3779b97f4a7c15ULL));
    r.next();
    return r;
  }
  rng fork(const std::string& label) const { return fork(hash_str(label)); }
};

}  // namespace ramlift
