#ifndef KOSZUL_FIELDS_HPP
#define KOSZUL_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

// Runtime description of the coefficient field, as it appears in
// presentation files and on the command line.
struct FieldSpec {
  enum class Kind { rationals, prime } kind = Kind::rationals;
  std::uint64_t p = 0;  // only meaningful for Kind::prime

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::prime, p}; }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const {
    return kind == Kind::rationals ? "QQ" : "GF " + std::to_string(p);
  }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Exact rational arithmetic. Stateless; every element is a canonicalized
// GMP rational, so no rounding can ever occur.
struct Rationals {
  using Elt = mpq_class;

  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long v) const { return Elt(v); }
  bool is_zero(const Elt& a) const { return a == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt inv(const Elt& a) const { return Elt(1) / a; }
  Elt div(const Elt& a, const Elt& b) const { return a / b; }
  std::string str(const Elt& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

// The prime field F_p for a word-sized prime. Elements are canonical
// representatives in [0, p); p^2 must fit in 64 bits.
class PrimeField {
 public:
  using Elt = std::uint64_t;

  static constexpr std::uint64_t kDefaultP = 32003;

  explicit PrimeField(std::uint64_t p = kDefaultP) : p_(p) {
    if (!is_prime_u64(p)) throw InputError("field order " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t(1) << 31)) throw InputError("prime " + std::to_string(p) + " too large (must fit a machine half-word)");
  }

  std::uint64_t p() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p_; }
  Elt from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elt>(r);
  }
  bool is_zero(const Elt& a) const { return a == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  Elt add(const Elt& a, const Elt& b) const {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elt sub(const Elt& a, const Elt& b) const { return a >= b ? a - b : a + p_ - b; }
  Elt mul(const Elt& a, const Elt& b) const { return (a * b) % p_; }
  Elt neg(const Elt& a) const { return a == 0 ? 0 : p_ - a; }
  Elt inv(const Elt& a) const {
    if (a == 0) throw InvariantViolation("division by zero in F_p");
    // Fermat: a^(p-2) mod p.
    Elt r = 1, base = a;
    std::uint64_t e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
  std::string str(const Elt& a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

 private:
  std::uint64_t p_;
};

}  // namespace koszul

#endif  // KOSZUL_FIELDS_HPP
