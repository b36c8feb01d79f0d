#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pilab {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt pow_int(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt floor_of(const BigRational& x) {
  return floor_div(x.get_num(), x.get_den());
}

// Normalized rational built from a numerator/denominator pair.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" with den > 0 and the fraction in lowest terms; integers keep "/1".
inline std::string rational_string(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::size_t decimal_length(const BigInt& x) {
  if (x == 0) return 1;
  return BigInt(abs(x)).get_str().size();
}

inline bool fits_u64(const BigInt& x) {
  return x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& x) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof r, 0, 0, x.get_mpz_t());
  return r;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

}  // namespace pilab
