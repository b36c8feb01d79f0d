#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pilab/radix.hpp"

namespace pilab::constructors {

enum class Family { integers, primes, squares };

Family parse_family(std::string_view text);
std::string_view to_string(Family family);

/// Concatenation numbers 0.t_1 t_2 t_3 ... with t_n = n, p_n or n².
/// The primes family is produced in base 10 only.
struct ConcatSpec {
  Family family = Family::integers;
  unsigned base = 10;
};

/// Σ_{n≥1} 1 / (c^n · b^(c^n + s)) with gcd(b, c) = 1 and integer s ≥ 0.
struct StonehamSpec {
  unsigned b = 2;
  std::uint64_t c = 3;
  std::uint64_t s = 0;
};

/// The n-th term of the family (n ≥ 1).
unsigned __int128 term(const ConcatSpec& spec, std::uint64_t n);

/// Digit position where the n-th term ends: Σ_{k≤n} (digit length of t_k).
/// exponent_a(spec, 0) = 0.
std::uint64_t exponent_a(const ConcatSpec& spec, std::uint64_t n);

/// First `count` digits; the stream extends on demand.
radix::DigitStream concat_digits(const ConcatSpec& spec, std::size_t count);

/// Digit i (1-based) by random access: binary search on exponent_a, then index
/// into the term.
radix::Digit digit_at(const ConcatSpec& spec, std::uint64_t position);

/// First `count` base-b digits of the Stoneham-type series.
radix::DigitStream stoneham_digits(const StonehamSpec& spec, std::size_t count);

/// The same digits computed with an explicit tail guard of `guard` base-b
/// digits; throws PrecisionError if that guard cannot certify the prefix.
std::vector<radix::Digit> stoneham_prefix(const StonehamSpec& spec, std::size_t count,
                                          std::size_t guard);

/// p_1 .. p_{n_max}.
std::vector<std::uint64_t> prime_terms(std::size_t n_max);

}  // namespace pilab::constructors
