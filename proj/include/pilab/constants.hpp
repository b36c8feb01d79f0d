#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pilab/bigint.hpp"
#include "pilab/radix.hpp"

namespace pilab::constants {

enum class Name { pi, ln10, ln_pi };
enum class Method { primary, cross_check };

inline constexpr std::size_t kDefaultCeiling = 100'000;

Name parse_name(std::string_view text);
std::string_view to_string(Name name);

struct ConstantRequest {
  Name name = Name::pi;
  std::size_t digits = 0;
  Method method = Method::primary;
};

/// Integer part plus the base-10 digits of the fractional part.
struct ConstantDigits {
  BigInt integer_part;
  radix::DigitStream fraction;
};

/// One engine at `working_digits` decimals, with its certified error bound.
///
///   pi     primary: Machin arctangents     cross-check: Chudnovsky (binary splitting)
///   ln10   primary: 6·atanh(1/3)+2·atanh(1/9)
///          cross-check: 46·atanh(1/31)+34·atanh(1/49)+20·atanh(1/161)
///   ln_pi  primary: 2·ln2 + 2·atanh((π−4)/(π+4)) with Machin π
///          cross-check: ln3 + 2·atanh((π−3)/(π+3)) with Chudnovsky π
radix::FixedReal evaluate(Name name, Method method, std::size_t working_digits);

/// Fractional digits released by one engine: ⌈1.1·N⌉+10 working digits, more
/// if the N-th digit is not yet certified by the error bound.
struct Released {
  BigInt integer_part;
  std::string digits;
};
Released released_digits(Name name, Method method, std::size_t count);

/// Throws ConsistencyError naming the first (1-based) differing index.
void check_agreement(std::string_view primary, std::string_view cross_check);

/// Dual-method digits. The stream extends itself by recomputing (and
/// re-verifying) at a larger count, up to `ceiling`.
ConstantDigits const_digits(const ConstantRequest& request,
                            std::size_t ceiling = kDefaultCeiling);

/// The verified constant as a fixed-point real with `digits` decimals and an
/// error bound of one ulp (released digits are truncations).
radix::FixedReal const_fixed(Name name, std::size_t digits,
                             std::size_t ceiling = kDefaultCeiling);

/// x_n = n·ln10 + lnπ for n = 1..n_max, each with error < 10^{-precision}.
std::vector<radix::FixedReal> x_sequence(std::size_t n_max, std::size_t precision,
                                         std::size_t ceiling = kDefaultCeiling);

/// Drops the in-memory digit cache (the on-disk cache under PI_LAB_CACHE is untouched).
void clear_cache();

}  // namespace pilab::constants
