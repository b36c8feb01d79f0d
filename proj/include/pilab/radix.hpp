#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pilab/bigint.hpp"

namespace pilab::radix {

using Digit = std::uint8_t;

/// Base-b digits d_1 d_2 d_3 ... of a real in [0,1), materialized lazily.
///
/// Digits are produced in blocks by a deterministic producer. Consumers that
/// know how many digits they need call require(n) up front so that producers
/// which are only cheap in bulk (the constant engines) are called once.
/// Digits already materialized may be read concurrently through at() and
/// digits(); extending a shared stream must be serialized by the caller.
class DigitStream {
 public:
  /// Appends digits have+1 .. want (1-based) to `out`. Throws PrecisionError
  /// when the producer cannot supply that many.
  using Producer =
      std::function<void(std::size_t have, std::size_t want, std::vector<Digit>& out)>;

  DigitStream(unsigned base, Producer producer, std::string label = {});

  /// A stream that holds exactly these digits and cannot be extended.
  static DigitStream finite(unsigned base, std::vector<Digit> digits, std::string label = {});

  unsigned base() const noexcept { return base_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool extensible() const noexcept { return static_cast<bool>(producer_); }

  void require(std::size_t n);
  /// 1-based; extends geometrically when i is past the materialized prefix.
  Digit digit(std::size_t i);
  /// 1-based; i must already be materialized.
  Digit at(std::size_t i) const;
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::span<const Digit> first(std::size_t n);

 private:
  unsigned base_;
  std::string label_;
  std::vector<Digit> digits_;
  Producer producer_;
};

/// Σ_{i≤N} d_i·b^{-i}, exact.
BigRational truncate(DigitStream& stream, std::size_t count);

/// The stream d_{n+1} d_{n+2} ...; equals {α·bⁿ} for α ∈ (0,1).
DigitStream shifted_fraction(const DigitStream& stream, std::size_t shift);

/// Digits of a rational in [0,1) by long division. Terminating expansions
/// continue with zeros, never with a tail of (b-1)s.
DigitStream rational_digits(const BigRational& x, unsigned base, std::string label = {});

/// A decimal fixed-point real carrying a certified error bound:
///   |true value − mantissa/10^scale| ≤ error/10^scale.
struct FixedReal {
  BigInt mantissa;
  std::size_t scale = 0;
  BigInt error;

  static FixedReal exact(const BigInt& mantissa, std::size_t scale) {
    return FixedReal{mantissa, scale, 0};
  }

  BigRational value() const;
  BigRational error_bound() const;
  long double approx() const;
  /// Truncated decimal rendering with `digits` fractional digits (digits ≤ scale).
  std::string decimal(std::size_t digits) const;
};

FixedReal operator+(const FixedReal& a, const FixedReal& b);
FixedReal operator*(unsigned long k, const FixedReal& x);
/// Drop low digits so the result has `scale` fractional digits; error grows by one ulp.
FixedReal rescale(const FixedReal& x, std::size_t scale);

/// {x} for a fixed-point x. Requires x's error to be below 10^{-guard} and
/// refuses (AmbiguityError) when an integer lies within 10^{-guard} of x,
/// unless x is exact.
FixedReal fractional_part(const FixedReal& x, std::size_t guard);

// Digit file format:
//   base=<b> count=<N> label=<string>\n
//   followed by N digit characters, a newline after every 80 and after the last.
void write_digit_file(std::ostream& out, DigitStream& stream, std::size_t count);
DigitStream read_digit_file(std::istream& in);

char digit_char(Digit d);

}  // namespace pilab::radix
