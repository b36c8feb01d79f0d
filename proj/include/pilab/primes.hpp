#pragma once

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

namespace pilab::primes {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Grow-only table of all primes up to some limit, filled by a segmented
/// sieve. Readers share the table; growth takes the writer lock.
class PrimeTable {
 public:
  static PrimeTable& shared();

  void extend_to(std::uint64_t limit);
  void extend_count(std::size_t count);

  std::vector<std::uint64_t> first(std::size_t count);
  std::vector<std::uint64_t> up_to(std::uint64_t limit);
  std::uint64_t limit() const;

  /// Runs f(span of all sieved primes) under the reader lock.
  template <class F>
  decltype(auto) read(F&& f) const {
    std::shared_lock lock(mutex_);
    return f(std::span<const std::uint64_t>(primes_));
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 1;
};

/// Primes in [lo, hi] via a segmented sieve over that window only.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Prime factorization, sorted by prime. Trial division by primes up to 10^6,
/// then Pollard–Brent rho with deterministic seeds; a cofactor that survives
/// every seed raises FactorError naming it.
Factorization factorize(std::uint64_t n);

}  // namespace pilab::primes
