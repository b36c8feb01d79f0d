#include "pilab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "pilab/error.hpp"

namespace pilab::primes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is exact below 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kSegment = 1 << 18;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Appends primes in [lo, hi] given every prime up to sqrt(hi) in `base`.
void sieve_window(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                  std::vector<std::uint64_t>& out) {
  if (lo < 2) lo = 2;
  std::vector<char> composite;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, 0);
    for (std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t m = first; m <= end; m += p) composite[m - start] = 1;
    }
    for (std::uint64_t v = start; v <= end; ++v)
      if (!composite[v - start]) out.push_back(v);
    if (end == hi) break;
  }
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = 1;
  }
  return out;
}

}  // namespace

PrimeTable& PrimeTable::shared() {
  static PrimeTable table;
  return table;
}

std::uint64_t PrimeTable::limit() const {
  std::shared_lock lock(mutex_);
  return limit_;
}

void PrimeTable::extend_to(std::uint64_t limit) {
  {
    std::shared_lock lock(mutex_);
    if (limit <= limit_) return;
  }
  const std::uint64_t root = isqrt(limit);
  std::vector<std::uint64_t> base = small_primes(std::max<std::uint64_t>(root, 2));
  std::unique_lock lock(mutex_);
  if (limit <= limit_) return;
  sieve_window(limit_ + 1, limit, base, primes_);
  limit_ = limit;
}

void PrimeTable::extend_count(std::size_t count) {
  while (true) {
    std::uint64_t current;
    {
      std::shared_lock lock(mutex_);
      if (primes_.size() >= count) return;
      current = limit_;
    }
    // p_n < n(ln n + ln ln n) for n ≥ 6.
    double n = static_cast<double>(std::max<std::size_t>(count, 6));
    auto estimate = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
    extend_to(std::max(estimate, current * 2));
  }
}

std::vector<std::uint64_t> PrimeTable::first(std::size_t count) {
  extend_count(count);
  std::shared_lock lock(mutex_);
  return {primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<std::uint64_t> PrimeTable::up_to(std::uint64_t limit) {
  extend_to(limit);
  std::shared_lock lock(mutex_);
  auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
  return {primes_.begin(), end};
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<std::uint64_t> base = PrimeTable::shared().up_to(isqrt(hi));
  sieve_window(lo, hi, base, out);
  return out;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::uint64_t y = seed, c = seed * 2 + 1, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
  auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
  // 2^26 iterations is far beyond what any 64-bit composite needs.
  constexpr std::uint64_t kMaxIterations = 1ULL << 26;
  while (g == 1 && r < kMaxIterations) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t seed = 1; seed <= 32; ++seed) {
    std::uint64_t d = pollard_brent(n, seed);
    if (d != 1 && d != n) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
  throw FactorError("could not factor composite " + std::to_string(n), std::to_string(n));
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  Factorization result;
  if (n < 2) return result;
  constexpr std::uint64_t kTrialLimit = 1'000'000;
  PrimeTable::shared().extend_to(kTrialLimit);
  std::vector<std::uint64_t> found;
  PrimeTable::shared().read([&](std::span<const std::uint64_t> ps) {
    for (std::uint64_t p : ps) {
      if (p > kTrialLimit || p * p > n) break;
      while (n % p == 0) {
        found.push_back(p);
        n /= p;
      }
    }
    return 0;
  });
  if (n > 1) split(n, found);
  std::sort(found.begin(), found.end());
  for (std::uint64_t p : found) {
    if (!result.empty() && result.back().first == p) ++result.back().second;
    else result.emplace_back(p, 1);
  }
  return result;
}

}  // namespace pilab::primes
