#include "pilab/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pilab/bigint.hpp"
#include "pilab/error.hpp"
#include "pilab/primes.hpp"

namespace pilab::constructors {

using u128 = unsigned __int128;
using radix::Digit;

Family parse_family(std::string_view text) {
  if (text == "integers") return Family::integers;
  if (text == "primes") return Family::primes;
  if (text == "squares") return Family::squares;
  throw DomainError("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::integers: return "integers";
    case Family::primes: return "primes";
    case Family::squares: return "squares";
  }
  return "?";
}

namespace {

void validate(const ConcatSpec& spec) {
  if (spec.base < 2 || spec.base > 36) throw DomainError("concatenation base must be in [2, 36]");
  if (spec.family == Family::primes && spec.base != 10)
    throw DomainError("the primes concatenation is produced in base 10 only");
}

unsigned length_in_base(u128 v, unsigned base) {
  unsigned len = 1;
  while (v >= base) {
    v /= base;
    ++len;
  }
  return len;
}

u128 isqrt128(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t prime_at(std::uint64_t n) {
  auto& table = primes::PrimeTable::shared();
  table.extend_count(n);
  return table.read([n](std::span<const std::uint64_t> ps) { return ps[n - 1]; });
}

std::uint64_t prime_exponent(std::uint64_t n) {
  if (n == 0) return 0;
  auto& table = primes::PrimeTable::shared();
  table.extend_count(n);
  return table.read([n](std::span<const std::uint64_t> ps) {
    auto end = ps.begin() + static_cast<std::ptrdiff_t>(n);
    std::uint64_t total = 0, counted = 0, bound = 10;
    for (std::uint64_t d = 1; counted < n; ++d, bound *= 10) {
      auto it = std::lower_bound(ps.begin(), end, bound);
      auto below = static_cast<std::uint64_t>(it - ps.begin());
      total += d * (below - counted);
      counted = below;
    }
    return total;
  });
}

// Smallest n with exponent_a(n) ≥ position.
std::uint64_t locate(const ConcatSpec& spec, std::uint64_t position) {
  std::uint64_t hi = position;
  if (spec.family == Family::primes) {
    hi = 1024;
    while (prime_exponent(hi) < position) hi *= 2;
  }
  std::uint64_t lo = 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (exponent_a(spec, mid) >= position) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

void append_term(u128 t, unsigned base, unsigned skip, std::size_t limit, std::vector<Digit>& out) {
  Digit buf[130];
  unsigned len = 0;
  do {
    buf[len++] = static_cast<Digit>(t % base);
    t /= base;
  } while (t > 0);
  for (unsigned k = skip; k < len && out.size() < limit; ++k) out.push_back(buf[len - 1 - k]);
}

}  // namespace

u128 term(const ConcatSpec& spec, std::uint64_t n) {
  if (n == 0) throw DomainError("terms are indexed from 1");
  switch (spec.family) {
    case Family::integers: return n;
    case Family::squares: return static_cast<u128>(n) * n;
    case Family::primes: return prime_at(n);
  }
  return 0;
}

std::uint64_t exponent_a(const ConcatSpec& spec, std::uint64_t n) {
  validate(spec);
  if (n == 0) return 0;
  const unsigned b = spec.base;
  std::uint64_t total = 0;
  switch (spec.family) {
    case Family::integers: {
      // d-digit integers occupy [b^{d-1}, b^d - 1].
      u128 lo = 1;
      for (std::uint64_t d = 1; lo <= n; ++d, lo *= b) {
        u128 hi = std::min<u128>(lo * b - 1, n);
        total += static_cast<std::uint64_t>(d * (hi - lo + 1));
      }
      return total;
    }
    case Family::squares: {
      // k² has d digits for k in [⌈√b^{d-1}⌉, ⌊√(b^d - 1)⌋].
      u128 power = 1;
      for (std::uint64_t d = 1;; ++d, power *= b) {
        u128 lo_sq = isqrt128(power);
        if (lo_sq * lo_sq < power) ++lo_sq;
        if (lo_sq > n) break;
        u128 hi_sq = std::min<u128>(isqrt128(power * b - 1), n);
        if (hi_sq >= lo_sq) total += static_cast<std::uint64_t>(d * (hi_sq - lo_sq + 1));
      }
      return total;
    }
    case Family::primes:
      return prime_exponent(n);
  }
  return total;
}

Digit digit_at(const ConcatSpec& spec, std::uint64_t position) {
  validate(spec);
  if (position == 0) throw DomainError("digit positions start at 1");
  const std::uint64_t n = locate(spec, position);
  const u128 t = term(spec, n);
  const unsigned len = length_in_base(t, spec.base);
  const auto offset = static_cast<unsigned>(position - exponent_a(spec, n - 1));
  u128 v = t;
  for (unsigned k = offset; k < len; ++k) v /= spec.base;
  return static_cast<Digit>(v % spec.base);
}

radix::DigitStream concat_digits(const ConcatSpec& spec, std::size_t count) {
  validate(spec);
  if (count == 0) throw DomainError("at least one digit is required");
  auto producer = [spec](std::size_t have, std::size_t want, std::vector<Digit>& out) {
    std::uint64_t n = locate(spec, have + 1);
    auto skip = static_cast<unsigned>(have - exponent_a(spec, n - 1));
    std::vector<std::uint64_t> ps;
    if (spec.family == Family::primes) ps = primes::PrimeTable::shared().first(locate(spec, want));
    while (out.size() < want) {
      u128 t = spec.family == Family::primes ? ps[n - 1] : term(spec, n);
      append_term(t, spec.base, skip, want, out);
      skip = 0;
      ++n;
    }
  };
  std::string label = "concat-" + std::string(to_string(spec.family)) + "-b" +
                      std::to_string(spec.base);
  radix::DigitStream stream(spec.base, producer, label);
  stream.require(count);
  return stream;
}

std::vector<Digit> stoneham_prefix(const StonehamSpec& spec, std::size_t count,
                                   std::size_t guard) {
  if (spec.b < 2 || spec.b > 36) throw DomainError("Stoneham base must be in [2, 36]");
  if (spec.c < 2) throw DomainError("Stoneham parameter c must be at least 2");
  if (std::gcd(static_cast<std::uint64_t>(spec.b), spec.c) != 1)
    throw DomainError("Stoneham parameters need gcd(b, c) = 1, got gcd(" +
                      std::to_string(spec.b) + ", " + std::to_string(spec.c) + ") = " +
                      std::to_string(std::gcd(static_cast<std::uint64_t>(spec.b), spec.c)));
  if (count == 0) throw DomainError("at least one digit is required");

  // b^N · Σ 1/(c^n b^(c^n+s)) over the terms with c^n + s ≤ N + guard; the
  // rest contributes less than b^{-guard} after scaling.
  const BigInt horizon = BigInt(static_cast<unsigned long>(count + guard));
  BigRational scaled = 0;
  BigInt cn = 1;
  for (;;) {
    cn *= static_cast<unsigned long>(spec.c);
    BigInt e = cn + static_cast<unsigned long>(spec.s);
    if (e > horizon) break;
    const unsigned long exp = e.get_ui();
    if (exp <= count) scaled += make_rational(pow_int(spec.b, count - exp), cn);
    else scaled += make_rational(1, cn * pow_int(spec.b, exp - count));
  }
  BigInt whole = floor_of(scaled);
  BigRational frac = scaled - whole;
  // Released digits are certified when frac + tail < 1, i.e. frac < 1 − b^{-guard}.
  if ((1 - frac) * pow_int(spec.b, guard) <= 1)
    throw PrecisionError("Stoneham guard of " + std::to_string(guard) + " digits is too small");

  std::string text = whole.get_str(static_cast<int>(spec.b));
  if (text.size() > count) throw ConsistencyError("Stoneham prefix overflowed", 0);
  std::vector<Digit> digits(count - text.size(), 0);
  for (char ch : text)
    digits.push_back(static_cast<Digit>(ch <= '9' ? ch - '0' : ch - 'a' + 10));
  return digits;
}

radix::DigitStream stoneham_digits(const StonehamSpec& spec, std::size_t count) {
  auto compute = [spec](std::size_t n) {
    for (std::size_t guard = 10; guard <= 400; guard += 10) {
      try {
        return stoneham_prefix(spec, n, guard);
      } catch (const PrecisionError&) {
      }
    }
    throw PrecisionError("could not certify Stoneham digits");
  };
  auto producer = [compute](std::size_t have, std::size_t want, std::vector<Digit>& out) {
    const std::size_t target = std::max(want, 2 * have);
    std::vector<Digit> all = compute(target);
    out.insert(out.end(), all.begin() + static_cast<std::ptrdiff_t>(have), all.end());
  };
  std::string label = "stoneham-b" + std::to_string(spec.b) + "-c" + std::to_string(spec.c) +
                      "-s" + std::to_string(spec.s);
  radix::DigitStream stream(spec.b, producer, label);
  stream.require(count);
  return stream;
}

std::vector<std::uint64_t> prime_terms(std::size_t n_max) {
  if (n_max == 0) throw DomainError("prime_terms needs n_max >= 1");
  return primes::PrimeTable::shared().first(n_max);
}

}  // namespace pilab::constructors
