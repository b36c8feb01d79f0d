#include "pilab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "pilab/error.hpp"

namespace pilab::constants {

using radix::FixedReal;

Name parse_name(std::string_view text) {
  if (text == "pi") return Name::pi;
  if (text == "ln10") return Name::ln10;
  if (text == "ln_pi") return Name::ln_pi;
  throw DomainError("unknown constant '" + std::string(text) + "' (expected pi, ln10, ln_pi)");
}

std::string_view to_string(Name name) {
  switch (name) {
    case Name::pi: return "pi";
    case Name::ln10: return "ln10";
    case Name::ln_pi: return "ln_pi";
  }
  return "?";
}

namespace {

// Σ_j s^j / ((2j+1)·k^{2j+1}) with s = −1 (arctan) or +1 (atanh), scaled by 10^w.
// Each floor division loses under one ulp; the running power carries < 2.
FixedReal inverse_series(unsigned long k, std::size_t w, bool alternating) {
  const BigInt unit = pow_int(10, w);
  const unsigned long k2 = k * k;
  BigInt power = unit / k;
  BigInt sum = 0;
  unsigned long j = 0;
  while (power != 0) {
    BigInt term = power / (2 * j + 1);
    if (alternating && (j & 1)) sum -= term;
    else sum += term;
    power /= k2;
    ++j;
  }
  return FixedReal{sum, w, BigInt(3 * (j + 1) + 4)};
}

FixedReal arctan_inv(unsigned long k, std::size_t w) { return inverse_series(k, w, true); }
FixedReal atanh_inv(unsigned long k, std::size_t w) { return inverse_series(k, w, false); }

// atanh(y) for a fixed-point |y| ≤ 1/2. The series runs in binary fixed
// point (16 bits finer than the decimal scale) so that truncations are shifts.
FixedReal atanh_fixed(const FixedReal& y) {
  const BigInt unit = pow_int(10, y.scale);
  const auto bits = static_cast<mp_bitcnt_t>(std::ceil(y.scale * 3.3219280948873623)) + 16;
  const BigInt yb = BigInt(y.mantissa << bits) / unit;
  const BigInt y2 = BigInt(yb * yb) >> bits;
  BigInt power = yb;
  BigInt sum = 0;
  unsigned long j = 0;
  while (power != 0) {
    sum += power / (2 * j + 1);
    // |power| has shrunk to ~2^len; only len+8 bits of y² can matter, so
    // multiplying by a truncated y² adds under one ulp.
    const std::size_t len = mpz_sizeinbase(power.get_mpz_t(), 2);
    const mp_bitcnt_t drop = bits > len + 8 ? bits - len - 8 : 0;
    BigInt product = power * BigInt(y2 >> drop);
    // Truncate toward zero; a floor would pin negative powers at −1.
    mpz_tdiv_q_2exp(power.get_mpz_t(), product.get_mpz_t(), bits - drop);
    ++j;
  }
  BigInt decimal = sum * unit;
  mpz_tdiv_q_2exp(decimal.get_mpz_t(), decimal.get_mpz_t(), bits);
  return FixedReal{decimal, y.scale, BigInt((j + 2) * 4) + 2 * y.error};
}

FixedReal pi_machin(std::size_t w) {
  FixedReal a = arctan_inv(5, w);
  FixedReal b = arctan_inv(239, w);
  return FixedReal{16 * a.mantissa - 4 * b.mantissa, w, 16 * a.error + 4 * b.error};
}

struct Split {
  BigInt p, q, t;
};

Split chudnovsky_split(unsigned long a, unsigned long b) {
  static const BigInt c3_over_24("10939058860032000");
  if (b - a == 1) {
    Split s;
    if (a == 0) {
      s.p = 1;
      s.q = 1;
    } else {
      s.p = BigInt(6 * a - 5) * (2 * a - 1) * (6 * a - 1);
      s.q = BigInt(a) * a * a * c3_over_24;
    }
    s.t = s.p * (BigInt(13591409) + BigInt(545140134) * a);
    if (a & 1) s.t = -s.t;
    return s;
  }
  const unsigned long m = (a + b) / 2;
  Split l = chudnovsky_split(a, m);
  Split r = chudnovsky_split(m, b);
  return {l.p * r.p, l.q * r.q, r.q * l.t + l.p * r.t};
}

FixedReal pi_chudnovsky(std::size_t w) {
  // ~14.18 digits per term.
  const std::size_t guard = w + 10;
  const unsigned long terms = static_cast<unsigned long>(guard / 14) + 2;
  Split s = chudnovsky_split(0, terms);
  BigInt root;
  BigInt radicand = BigInt(10005) * pow_int(10, 2 * guard);
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  BigInt value = BigInt(426880) * root * s.q / s.t;
  return radix::rescale(FixedReal{value, guard, 16}, w);
}

// (π − a)/(π + a) at the scale of π. d/dπ of it is below 1/5 for a ∈ {3, 4}.
FixedReal mobius_ratio(const FixedReal& pi, unsigned long a) {
  const BigInt unit = pow_int(10, pi.scale);
  BigInt num = pi.mantissa - unit * a;
  BigInt den = pi.mantissa + unit * a;
  return FixedReal{num * unit / den, pi.scale, pi.error + 1};
}

FixedReal ln_pi_primary(std::size_t w) {
  const std::size_t inner = w + 5;
  FixedReal pi = pi_machin(inner);
  FixedReal ln4 = 4 * atanh_inv(3, inner);
  FixedReal rest = 2 * atanh_fixed(mobius_ratio(pi, 4));
  return radix::rescale(ln4 + rest, w);
}

FixedReal ln_pi_cross(std::size_t w) {
  const std::size_t inner = w + 5;
  FixedReal pi = pi_chudnovsky(inner);
  FixedReal ln3 = 22 * atanh_inv(31, inner) + 16 * atanh_inv(49, inner) +
                  10 * atanh_inv(161, inner);
  FixedReal rest = 2 * atanh_fixed(mobius_ratio(pi, 3));
  return radix::rescale(ln3 + rest, w);
}

}  // namespace

FixedReal evaluate(Name name, Method method, std::size_t w) {
  const bool primary = method == Method::primary;
  switch (name) {
    case Name::pi:
      return primary ? pi_machin(w) : pi_chudnovsky(w);
    case Name::ln10:
      if (primary) return 6 * atanh_inv(3, w) + 2 * atanh_inv(9, w);
      return 46 * atanh_inv(31, w) + 34 * atanh_inv(49, w) + 20 * atanh_inv(161, w);
    case Name::ln_pi:
      return primary ? ln_pi_primary(w) : ln_pi_cross(w);
  }
  throw DomainError("unknown constant");
}

Released released_digits(Name name, Method method, std::size_t count) {
  if (count == 0) throw DomainError("constant requests need at least one digit");
  std::size_t w = (11 * count + 9) / 10 + 10;
  for (int attempt = 0; attempt < 8; ++attempt) {
    FixedReal x = evaluate(name, method, w);
    const BigInt drop = pow_int(10, w - count);
    BigInt lo = floor_div(x.mantissa - x.error, drop);
    BigInt hi = floor_div(x.mantissa + x.error, drop);
    if (lo == hi) {
      const BigInt unit = pow_int(10, count);
      Released r;
      r.integer_part = floor_div(lo, unit);
      std::string frac = floor_mod(lo, unit).get_str();
      r.digits = std::string(count - frac.size(), '0') + frac;
      return r;
    }
    // Digit N sits on a run of 9s or 0s; widen the guard.
    w += w / 4 + 10;
  }
  throw PrecisionError("could not certify digit " + std::to_string(count) + " of " +
                       std::string(to_string(name)));
}

void check_agreement(std::string_view primary, std::string_view cross_check) {
  const std::size_t n = std::min(primary.size(), cross_check.size());
  for (std::size_t i = 0; i < n; ++i)
    if (primary[i] != cross_check[i])
      throw ConsistencyError("constant engines disagree at digit " + std::to_string(i + 1), i + 1);
  if (primary.size() != cross_check.size())
    throw ConsistencyError("constant engines released different lengths", n + 1);
}

namespace {

// Single-writer, many-reader table of verified digits.
class DigitCache {
 public:
  std::optional<Released> lookup(Name name, std::size_t count) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(name);
    if (it == table_.end() || it->second.digits.size() < count) return std::nullopt;
    return Released{it->second.integer_part, it->second.digits.substr(0, count)};
  }

  void store(Name name, const Released& r) {
    std::unique_lock lock(mutex_);
    auto& slot = table_[name];
    if (slot.digits.size() < r.digits.size()) slot = r;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Name, Released> table_;
};

DigitCache& cache() {
  static DigitCache instance;
  return instance;
}

std::optional<std::filesystem::path> disk_cache_path(Name name) {
  const char* dir = std::getenv("PI_LAB_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / (std::string(to_string(name)) + ".digits");
}

std::optional<Released> load_disk(Name name, std::size_t count) {
  auto path = disk_cache_path(name);
  if (!path || !std::filesystem::exists(*path)) return std::nullopt;
  std::ifstream in(*path);
  try {
    radix::DigitStream s = radix::read_digit_file(in);
    // Label carries "<name> int=<integer part>".
    auto pos = s.label().find("int=");
    if (pos == std::string::npos || s.size() < count) return std::nullopt;
    Released r;
    r.integer_part = BigInt(s.label().substr(pos + 4));
    r.digits.reserve(s.size());
    for (auto d : s.digits()) r.digits.push_back(radix::digit_char(d));
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_disk(Name name, const Released& r) {
  auto path = disk_cache_path(name);
  if (!path) return;
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  std::vector<radix::Digit> ds(r.digits.begin(), r.digits.end());
  for (auto& d : ds) d = static_cast<radix::Digit>(d - '0');
  auto stream = radix::DigitStream::finite(
      10, std::move(ds), std::string(to_string(name)) + " int=" + r.integer_part.get_str());
  auto tmp = *path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    radix::write_digit_file(out, stream, r.digits.size());
  }
  std::filesystem::rename(tmp, *path, ec);
}

Released verified(Name name, std::size_t count, std::size_t ceiling) {
  if (count == 0) throw DomainError("constant requests need at least one digit");
  if (count > ceiling)
    throw PrecisionError(std::to_string(count) + " digits requested, ceiling is " +
                         std::to_string(ceiling));
  if (auto hit = cache().lookup(name, count)) return *hit;
  if (auto hit = load_disk(name, count)) {
    cache().store(name, *hit);
    hit->digits.resize(count);
    return *hit;
  }
  Released a = released_digits(name, Method::primary, count);
  Released b = released_digits(name, Method::cross_check, count);
  if (a.integer_part != b.integer_part)
    throw ConsistencyError("constant engines disagree on the integer part", 0);
  check_agreement(a.digits, b.digits);
  cache().store(name, a);
  save_disk(name, a);
  return a;
}

}  // namespace

ConstantDigits const_digits(const ConstantRequest& request, std::size_t ceiling) {
  Released r = verified(request.name, request.digits, ceiling);
  const Name name = request.name;
  auto producer = [name, ceiling](std::size_t have, std::size_t want,
                                  std::vector<radix::Digit>& out) {
    std::size_t target = std::max(want, 2 * have);
    if (want <= ceiling) target = std::min(target, ceiling);
    Released more = verified(name, target, ceiling);
    for (std::size_t i = have; i < target; ++i)
      out.push_back(static_cast<radix::Digit>(more.digits[i] - '0'));
  };
  radix::DigitStream stream(10, producer, std::string(to_string(name)));
  stream.require(request.digits);
  return ConstantDigits{r.integer_part, std::move(stream)};
}

FixedReal const_fixed(Name name, std::size_t digits, std::size_t ceiling) {
  Released r = verified(name, digits, ceiling);
  BigInt mantissa = r.integer_part * pow_int(10, digits) + BigInt(r.digits);
  // Truncated digits: the true value lies in [m, m + 1) ulps.
  return FixedReal{mantissa, digits, 1};
}

std::vector<FixedReal> x_sequence(std::size_t n_max, std::size_t precision,
                                  std::size_t ceiling) {
  if (n_max == 0) throw DomainError("the x sequence starts at n = 1");
  const std::size_t w = precision + std::to_string(n_max).size() + 2;
  if (w > ceiling)
    throw PrecisionError("precision " + std::to_string(precision) +
                         " exceeds the constant ceiling");
  FixedReal ln10 = const_fixed(Name::ln10, w, ceiling);
  FixedReal ln_pi = const_fixed(Name::ln_pi, w, ceiling);
  std::vector<FixedReal> xs;
  xs.reserve(n_max);
  FixedReal x = ln_pi;
  for (std::size_t n = 1; n <= n_max; ++n) {
    x = x + ln10;
    xs.push_back(x);
  }
  return xs;
}

void clear_cache() { cache().clear(); }

}  // namespace pilab::constants
