#include "pilab/radix.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "pilab/error.hpp"

namespace pilab::radix {

DigitStream::DigitStream(unsigned base, Producer producer, std::string label)
    : base_(base), label_(std::move(label)), producer_(std::move(producer)) {
  if (base_ < 2 || base_ > 256) throw DomainError("digit stream base must be in [2, 256]");
}

DigitStream DigitStream::finite(unsigned base, std::vector<Digit> digits, std::string label) {
  DigitStream s(base, Producer{}, std::move(label));
  for (Digit d : digits)
    if (d >= base) throw DomainError("digit out of range for base " + std::to_string(base));
  s.digits_ = std::move(digits);
  return s;
}

void DigitStream::require(std::size_t n) {
  if (n <= digits_.size()) return;
  if (!producer_)
    throw PrecisionError("stream '" + label_ + "' holds " + std::to_string(digits_.size()) +
                         " digits, " + std::to_string(n) + " requested");
  const std::size_t have = digits_.size();
  producer_(have, n, digits_);
  if (digits_.size() < n)
    throw PrecisionError("producer for '" + label_ + "' stopped at digit " +
                         std::to_string(digits_.size()));
  for (std::size_t i = have; i < digits_.size(); ++i)
    if (digits_[i] >= base_)
      throw ConsistencyError("producer emitted digit out of range at index " +
                                 std::to_string(i + 1),
                             i + 1);
}

Digit DigitStream::digit(std::size_t i) {
  if (i == 0) throw DomainError("digit positions start at 1");
  if (i > digits_.size()) {
    std::size_t target = std::max(i, digits_.size() + digits_.size() / 2 + 64);
    if (!producer_) target = i;
    require(target);
  }
  return digits_[i - 1];
}

Digit DigitStream::at(std::size_t i) const {
  if (i == 0 || i > digits_.size())
    throw PrecisionError("digit " + std::to_string(i) + " of '" + label_ + "' not materialized");
  return digits_[i - 1];
}

std::span<const Digit> DigitStream::first(std::size_t n) {
  require(n);
  return std::span<const Digit>(digits_).first(n);
}

BigRational truncate(DigitStream& stream, std::size_t count) {
  if (count == 0) throw DomainError("empty truncation: at least one digit is required");
  auto ds = stream.first(count);
  // Chunked Horner keeps the bignum work quasi-linear for long prefixes.
  const unsigned long b = stream.base();
  BigInt num = 0;
  std::size_t i = 0;
  while (i < ds.size()) {
    unsigned long chunk = 0, scale = 1;
    std::size_t j = 0;
    for (; j < 8 && i < ds.size(); ++j, ++i) {
      chunk = chunk * b + ds[i];
      scale *= b;
    }
    num *= scale;
    num += chunk;
  }
  return make_rational(num, pow_int(b, count));
}

DigitStream shifted_fraction(const DigitStream& stream, std::size_t shift) {
  if (shift == 0) return stream;
  auto source = std::make_shared<DigitStream>(stream);
  auto producer = [source, shift](std::size_t have, std::size_t want, std::vector<Digit>& out) {
    auto ds = source->first(shift + want);
    out.insert(out.end(), ds.begin() + static_cast<std::ptrdiff_t>(shift + have), ds.end());
  };
  DigitStream shifted(stream.base(), producer,
                      stream.label() + ">>" + std::to_string(shift));
  // Anything the source already holds is available without calling the producer.
  if (stream.size() > shift) shifted.require(stream.size() - shift);
  return shifted;
}

DigitStream rational_digits(const BigRational& x, unsigned base, std::string label) {
  if (x < 0 || x >= 1) throw DomainError("rational digit stream needs a value in [0,1)");
  // Copies of a stream share the producer, so it must depend only on `have`.
  auto producer = [num = BigInt(x.get_num()), den = BigInt(x.get_den()), base](
                      std::size_t have, std::size_t want, std::vector<Digit>& out) {
    BigInt remainder;
    BigInt b = base;
    mpz_powm_ui(remainder.get_mpz_t(), b.get_mpz_t(), have, den.get_mpz_t());
    remainder = (remainder * num) % den;
    for (std::size_t i = have; i < want; ++i) {
      remainder *= base;
      BigInt q = remainder / den;
      remainder -= q * den;
      out.push_back(static_cast<Digit>(q.get_ui()));
    }
  };
  if (label.empty()) label = rational_string(x);
  return DigitStream(base, producer, std::move(label));
}

BigRational FixedReal::value() const {
  return make_rational(mantissa, pow_int(10, scale));
}

BigRational FixedReal::error_bound() const {
  return make_rational(error, pow_int(10, scale));
}

long double FixedReal::approx() const {
  // 40 significant digits are plenty for a long double.
  if (scale <= 40) return std::stold(decimal(scale));
  BigInt head = mantissa / pow_int(10, scale - 40);
  FixedReal cut{head, 40, 0};
  return std::stold(cut.decimal(40));
}

std::string FixedReal::decimal(std::size_t digits) const {
  if (digits > scale) throw DomainError("requested more decimals than the value carries");
  const BigInt unit = pow_int(10, scale - digits);
  // Truncate toward zero so the sign is rendered separately.
  BigInt m = abs(mantissa) / unit;
  std::string s = m.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = mantissa < 0 && m != 0 ? "-" : "";
  out += s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return out;
}

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
  if (a.scale == b.scale) return {a.mantissa + b.mantissa, a.scale, a.error + b.error};
  const FixedReal& hi = a.scale > b.scale ? a : b;
  const FixedReal& lo = a.scale > b.scale ? b : a;
  BigInt up = pow_int(10, hi.scale - lo.scale);
  return {hi.mantissa + lo.mantissa * up, hi.scale, hi.error + lo.error * up};
}

FixedReal operator*(unsigned long k, const FixedReal& x) {
  return {x.mantissa * k, x.scale, x.error * k};
}

FixedReal rescale(const FixedReal& x, std::size_t scale) {
  if (scale >= x.scale) {
    BigInt up = pow_int(10, scale - x.scale);
    return {x.mantissa * up, scale, x.error * up};
  }
  BigInt down = pow_int(10, x.scale - scale);
  BigInt m = floor_div(x.mantissa, down);
  BigInt e = floor_div(x.error + down - 1, down) + 1;
  return {m, scale, e};
}

FixedReal fractional_part(const FixedReal& x, std::size_t guard) {
  const BigInt unit = pow_int(10, x.scale);
  if (x.error == 0) return {floor_mod(x.mantissa, unit), x.scale, 0};
  if (guard > x.scale)
    throw PrecisionError("value carries " + std::to_string(x.scale) +
                         " decimals, guard asks for " + std::to_string(guard));
  const BigInt window = pow_int(10, x.scale - guard);
  if (x.error >= window)
    throw PrecisionError("value error exceeds 10^-" + std::to_string(guard));
  // An integer k is too close when k·10^scale lies strictly inside (m − w, m + w).
  BigInt lo = x.mantissa - window + 1;
  BigInt hi = x.mantissa + window - 1;
  BigInt below = floor_div(hi, unit);
  BigInt above = -floor_div(-lo, unit);
  if (below >= above)
    throw AmbiguityError("value lies within 10^-" + std::to_string(guard) + " of the integer " +
                         above.get_str());
  return {floor_mod(x.mantissa, unit), x.scale, x.error};
}

char digit_char(Digit d) {
  return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

void write_digit_file(std::ostream& out, DigitStream& stream, std::size_t count) {
  if (stream.base() > 36) throw DomainError("digit files support bases up to 36");
  auto ds = stream.first(count);
  out << "base=" << stream.base() << " count=" << count << " label=" << stream.label() << '\n';
  std::string line;
  line.reserve(81);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    line.push_back(digit_char(ds[i]));
    if (line.size() == 80 || i + 1 == ds.size()) {
      line.push_back('\n');
      out << line;
      line.clear();
    }
  }
}

DigitStream read_digit_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw DomainError("digit file is empty");
  unsigned base = 0;
  std::size_t count = 0;
  std::string label;
  std::istringstream hs(header);
  std::string field;
  bool have_base = false, have_count = false;
  while (hs >> field) {
    if (field.rfind("base=", 0) == 0) {
      base = static_cast<unsigned>(std::stoul(field.substr(5)));
      have_base = true;
    } else if (field.rfind("count=", 0) == 0) {
      count = std::stoull(field.substr(6));
      have_count = true;
    } else if (field.rfind("label=", 0) == 0) {
      // The label runs to the end of the line.
      auto pos = header.find("label=");
      label = header.substr(pos + 6);
      break;
    } else {
      throw DomainError("unexpected digit file header field '" + field + "'");
    }
  }
  if (!have_base || !have_count) throw DomainError("digit file header needs base= and count=");
  std::vector<Digit> digits;
  digits.reserve(count);
  std::string line;
  while (std::getline(in, line)) {
    for (char ch : line) {
      int v;
      if (ch >= '0' && ch <= '9') v = ch - '0';
      else if (ch >= 'a' && ch <= 'z') v = ch - 'a' + 10;
      else if (ch == '\r') continue;
      else throw DomainError(std::string("invalid digit character '") + ch + "'");
      digits.push_back(static_cast<Digit>(v));
    }
  }
  if (digits.size() != count)
    throw DomainError("digit file declares " + std::to_string(count) + " digits but holds " +
                      std::to_string(digits.size()));
  return DigitStream::finite(base, std::move(digits), label);
}

}  // namespace pilab::radix
