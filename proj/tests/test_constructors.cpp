#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pilab/constructors.hpp"
#include "pilab/error.hpp"

using namespace pilab;
using constructors::ConcatSpec;
using constructors::Family;
using constructors::StonehamSpec;

namespace {

std::string text(radix::DigitStream& s, std::size_t n) {
  std::string out;
  for (auto d : s.first(n)) out.push_back(radix::digit_char(d));
  return out;
}

std::string text(const std::vector<radix::Digit>& ds) {
  std::string out;
  for (auto d : ds) out.push_back(radix::digit_char(d));
  return out;
}

std::string binary(std::uint64_t n) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + n % 2));
    n /= 2;
  } while (n > 0);
  return s;
}

}  // namespace

TEST_SUITE("constructors") {

TEST_CASE("exponent_a examples") {
  CHECK(constructors::exponent_a({Family::integers}, 9) == 9);
  CHECK(constructors::exponent_a({Family::integers}, 10) == 11);
  CHECK(constructors::exponent_a({Family::primes}, 4) == 4);
  CHECK(constructors::exponent_a({Family::squares}, 4) == 5);
  CHECK(constructors::exponent_a({Family::integers}, 0) == 0);
}

TEST_CASE("concatenation examples") {
  auto ints = constructors::concat_digits({Family::integers}, 20);
  CHECK(text(ints, 20) == "12345678910111213141");
  auto primes = constructors::concat_digits({Family::primes}, 30);
  CHECK(text(primes, 30) == "235711131719232931374143475359");
  auto squares = constructors::concat_digits({Family::squares}, 30);
  CHECK(text(squares, 30) == "149162536496481100121144169196");
  CHECK_THROWS_AS(constructors::concat_digits({Family::integers}, 0), DomainError);
  CHECK_THROWS_AS(constructors::concat_digits({Family::primes, 2}, 10), DomainError);
}

TEST_CASE("digit_at examples") {
  CHECK(constructors::digit_at({Family::integers}, 11) == 0);
  CHECK(constructors::digit_at({Family::integers}, 15) == 2);
  CHECK(constructors::digit_at({Family::squares}, 5) == 6);
  CHECK_THROWS_AS(constructors::digit_at({Family::integers}, 0), DomainError);
}

TEST_CASE("concatenations match the naive oracle") {
  for (const char* family : {"integers", "primes", "squares"}) {
    CAPTURE(family);
    auto s = constructors::concat_digits({constructors::parse_family(family)}, 10000);
    CHECK(text(s, 10000) == oracle::naive_concat(family, 10000));
  }
  std::string bits;
  for (std::uint64_t n = 1; bits.size() < 3000; ++n) bits += binary(n);
  auto b2 = constructors::concat_digits({Family::integers, 2}, 3000);
  CHECK(text(b2, 3000) == bits.substr(0, 3000));
}

TEST_CASE("position consistency for n up to 10^4") {
  const auto ps = oracle::trial_primes(10000);
  std::uint64_t ints = 0, primes = 0, squares = 0;
  bool ok = true;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    ints += std::to_string(n).size();
    squares += std::to_string(n * n).size();
    primes += std::to_string(ps[n - 1]).size();
    ok = ok && constructors::exponent_a({Family::integers}, n) == ints;
    ok = ok && constructors::exponent_a({Family::squares}, n) == squares;
    ok = ok && constructors::exponent_a({Family::primes}, n) == primes;
  }
  CHECK(ok);
  std::uint64_t bin = 0;
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    bin += binary(n).size();
    ok = ok && constructors::exponent_a({Family::integers, 2}, n) == bin;
  }
  CHECK(ok);
}

TEST_CASE("random access agrees with streaming") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
  for (Family f : {Family::integers, Family::primes, Family::squares}) {
    CAPTURE(constructors::to_string(f));
    auto stream = constructors::concat_digits({f}, 1000000);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t pos = pick(rng);
      ok = ok && constructors::digit_at({f}, pos) == stream.at(pos);
    }
    CHECK(ok);
  }
}

TEST_CASE("stoneham digits match exact-rational oracle values") {
  // Python Fraction oracle: floor(b^N · Σ_{c^n + s ≤ N + 60} 1/(c^n b^{c^n + s})).
  auto a = constructors::stoneham_digits({2, 3, 0}, 40);
  CHECK(text(a, 12) == "000010101011");
  CHECK(text(a, 40) == "0000101010111000111000111000111101101000");
  auto b = constructors::stoneham_digits({10, 3, 0}, 10);
  CHECK(text(b, 10) == "0003333334");
  auto c = constructors::stoneham_digits({10, 7, 1}, 30);
  CHECK(text(c, 30) == "000000001428571428571428571428");
  auto d = constructors::stoneham_digits({3, 2, 2}, 30);
  CHECK(text(d, 30) == "000011202021212121221022102210");
}

TEST_CASE("stoneham preconditions") {
  CHECK_THROWS_AS(constructors::stoneham_digits({10, 2, 0}, 10), DomainError);
  CHECK_THROWS_AS(constructors::stoneham_digits({6, 3, 0}, 10), DomainError);
  CHECK_THROWS_AS(constructors::stoneham_digits({2, 1, 0}, 10), DomainError);
}

TEST_CASE("stoneham guard stability") {
  for (StonehamSpec spec : {StonehamSpec{2, 3, 0}, StonehamSpec{10, 3, 0}, StonehamSpec{5, 7, 3}}) {
    for (std::size_t G : {20u, 40u, 80u}) {
      CHECK(text(constructors::stoneham_prefix(spec, 200, G)) ==
            text(constructors::stoneham_prefix(spec, 200, G + 10)));
    }
  }
  auto s = constructors::stoneham_digits({2, 3, 0}, 50);
  CHECK(text(s, 500).substr(0, 50) == text(constructors::stoneham_prefix({2, 3, 0}, 50, 30)));
}

TEST_CASE("prime_terms examples") {
  CHECK(constructors::prime_terms(5) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
  auto p25 = constructors::prime_terms(25);
  CHECK(p25.size() == 25);
  CHECK(p25.back() == 97);
  CHECK(constructors::prime_terms(1) == std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(constructors::prime_terms(0), DomainError);
  CHECK(constructors::prime_terms(5000) == oracle::trial_primes(5000));
}

}  // TEST_SUITE
