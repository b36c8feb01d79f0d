#include <doctest.h>

#include <cmath>
#include <random>

#include "pilab/groups.hpp"
#include "pilab/kernels.hpp"
#include "pilab/primes.hpp"

using namespace pilab;

namespace {

std::vector<double> random_points(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> u(n);
  for (auto& x : u) x = unit(rng);
  return u;
}

std::vector<radix::Digit> random_digits(std::size_t n, unsigned base, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> pick(0, base - 1);
  std::vector<radix::Digit> d(n);
  for (auto& x : d) x = static_cast<radix::Digit>(pick(rng));
  return d;
}

struct ThreadGuard {
  ~ThreadGuard() { kernels::set_threads(1); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("unit roots reduce before rounding") {
  CHECK(std::abs(kernels::unit_root(0.25, 1) - kernels::cplx(0, 1)) < 1e-15);
  CHECK(std::abs(kernels::unit_root(0.5, 3) - kernels::cplx(-1, 0)) < 1e-15);
  // m·u = 10^6 + 0.5 exactly in binary.
  CHECK(std::abs(kernels::unit_root(0.5, 2000001) - kernels::cplx(-1, 0)) < 1e-12);
  CHECK(std::abs(kernels::unit_root(0.125, -2) - kernels::cplx(0, -1)) < 1e-15);
}

TEST_CASE("compensated sums recover cancelled mass") {
  kernels::CompensatedSum s;
  s.add(1e16, 0);
  for (int i = 0; i < 1000; ++i) s.add(1.0, 0);
  s.add(-1e16, 0);
  CHECK(s.value().real() == 1000.0);
  kernels::CompensatedSum a, b;
  a.add(0.1, 0.2);
  b.add(0.3, -0.2);
  a.add(b);
  CHECK(a.value().real() == doctest::Approx(0.4));
  CHECK(std::fabs(a.value().imag()) < 1e-17);
}

TEST_CASE("serial and parallel weyl sums agree") {
  for (std::size_t n : {1u, 100u, 4096u, 4097u, 50000u}) {
    auto u = random_points(n, static_cast<unsigned>(n));
    for (std::int64_t m : {1, 7, -13, 1000}) {
      auto s = kernels::serial::weyl(u, m);
      auto p = kernels::parallel::weyl(u, m);
      CHECK(std::abs(s - p) < 1e-9 * std::sqrt(static_cast<double>(n)) + 1e-12);
    }
  }
}

TEST_CASE("serial and parallel block counts agree exactly") {
  for (unsigned base : {2u, 10u, 16u}) {
    auto d = random_digits(30000, base, base);
    for (unsigned k = 1; k <= 3; ++k)
      CHECK(kernels::serial::block_counts(d, base, k) == kernels::parallel::block_counts(d, base, k));
  }
}

TEST_CASE("serial and parallel subgroup spectra agree") {
  auto h = groups::subgroup(10, 1009);
  auto s = kernels::serial::subgroup_spectrum(*h.elements, 1009);
  auto p = kernels::parallel::subgroup_spectrum(*h.elements, 1009);
  REQUIRE(s.size() == p.size());
  double worst = 0;
  for (std::size_t a = 0; a < s.size(); ++a) worst = std::max(worst, std::abs(s[a] - p[a]));
  CHECK(worst < 1e-12);
}

TEST_CASE("serial and parallel artin rows agree") {
  auto ps = primes::PrimeTable::shared().up_to(20000);
  std::erase_if(ps, [](std::uint64_t p) { return p == 2 || p == 5; });
  auto s = kernels::serial::artin_rows(ps);
  auto p = kernels::parallel::artin_rows(ps);
  REQUIRE(s.size() == p.size());
  bool same = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    same = same && s[i].q == p[i].q && s[i].order == p[i].order && s[i].artin == p[i].artin;
  CHECK(same);
}

TEST_CASE("parallel output does not depend on the thread count") {
  ThreadGuard guard;
  auto u = random_points(40000, 9);
  auto d = random_digits(40000, 10, 9);
  kernels::set_threads(1);
  const auto w1 = kernels::parallel::weyl(u, 5);
  const auto b1 = kernels::parallel::block_counts(d, 10, 2);
  for (unsigned t : {2u, 3u, 8u}) {
    kernels::set_threads(t);
    const auto w = kernels::parallel::weyl(u, 5);
    CHECK(w.real() == w1.real());
    CHECK(w.imag() == w1.imag());
    CHECK(kernels::parallel::block_counts(d, 10, 2) == b1);
  }
}

}  // TEST_SUITE
