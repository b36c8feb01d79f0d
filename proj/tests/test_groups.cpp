#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracle.hpp"
#include "pilab/error.hpp"
#include "pilab/groups.hpp"
#include "pilab/primes.hpp"

using namespace pilab;

TEST_SUITE("groups") {

TEST_CASE("mult_order examples") {
  CHECK(groups::mult_order(10, 7) == 6);
  CHECK(groups::mult_order(10, 3) == 1);
  CHECK(groups::mult_order(10, 11) == 2);
  CHECK(groups::mult_order(10, 31) == 15);
  CHECK_THROWS_AS(groups::mult_order(10, 4), DomainError);
  CHECK_THROWS_AS(groups::mult_order(10, 1), DomainError);
}

TEST_CASE("order matches the naive loop for m up to 10^4") {
  bool ok = true;
  std::uint64_t checked = 0;
  for (std::uint64_t m = 2; m <= 10000; ++m) {
    if (std::gcd<std::uint64_t>(10, m) != 1) continue;
    ++checked;
    const std::uint64_t N = groups::mult_order(10, m);
    ok = ok && N == oracle::naive_order(10, m);
    ok = ok && groups::totient(m) % N == 0;
  }
  CHECK(ok);
  CHECK(checked == 3999);
}

TEST_CASE("order on large moduli satisfies the defining conditions") {
  for (std::uint64_t m : {1000000007ULL, 999999999989ULL, 4294967291ULL * 3ULL, 340262731ULL}) {
    const std::uint64_t N = groups::mult_order(10, m);
    CHECK(primes::pow_mod(10, N, m) == 1);
    for (auto [l, e] : primes::factorize(N)) CHECK(primes::pow_mod(10, N / l, m) != 1);
    CHECK(groups::totient(m) % N == 0);
  }
}

TEST_CASE("factorization against trial division") {
  for (std::uint64_t n : {2ULL, 97ULL, 1001ULL, 600851475143ULL, 1000000016000000063ULL}) {
    std::uint64_t product = 1;
    for (auto [p, e] : primes::factorize(n)) {
      CHECK(primes::is_prime(p));
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
  for (std::uint64_t n = 2; n < 5000; ++n) CHECK(primes::is_prime(n) == oracle::trial_prime(n));
}

TEST_CASE("subgroup examples") {
  auto a = groups::subgroup(10, 7);
  CHECK(*a.elements == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(a.is_primitive);
  auto b = groups::subgroup(10, 11);
  CHECK(*b.elements == std::vector<std::uint64_t>{1, 10});
  CHECK_FALSE(b.is_primitive);
  for (std::uint64_t m : {2ULL, 9ULL, 97ULL, 1000ULL}) {
    auto c = groups::subgroup(1, m);
    CHECK(*c.elements == std::vector<std::uint64_t>{1});
  }
  auto capped = groups::subgroup(10, 7, 3);
  CHECK_FALSE(capped.elements.has_value());
  CHECK(capped.order == 6);
  auto d = groups::subgroup(3, 1000);
  CHECK(*d.elements == oracle::naive_powers(3, 1000));
  CHECK(d.totient == oracle::naive_totient(1000));
}

TEST_CASE("coset structure examples") {
  cf::Convergent c227{1, 7, 22, 7};
  auto r = groups::coset_structure(c227);
  CHECK(r.hypothesis_holds);
  CHECK(r.H == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(r.G == r.H);
  CHECK(r.h_equals_subgroup);
  CHECK(r.g_equals_coset);
  cf::Convergent c333{2, 15, 333, 106};
  auto f = groups::coset_structure(c333);
  CHECK_FALSE(f.hypothesis_holds);
  CHECK_FALSE(f.base.has_value());
  cf::Convergent c355{3, 1, 355, 113};
  auto g = groups::coset_structure(c355);
  CHECK(g.card_G == 112);  // 10 is a primitive root mod the prime 113
  CHECK(g.card_H == 112);
}

TEST_CASE("coset invariants across pi convergents") {
  auto convs = cf::pi_convergents(12);
  for (std::size_t k = 1; k < convs.size(); ++k) {
    auto r = groups::coset_structure(convs[k]);
    if (!r.hypothesis_holds) continue;
    CAPTURE(k);
    REQUIRE(r.materialized);
    CHECK(r.h_equals_subgroup);
    CHECK(r.g_equals_coset);
    CHECK(r.card_G == r.base->order);
    CHECK(r.card_H == r.base->order);
  }
}

TEST_CASE("artin scan") {
  CHECK_THROWS_AS(groups::artin_scan(50), DomainError);
  auto small = groups::artin_scan(100, true);
  CHECK(small.count_artin <= small.count_primes);
  CHECK(small.count_primes == 23);
  std::vector<std::uint64_t> artin;
  for (const auto& row : small.rows) {
    CHECK(row.order == oracle::naive_order(10, row.q));
    if (row.artin) artin.push_back(row.q);
  }
  CHECK(artin == std::vector<std::uint64_t>{7, 17, 19, 23, 29, 47, 59, 61, 97});
  auto big = groups::artin_scan(100000);
  CHECK(big.count_primes == 9590);
  CHECK(big.count_artin == 3617);
  CHECK(std::fabs(big.density - 0.374) < 0.02);
}

TEST_CASE("artin prime near a convergent") {
  cf::Convergent c355{3, 1, 355, 113};
  auto near = groups::find_artin_prime_near(c355);
  CHECK(near.window_lo == 113);
  CHECK(near.window_hi == 137);
  REQUIRE(near.prime.has_value());
  CHECK(*near.prime == 113);
  CHECK(near.count == 2);  // 113 and 131
  cf::Convergent c227{1, 7, 22, 7};
  CHECK_THROWS_AS(groups::find_artin_prime_near(c227), DomainError);
  cf::Convergent none{0, 1, 25, 24};
  auto empty = groups::find_artin_prime_near(none, 1e-9);
  CHECK_FALSE(empty.prime.has_value());
  CHECK(empty.count == 0);
}

}  // TEST_SUITE
