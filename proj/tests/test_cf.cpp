#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "pilab/cf.hpp"
#include "pilab/constants.hpp"
#include "pilab/error.hpp"

using namespace pilab;
using cf::Convergent;

namespace {

// Known convergents of π (OEIS A002485 / A002486).
const std::vector<std::pair<long, long>> kPiConvergents = {
    {3, 1},           {22, 7},          {333, 106},       {355, 113},
    {103993, 33102},  {104348, 33215},  {208341, 66317},  {312689, 99532},
    {833719, 265381}, {1146408, 364913}, {4272943, 1360120}, {5419351, 1725033},
    {80143857, 25510582}};

radix::DigitStream digits_of(const std::string& s) {
  std::vector<radix::Digit> ds;
  for (char c : s) ds.push_back(static_cast<radix::Digit>(c - '0'));
  return radix::DigitStream::finite(10, std::move(ds));
}

}  // namespace

TEST_SUITE("cf") {

TEST_CASE("pi from 50 digits") {
  auto stream = digits_of(oracle::spigot_pi(100));
  auto convs = cf::cf_expand(stream, 3, 4, 50);
  REQUIRE(convs.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(convs[k].p == kPiConvergents[k].first);
    CHECK(convs[k].q == kPiConvergents[k].second);
  }
  CHECK(convs[4].a == 292);
}

TEST_CASE("pi convergents match the reference list") {
  auto convs = cf::pi_convergents(12);
  for (std::size_t k = 0; k < kPiConvergents.size(); ++k) {
    CHECK(convs[k].p == kPiConvergents[k].first);
    CHECK(convs[k].q == kPiConvergents[k].second);
  }
}

TEST_CASE("rational expansions terminate") {
  const BigRational x = make_rational(355, 113);
  CHECK(cf::partial_quotients(x) == std::vector<BigInt>{3, 7, 16});
  auto convs = cf::cf_expand(x, 2);
  CHECK(convs.back().p == 355);
  CHECK(convs.back().q == 113);
  CHECK_THROWS_AS(cf::cf_expand(x, 3), DomainError);
  CHECK_THROWS_AS(cf::cf_expand(x, 10), DomainError);
}

TEST_CASE("golden ratio has all quotients 1") {
  // φ = (1 + √5)/2 from an integer square root.
  BigInt scale = pow_int(10, 200);
  BigInt root = sqrt(BigInt(5 * scale * scale));
  BigInt phi = (scale + root) / 2;
  std::string frac = phi.get_str().substr(1);
  auto stream = digits_of(frac);
  auto convs = cf::cf_expand(stream, 1, 6, 60);
  for (const auto& c : convs) CHECK(c.a == 1);
  CHECK(convs[6].p == 21);
  CHECK(convs[6].q == 13);
}

TEST_CASE("too few digits is a precision error") {
  auto stream = digits_of("14159");
  CHECK_THROWS_AS(cf::cf_expand(stream, 3, 6, 2), PrecisionError);
}

TEST_CASE("approximation gap examples") {
  auto convs = cf::pi_convergents(4);
  auto pi = constants::const_fixed(constants::Name::pi, 60);
  auto g1 = cf::approximation_gap(convs[1], convs[2].q, pi);
  CHECK(g1.approx == doctest::Approx(-0.00126448926734968).epsilon(1e-12));
  CHECK_FALSE(g1.positive);
  CHECK(g1.classical_holds);
  CHECK(g1.certified);
  auto g2 = cf::approximation_gap(convs[2], convs[3].q, pi);
  CHECK(g2.approx == doctest::Approx(8.32196275291e-05).epsilon(1e-9));
  CHECK(g2.positive);
  CHECK(g2.upper_holds);
  CHECK(g2.gap <= make_rational(1, 106 * 106));
  auto low = constants::const_fixed(constants::Name::pi, 8);
  CHECK_THROWS_AS(cf::approximation_gap(convs[3], convs[4].q, low), PrecisionError);
}

TEST_CASE("recurrence, unimodularity and the classical bound through q_k > 10^6") {
  auto convs = cf::pi_convergents(25);
  auto pi = constants::const_fixed(constants::Name::pi, 200);
  for (std::size_t k = 0; k + 1 < convs.size(); ++k) {
    CAPTURE(k);
    if (k >= 2) {
      CHECK(convs[k].p == convs[k].a * convs[k - 1].p + convs[k - 2].p);
      CHECK(convs[k].q == convs[k].a * convs[k - 1].q + convs[k - 2].q);
    }
    if (k >= 1) {
      BigInt det = convs[k].p * convs[k - 1].q - convs[k - 1].p * convs[k].q;
      CHECK(det == (k % 2 == 1 ? 1 : -1));
    }
    auto g = cf::approximation_gap(convs[k], convs[k + 1].q, pi);
    CHECK(g.classical_holds);
    CHECK(g.positive == (k % 2 == 0));
  }
  CHECK(convs.back().q > 1000000);
}

TEST_CASE("residue decomposition examples") {
  Convergent c{1, 7, 22, 7};
  auto d = cf::residue_decompose(c, 1);
  CHECK(d.a == 31);
  CHECK(d.r == 3);
  CHECK(d.b == 31);
  CHECK(d.s == 4);
  CHECK(d.c == 3);
  Convergent e{3, 1, 355, 113};
  CHECK(cf::residue_decompose(e, 2).r == 18);  // 35500 = 314·113 + 18
  CHECK_THROWS_AS(cf::residue_decompose(e, 0), DomainError);
}

TEST_CASE("reconstruction on random (k, n)") {
  auto convs = cf::pi_convergents(30);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick_k(0, 30), pick_n(1, 40);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto& c = convs[pick_k(rng)];
    const std::size_t n = pick_n(rng);
    auto d = cf::residue_decompose(c, n);
    const BigInt t = pow_int(10, n);
    ok = ok && t * c.p == d.a * c.q + d.r;
    ok = ok && (c.p * c.q + 1) * t == d.b * c.q * c.q + d.s * c.q + d.c;
    ok = ok && d.r >= 0 && d.r < c.q && d.s >= 0 && d.s < c.q && d.c >= 0 && d.c < c.q;
  }
  CHECK(ok);
}

TEST_CASE("case I audit for 333/106") {
  auto convs = cf::pi_convergents(2);
  auto audit = cf::audit_lemma_caseI(convs[2], {});
  REQUIRE(audit.rows.size() == 2);  // 10, 100 ≤ 106
  const auto& row = audit.rows[0];
  CHECK(row.r == 44);
  CHECK(*row.lower.exact == make_rational(44, 106) + make_rational(10, 2 * 106 * 106));
  CHECK(*row.upper.exact == make_rational(45, 106));
  CHECK(row.lower.approx == doctest::Approx(0.415539).epsilon(1e-5));
  CHECK(row.upper.approx == doctest::Approx(0.424528).epsilon(1e-5));
  CHECK(row.value.rfind("0.41592653", 0) == 0);
  CHECK(row.pass);
  CHECK(audit.k_even);
  // 22/7 has no n with 10^n ≤ 7.
  CHECK(cf::audit_lemma_caseI(convs[1], {}).rows.empty());
}

TEST_CASE("case II audit for 22/7 fails and reports margins") {
  auto convs = cf::pi_convergents(1);
  cf::AuditConfig config;
  config.mu = 2;
  auto audit = cf::audit_lemma_caseII(convs[1], config);
  REQUIRE(audit.rows.size() == 7);  // n = 1..min(12, 7)
  const auto& row = audit.rows[0];
  CHECK(row.r == 3);
  CHECK(*row.lower.exact == make_rational(4, 7));
  CHECK(*row.upper.exact == make_rational(31, 49));
  CHECK_FALSE(row.pass);
  CHECK(*row.margin_lower.exact < 0);
  CHECK(*row.margin_upper.exact > 0);
  CHECK_FALSE(audit.k_even);
}

TEST_CASE("audit configuration") {
  auto convs = cf::pi_convergents(3);
  cf::AuditConfig bad;
  bad.mu = 1.5;
  CHECK_THROWS_AS(cf::audit_lemma_caseII(convs[3], bad), DomainError);
  cf::AuditConfig frac;
  frac.mu = 2.5;
  auto audit = cf::audit_lemma_caseII(convs[3], frac);
  REQUIRE_FALSE(audit.rows.empty());
  CHECK_FALSE(audit.rows[0].lower.exact.has_value());
  CHECK(audit.rows[0].lower.approx ==
        doctest::Approx(std::stold(audit.rows[0].r.get_str()) / 113 + std::pow(113.0L, -1.5L)));
}

TEST_CASE("prime variant") {
  auto convs = cf::pi_convergents(3);
  auto a = cf::audit_lemma_prime_variant(convs[2], {});
  CHECK(*a.prime == 107);
  CHECK(a.rows.size() == 12);
  CHECK(a.rows[0].residual_lower_q2.has_value());
  auto b = cf::audit_lemma_prime_variant(convs[3], {});
  CHECK(*b.prime == 113);
  cf::AuditConfig narrow;
  narrow.window_constant = 1e-9;
  Convergent synthetic{0, 1, 25, 24};  // window [24, 25] holds no prime
  CHECK_THROWS_AS(cf::audit_lemma_prime_variant(synthetic, narrow), DomainError);
  CHECK(cf::prime_near(BigInt(106), 1.0) == 107u);
}

TEST_CASE("audits are deterministic") {
  auto convs = cf::pi_convergents(6);
  auto a = cf::audit_lemma_caseII(convs[6], {});
  auto b = cf::audit_lemma_caseII(convs[6], {});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].value == b.rows[i].value);
    CHECK(*a.rows[i].margin_lower.exact == *b.rows[i].margin_lower.exact);
    CHECK(a.rows[i].pass == b.rows[i].pass);
  }
}

}  // TEST_SUITE
