#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pilab/cf.hpp"
#include "pilab/kernels.hpp"

namespace pilab::groups {

inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

struct SubgroupReport {
  std::uint64_t modulus = 0;
  std::uint64_t generator = 0;
  std::uint64_t order = 0;
  std::uint64_t totient = 0;
  bool is_primitive = false;  // order == totient
  std::optional<std::vector<std::uint64_t>> elements;  // sorted, when order ≤ cap
};

std::uint64_t totient(std::uint64_t m);

/// ord_m(g) from the factorization of φ(m) by divisor descent.
/// gcd(g, m) ≠ 1 or m < 2 is a DomainError; an unfactorable φ(m) is a FactorError.
std::uint64_t mult_order(std::uint64_t g, std::uint64_t m);

SubgroupReport subgroup(std::uint64_t g, std::uint64_t m,
                        std::uint64_t element_cap = kDefaultElementCap);

struct CosetReport {
  std::size_t k = 0;
  BigInt p, q;
  bool hypothesis_holds = false;  // gcd(10, q_k) = 1
  std::optional<SubgroupReport> base;
  bool materialized = false;  // G and H built (order ≤ cap)
  std::vector<std::uint64_t> G;  // {p_k·10ⁿ mod q_k}, sorted
  std::vector<std::uint64_t> H;  // {(p_k·q_k + 1)·10ⁿ mod q_k}, sorted
  bool h_equals_subgroup = false;
  bool g_equals_coset = false;  // G = p_k·⟨10⟩
  std::uint64_t card_G = 0, card_H = 0;
};

/// A gcd(10, q_k) ≠ 1 is reported through hypothesis_holds, not thrown.
CosetReport coset_structure(const cf::Convergent& conv,
                            std::uint64_t element_cap = kDefaultElementCap);

struct ArtinScan {
  std::uint64_t limit = 0;
  std::uint64_t count_primes = 0;  // primes ≤ limit other than 2 and 5
  std::uint64_t count_artin = 0;   // those with ord_q(10) = q - 1
  double density = 0;
  std::vector<kernels::ArtinRow> rows;
};

/// limit < 100 is a DomainError.
ArtinScan artin_scan(std::uint64_t limit, bool keep_rows = false);

struct ArtinNear {
  std::uint64_t window_lo = 0, window_hi = 0;
  std::optional<std::uint64_t> prime;  // least qualifying prime
  std::uint64_t count = 0;             // qualifying primes in the window
};

/// Primes q in [q_k, q_k + ⌈C·q_k/ln q_k⌉] with ord_q(10) = q - 1 and
/// gcd(p_k·q_k + 1, q) = 1. q_k < 11 is a DomainError.
ArtinNear find_artin_prime_near(const cf::Convergent& conv, double window_constant = 1.0);

}  // namespace pilab::groups
