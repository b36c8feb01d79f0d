#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pilab/bigint.hpp"
#include "pilab/constants.hpp"
#include "pilab/radix.hpp"

namespace pilab::cf {

/// One continued-fraction step: a_k and p_k/q_k.
struct Convergent {
  std::size_t k = 0;
  BigInt a;
  BigInt p;
  BigInt q;
};

/// Partial quotients of a rational by Euclid's algorithm (finite).
std::vector<BigInt> partial_quotients(const BigRational& x);

/// Convergents for a_0..a_K via p_k = a_k p_{k-1} + p_{k-2}, q_k likewise.
std::vector<Convergent> convergents(const std::vector<BigInt>& quotients);

/// a_0..a_K of a rational. K at or beyond the last quotient is a DomainError.
std::vector<Convergent> cf_expand(const BigRational& x, std::size_t depth);

/// a_0..a_K of integer_part + 0.d_1 d_2 ... . Quotients come from the exact
/// truncations at `digits` and 2·`digits` digits and are released only where
/// both expansions agree (and neither is at its terminal quotient).
std::vector<Convergent> cf_expand(radix::DigitStream& fraction, const BigInt& integer_part,
                                  std::size_t depth, std::size_t digits);

/// Convergents of a verified constant through index `depth`, growing the
/// digit count as needed.
std::vector<Convergent> constant_convergents(constants::Name name, std::size_t depth);
std::vector<Convergent> pi_convergents(std::size_t depth);

/// π − p_k/q_k against 1/(2q_k²), 1/q_k² and the classical 1/(q_k·q_{k+1}).
struct GapReport {
  BigRational gap;    // centre value, from the truncated π
  BigRational error;  // |π − truncated π|
  long double approx = 0;
  bool positive = false;
  bool lower_holds = false;      // 1/(2q²) ≤ gap
  bool upper_holds = false;      // gap ≤ 1/q²
  bool classical_holds = false;  // |gap| < 1/(q·q_next)
  bool certified = false;        // no flag is within `error` of flipping
};

GapReport approximation_gap(const Convergent& conv, const BigInt& next_q,
                            const radix::FixedReal& pi);

/// 10ⁿ·p = a·q + r and (p·q + 1)·10ⁿ = b·q² + s·q + c with 0 ≤ r, s, c < q.
struct ResidueDecomposition {
  std::size_t n = 0;
  BigInt a, r;
  BigInt b, s, c;
};

ResidueDecomposition residue_decompose(const Convergent& conv, std::size_t n);

struct AuditConfig {
  double mu = 2.0;  // irrationality-measure parameter, ≥ 2
  std::size_t n_max = 12;
  bool implied_constant_report = true;  // emit residual·q² columns
  double window_constant = 1.0;         // prime search window: q_k + C·q_k/ln q_k
};

/// An interval endpoint: exact when every ingredient is rational.
struct Endpoint {
  std::optional<BigRational> exact;
  long double approx = 0;
};

struct AuditRow {
  std::size_t n = 0;
  BigInt r, s, c;
  Endpoint lower, upper;
  std::string value;  // {π·10ⁿ}, truncated decimal
  bool pass = false;
  Endpoint margin_lower;  // value − lower
  Endpoint margin_upper;  // upper − value
  std::optional<long double> residual_lower_q2;
  std::optional<long double> residual_upper_q2;
};

struct AuditReport {
  std::string lemma;  // "caseI", "caseII" or "prime"
  std::size_t k = 0;
  BigInt p, q;
  double mu = 2.0;
  bool k_even = false;
  std::optional<std::uint64_t> prime;  // prime-variant modulus
  std::size_t value_digits = 0;        // decimals carried by each value
  std::vector<AuditRow> rows;
};

/// Rows for n ≥ 1 with 10ⁿ ≤ q_k: r/q + 10ⁿ/(2q²) ≤ {π·10ⁿ} ≤ (r+1)/q.
/// Audits record findings; an inequality that fails is a row with pass = false.
AuditReport audit_lemma_caseI(const Convergent& conv, const AuditConfig& config);

/// Rows for 10ⁿ > q_k, n ≤ min(n_max, q_k): r/q + q^{1-μ} ≤ {π·10ⁿ} ≤ s/q + c/q².
AuditReport audit_lemma_caseII(const Convergent& conv, const AuditConfig& config);

/// Smallest prime in [q_k, q_k + C·q_k/ln q_k], if any.
std::optional<std::uint64_t> prime_near(const BigInt& qk, double window_constant);

/// Prime-modulus forms with q the prime near q_k, O(1/q²) terms omitted and
/// the residuals reported instead. Throws DomainError when the window has no prime.
AuditReport audit_lemma_prime_variant(const Convergent& conv, const AuditConfig& config);

}  // namespace pilab::cf
