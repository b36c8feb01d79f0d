#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pilab/bigint.hpp"
#include "pilab/groups.hpp"
#include "pilab/kernels.hpp"
#include "pilab/radix.hpp"

namespace pilab::spectra {

/// Points in [0,1), each within `epsilon` of the value it stands for.
struct PointSet {
  std::vector<double> points;
  double epsilon = 0;
  std::string label;
};

/// Throws DomainError if a point lies outside [0,1) or epsilon < 0.
PointSet make_points(std::vector<double> points, double epsilon, std::string label = {});

struct WeylRow {
  std::int64_t m = 0;
  double re = 0, im = 0;  // S_N(m)
  double magnitude = 0;   // |S_N(m)|/N
  double error = 0;       // bound on the error of `magnitude`
};

struct WeylReport {
  std::size_t N = 0;
  double epsilon = 0;
  std::vector<WeylRow> rows;
};

/// S_N(m) = Σ e(m·u_n) for each m in the list. m = 0 or N = 0 is a DomainError.
WeylReport weyl_sum(const PointSet& points, std::span<const std::int64_t> frequencies);

/// D*_N = max_i max(i/N − u_(i), u_(i) − (i−1)/N). N = 0 is a DomainError.
double star_discrepancy(const PointSet& points);

inline constexpr std::uint64_t kBlockTableCap = std::uint64_t{1} << 24;

struct BlockStats {
  unsigned base = 10;
  unsigned k = 1;
  std::uint64_t windows = 0;  // N − k + 1, overlapping
  std::vector<std::uint64_t> counts;  // indexed by the block read as a base-b number
  double max_abs_dev = 0;             // max |count/W − b^{-k}|
  double chi_square = 0;
  std::uint64_t dof = 0;  // b^k − 1
};

/// Counts of every length-k window among the first N digits.
BlockStats block_frequency(radix::DigitStream& digits, std::size_t N, unsigned k);
BlockStats block_frequency(std::span<const radix::Digit> digits, unsigned base, unsigned k);

/// S(a) = Σ_{x∈H} e(a·x/p), a = 0..p−1.
enum class SpectrumMethod { naive, transform };
std::vector<kernels::cplx> subgroup_spectrum(std::span<const std::uint64_t> elements,
                                             std::uint64_t p, SpectrumMethod method);

struct ExpSumReport {
  std::uint64_t p = 0;
  std::uint64_t size_H = 0;
  double c = 0.5;
  double max_magnitude = 0;  // max over a = 1..p−1
  std::uint64_t argmax = 0;
  double bound = 0;  // e^{-(ln p)^c}·#H
  double ratio = 0;  // max_magnitude / bound
  double parseval_sum = 0;  // Σ_{a=0}^{p−1} |S(a)|²
  double parseval_expected = 0;  // p·#H
  std::optional<double> transform_deviation;  // max_a |S_naive(a) − S_transform(a)|
};

/// Needs a prime modulus and materialized elements; c > 0.
ExpSumReport subgroup_expsum(const groups::SubgroupReport& report, double c = 0.5,
                             bool cross_check = true);

struct LipschitzReport {
  std::size_t n = 0;
  BigInt q, s;
  std::string value;  // {π·10ⁿ}, truncated
  double delta = 0;   // {π·10ⁿ} − s/q
  double lhs = 0;     // |e({π·10ⁿ}) − e(s/q)| = 2|sin(πδ)|
  double rhs_scale = 0;  // 1/q²
  double ratio = 0;      // lhs·q²
  bool chord_arc_holds = false;  // lhs ≤ 2π|δ|
  std::size_t digits_used = 0;
};

/// `pi_fraction` holds the decimal digits of π after the point.
LipschitzReport lipschitz_pairing(std::size_t n, const BigInt& q, const BigInt& s,
                                  radix::DigitStream& pi_fraction);

struct WallReport {
  std::string label;
  unsigned base = 10;
  std::size_t N = 0;
  bool degenerate = false;  // every digit used is 0
  WeylReport weyl;
  double discrepancy = 0;
  std::vector<BlockStats> blocks;  // k = 1..k_max
};

/// Digits read per shifted point: enough that b^{-J} is below double resolution.
std::size_t point_depth(unsigned base);

/// u_n = {α·bⁿ}, n = 1..N, read off the digit stream (needs N + point_depth digits).
PointSet shifted_points(radix::DigitStream& alpha, std::size_t N);
/// Needs N ≥ 10·k_max.
WallReport wall_criterion_report(radix::DigitStream& alpha, std::size_t N, unsigned k_max,
                                 std::int64_t m_max);

struct XSequenceAudit {
  PointSet points;  // {x_n}, n = 1..n_max
  WeylReport weyl;
  double discrepancy = 0;
};

XSequenceAudit x_sequence_audit(std::size_t n_max, std::span<const std::int64_t> frequencies);

}  // namespace pilab::spectra
