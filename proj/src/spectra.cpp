#include "pilab/spectra.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include <fftw3.h>

#include "pilab/constants.hpp"
#include "pilab/error.hpp"
#include "pilab/primes.hpp"

namespace pilab::spectra {

PointSet make_points(std::vector<double> points, double epsilon, std::string label) {
  if (!(epsilon >= 0)) throw DomainError("point error bound must be non-negative");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] >= 0 && points[i] < 1))
      throw DomainError("point " + std::to_string(i + 1) + " = " + std::to_string(points[i]) +
                        " is outside [0,1)");
  }
  return {std::move(points), epsilon, std::move(label)};
}

WeylReport weyl_sum(const PointSet& points, std::span<const std::int64_t> frequencies) {
  if (points.points.empty()) throw DomainError("Weyl sums need at least one point");
  WeylReport report;
  report.N = points.points.size();
  report.epsilon = points.epsilon;
  const auto N = static_cast<double>(report.N);
  for (std::int64_t m : frequencies) {
    if (m == 0) throw DomainError("frequency m = 0 is excluded from Weyl sums");
    const kernels::cplx s = kernels::parallel::weyl(points.points, m);
    WeylRow row;
    row.m = m;
    row.re = s.real();
    row.im = s.imag();
    row.magnitude = std::abs(s) / N;
    row.error = 2 * std::numbers::pi * std::fabs(static_cast<double>(m)) * points.epsilon +
                8 * DBL_EPSILON;
    report.rows.push_back(row);
  }
  return report;
}

double star_discrepancy(const PointSet& points) {
  if (points.points.empty()) throw DomainError("discrepancy needs at least one point");
  std::vector<double> u = points.points;
  std::stable_sort(u.begin(), u.end());
  const auto N = static_cast<double>(u.size());
  double d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double above = static_cast<double>(i + 1) / N - u[i];
    const double below = u[i] - static_cast<double>(i) / N;
    d = std::max({d, above, below});
  }
  return d;
}

namespace {

std::uint64_t checked_table_size(unsigned base, unsigned k) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size > kBlockTableCap / base)
      throw DomainError("block table " + std::to_string(base) + "^" + std::to_string(k) +
                        " exceeds the cap of " + std::to_string(kBlockTableCap) +
                        " entries; use a smaller k");
    size *= base;
  }
  return size;
}

}  // namespace

BlockStats block_frequency(std::span<const radix::Digit> digits, unsigned base, unsigned k) {
  if (k == 0) throw DomainError("block length must be at least 1");
  if (digits.size() < k)
    throw DomainError("need N >= k, got N = " + std::to_string(digits.size()) +
                      ", k = " + std::to_string(k));
  const std::uint64_t size = checked_table_size(base, k);
  BlockStats stats;
  stats.base = base;
  stats.k = k;
  stats.windows = digits.size() - k + 1;
  stats.counts = kernels::parallel::block_counts(digits, base, k);
  stats.dof = size - 1;
  const double W = static_cast<double>(stats.windows);
  const double p = 1.0 / static_cast<double>(size);
  const double expected = W * p;
  for (std::uint64_t c : stats.counts) {
    const double dev = std::fabs(static_cast<double>(c) / W - p);
    stats.max_abs_dev = std::max(stats.max_abs_dev, dev);
    const double diff = static_cast<double>(c) - expected;
    stats.chi_square += diff * diff / expected;
  }
  return stats;
}

BlockStats block_frequency(radix::DigitStream& digits, std::size_t N, unsigned k) {
  digits.require(N);
  return block_frequency(digits.digits().first(N), digits.base(), k);
}

namespace {

std::mutex fftw_mutex;  // FFTW planning is not thread-safe

std::vector<kernels::cplx> transform_spectrum(std::span<const std::uint64_t> elements,
                                              std::uint64_t p) {
  const int n = static_cast<int>(p);
  fftw_complex* in = fftw_alloc_complex(p);
  fftw_complex* out = fftw_alloc_complex(p);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_mutex);
    plan = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (std::uint64_t i = 0; i < p; ++i) in[i][0] = in[i][1] = 0;
  for (std::uint64_t x : elements) in[x % p][0] += 1;
  // The unnormalized backward transform is Σ_x f(x)·e^{+2πi·a·x/p}.
  fftw_execute(plan);
  std::vector<kernels::cplx> result(p);
  for (std::uint64_t a = 0; a < p; ++a) result[a] = {out[a][0], out[a][1]};
  {
    std::lock_guard lock(fftw_mutex);
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return result;
}

}  // namespace

std::vector<kernels::cplx> subgroup_spectrum(std::span<const std::uint64_t> elements,
                                             std::uint64_t p, SpectrumMethod method) {
  if (p < 2 || p > (std::uint64_t{1} << 31)) throw DomainError("spectrum modulus out of range");
  if (method == SpectrumMethod::transform) return transform_spectrum(elements, p);
  return kernels::parallel::subgroup_spectrum(elements, p);
}

ExpSumReport subgroup_expsum(const groups::SubgroupReport& report, double c, bool cross_check) {
  const std::uint64_t p = report.modulus;
  if (!primes::is_prime(p))
    throw DomainError("exponential sums need a prime modulus, got " + std::to_string(p));
  if (!report.elements) throw DomainError("subgroup elements were not materialized");
  if (!(c > 0)) throw DomainError("exponent parameter c must be positive");
  const auto& H = *report.elements;
  ExpSumReport out;
  out.p = p;
  out.size_H = H.size();
  out.c = c;
  const std::vector<kernels::cplx> S = subgroup_spectrum(H, p, SpectrumMethod::naive);
  double parseval = 0;
  for (std::uint64_t a = 0; a < p; ++a) {
    const double mag = std::abs(S[a]);
    parseval += mag * mag;
    if (a > 0 && mag > out.max_magnitude) {
      out.max_magnitude = mag;
      out.argmax = a;
    }
  }
  out.parseval_sum = parseval;
  out.parseval_expected = static_cast<double>(p) * static_cast<double>(H.size());
  const double lp = std::log(static_cast<double>(p));
  out.bound = std::exp(-std::pow(lp, c)) * static_cast<double>(H.size());
  out.ratio = out.max_magnitude / out.bound;
  if (cross_check) {
    const std::vector<kernels::cplx> T = subgroup_spectrum(H, p, SpectrumMethod::transform);
    double dev = 0;
    for (std::uint64_t a = 0; a < p; ++a) dev = std::max(dev, std::abs(S[a] - T[a]));
    out.transform_deviation = dev;
  }
  return out;
}

LipschitzReport lipschitz_pairing(std::size_t n, const BigInt& q, const BigInt& s,
                                  radix::DigitStream& pi_fraction) {
  if (pi_fraction.base() != 10) throw DomainError("the pairing reads decimal digits of pi");
  if (q < 1) throw DomainError("modulus must be positive");
  LipschitzReport out;
  out.n = n;
  out.q = q;
  out.s = s;
  // Truncation error 10^{-D} sits far below the 1/q² scale being measured.
  const std::size_t D = 2 * decimal_length(q) + 20;
  out.digits_used = n + D;
  if (!pi_fraction.extensible() && pi_fraction.size() < n + D)
    throw PrecisionError("pairing at n = " + std::to_string(n) + ", q = " + q.get_str() +
                         " needs " + std::to_string(n + D) + " digits of pi");
  pi_fraction.require(n + D);
  radix::DigitStream shifted = radix::shifted_fraction(pi_fraction, n);
  const BigRational v = radix::truncate(shifted, D);
  radix::FixedReal fixed{BigInt(v * pow_int(10, D)), D, 0};
  out.value = fixed.decimal(D);
  const BigRational delta = v - make_rational(s, q);
  out.delta = delta.get_d();
  const long double lhs = 2 * std::fabs(std::sin(std::numbers::pi_v<long double> * out.delta));
  out.lhs = static_cast<double>(lhs);
  const double q2 = q.get_d() * q.get_d();
  out.rhs_scale = 1 / q2;
  out.ratio = out.lhs * q2;
  out.chord_arc_holds = lhs <= 2 * std::numbers::pi_v<long double> * std::fabs(out.delta);
  return out;
}

std::size_t point_depth(unsigned base) {
  return static_cast<std::size_t>(std::ceil(17 * std::log(10.0) / std::log(double(base)))) + 1;
}

PointSet shifted_points(radix::DigitStream& alpha, std::size_t N) {
  const std::size_t J = point_depth(alpha.base());
  alpha.require(N + J);
  auto d = alpha.digits();
  const long double b = alpha.base();
  std::vector<double> points(N);
  for (std::size_t n = 1; n <= N; ++n) {
    long double u = 0;
    for (std::size_t j = J; j >= 1; --j) u = (u + d[n + j - 1]) / b;
    double x = static_cast<double>(u);
    if (x >= 1) x = std::nextafter(1.0, 0.0);
    points[n - 1] = x;
  }
  const double eps = std::pow(static_cast<double>(alpha.base()), -static_cast<double>(J)) + DBL_EPSILON;
  return {std::move(points), eps, alpha.label() + " shifts"};
}

WallReport wall_criterion_report(radix::DigitStream& alpha, std::size_t N, unsigned k_max,
                                 std::int64_t m_max) {
  if (k_max == 0) throw DomainError("k_max must be at least 1");
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  if (N < 10 * static_cast<std::size_t>(k_max))
    throw DomainError("need N >= 10*k_max, got N = " + std::to_string(N) +
                      ", k_max = " + std::to_string(k_max));
  WallReport report;
  report.label = alpha.label();
  report.base = alpha.base();
  report.N = N;
  PointSet points = shifted_points(alpha, N);
  auto used = alpha.digits().first(N + point_depth(alpha.base()));
  report.degenerate = std::all_of(used.begin(), used.end(), [](radix::Digit x) { return x == 0; });
  std::vector<std::int64_t> ms(static_cast<std::size_t>(m_max));
  std::iota(ms.begin(), ms.end(), 1);
  report.weyl = weyl_sum(points, ms);
  report.discrepancy = star_discrepancy(points);
  for (unsigned k = 1; k <= k_max; ++k) report.blocks.push_back(block_frequency(alpha, N, k));
  return report;
}

XSequenceAudit x_sequence_audit(std::size_t n_max, std::span<const std::int64_t> frequencies) {
  for (std::int64_t m : frequencies)
    if (m == 0) throw DomainError("frequency m = 0 is excluded from Weyl sums");
  constexpr std::size_t kPrecision = 30, kGuard = 25;
  std::vector<radix::FixedReal> xs = constants::x_sequence(n_max, kPrecision);
  std::vector<double> u;
  u.reserve(xs.size());
  for (const auto& x : xs) {
    double v = static_cast<double>(radix::fractional_part(x, kGuard).approx());
    if (v >= 1) v = std::nextafter(1.0, 0.0);
    u.push_back(v);
  }
  XSequenceAudit audit;
  audit.points = {std::move(u), DBL_EPSILON, "frac(n ln10 + ln pi)"};
  audit.weyl = weyl_sum(audit.points, frequencies);
  audit.discrepancy = star_discrepancy(audit.points);
  return audit;
}

}  // namespace pilab::spectra
