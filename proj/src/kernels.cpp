#include "pilab/kernels.hpp"

#include <cmath>
#include <numbers>

#include <omp.h>

#include "pilab/error.hpp"
#include "pilab/groups.hpp"
#include "pilab/primes.hpp"

namespace pilab::kernels {

namespace {

void neumaier(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) comp += (sum - t) + x;
  else comp += (x - t) + sum;
  sum = t;
}

cplx root_of_unity(std::uint64_t num, std::uint64_t den) {
  const double angle = 2 * std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den));
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t table_size(unsigned base, unsigned k) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) size *= base;
  return size;
}

// Counts windows starting at positions [first, last) (0-based).
void count_windows(std::span<const radix::Digit> digits, unsigned base, unsigned k,
                   std::size_t first, std::size_t last, std::uint64_t mod,
                   std::vector<std::uint64_t>& counts) {
  if (first >= last) return;
  std::uint64_t index = 0;
  for (std::size_t i = first; i < first + k - 1; ++i) index = index * base + digits[i];
  for (std::size_t start = first; start < last; ++start) {
    index = (index * base + digits[start + k - 1]) % mod;
    ++counts[index];
  }
}

ArtinRow artin_row(std::uint64_t q) {
  const std::uint64_t order = groups::mult_order(10, q);
  return {q, order, order == q - 1};
}

}  // namespace

void CompensatedSum::add(double x, double y) {
  neumaier(re, re_c, x);
  neumaier(im, im_c, y);
}

void CompensatedSum::add(const CompensatedSum& other) {
  add(other.re, other.im);
  add(other.re_c, other.im_c);
}

cplx unit_root(double u, std::int64_t m) {
  long double t = static_cast<long double>(u) * static_cast<long double>(m);
  t -= std::floor(t);
  const double angle = static_cast<double>(2 * std::numbers::pi_v<long double> * t);
  return {std::cos(angle), std::sin(angle)};
}

void set_threads(unsigned threads) {
  if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
}

namespace serial {

cplx weyl(std::span<const double> points, std::int64_t m) {
  CompensatedSum sum;
  for (double u : points) {
    cplx z = unit_root(u, m);
    sum.add(z.real(), z.imag());
  }
  return sum.value();
}

std::vector<std::uint64_t> block_counts(std::span<const radix::Digit> digits, unsigned base,
                                        unsigned k) {
  const std::uint64_t size = table_size(base, k);
  std::vector<std::uint64_t> counts(size, 0);
  if (digits.size() >= k) count_windows(digits, base, k, 0, digits.size() - k + 1, size, counts);
  return counts;
}

std::vector<cplx> subgroup_spectrum(std::span<const std::uint64_t> elements, std::uint64_t p) {
  std::vector<cplx> out(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    CompensatedSum sum;
    for (std::uint64_t x : elements) {
      cplx z = root_of_unity(primes::mul_mod(a, x % p, p), p);
      sum.add(z.real(), z.imag());
    }
    out[a] = sum.value();
  }
  return out;
}

std::vector<ArtinRow> artin_rows(std::span<const std::uint64_t> primes) {
  std::vector<ArtinRow> rows;
  rows.reserve(primes.size());
  for (std::uint64_t q : primes) rows.push_back(artin_row(q));
  return rows;
}

}  // namespace serial

namespace parallel {

cplx weyl(std::span<const double> points, std::int64_t m) {
  const std::size_t chunks = (points.size() + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(points.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      cplx z = unit_root(points[i], m);
      partial[c].add(z.real(), z.imag());
    }
  }
  CompensatedSum total;
  for (const auto& s : partial) total.add(s);
  return total.value();
}

std::vector<std::uint64_t> block_counts(std::span<const radix::Digit> digits, unsigned base,
                                        unsigned k) {
  const std::uint64_t size = table_size(base, k);
  std::vector<std::uint64_t> counts(size, 0);
  if (digits.size() < k) return counts;
  const std::size_t windows = digits.size() - k + 1;
  const std::size_t chunk = std::max<std::size_t>(kChunk, windows / 64 + 1);
  const std::size_t chunks = (windows + chunk - 1) / chunk;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(size, 0);
#pragma omp for schedule(static)
    for (std::size_t c = 0; c < chunks; ++c)
      count_windows(digits, base, k, c * chunk, std::min(windows, (c + 1) * chunk), size, local);
#pragma omp critical
    for (std::uint64_t i = 0; i < size; ++i) counts[i] += local[i];
  }
  return counts;
}

std::vector<cplx> subgroup_spectrum(std::span<const std::uint64_t> elements, std::uint64_t p) {
  std::vector<cplx> out(p);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::uint64_t a = 0; a < p; ++a) {
    CompensatedSum sum;
    for (std::uint64_t x : elements) {
      cplx z = root_of_unity(primes::mul_mod(a, x % p, p), p);
      sum.add(z.real(), z.imag());
    }
    out[a] = sum.value();
  }
  return out;
}

std::vector<ArtinRow> artin_rows(std::span<const std::uint64_t> primes) {
  std::vector<ArtinRow> rows(primes.size());
  // Factorization reads the shared prime table; grow it before forking.
  primes::PrimeTable::shared().extend_to(1'000'000);
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::size_t i = 0; i < primes.size(); ++i) {
    try {
      rows[i] = artin_row(primes[i]);
    } catch (const std::exception& e) {
#pragma omp critical
      if (!failed) {
        failed = true;
        message = e.what();
      }
    }
  }
  if (failed) throw Error(message);
  return rows;
}

}  // namespace parallel

}  // namespace pilab::kernels
