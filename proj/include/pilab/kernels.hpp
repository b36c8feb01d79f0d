#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pilab/radix.hpp"

// Data-parallel folds behind the spectra and groups modules. Each kernel has a
// plain serial reference and an OpenMP variant. The OpenMP variants split work
// into fixed-size chunks and merge partials in chunk order, so their output
// does not depend on the thread count.
namespace pilab::kernels {

using cplx = std::complex<double>;

inline constexpr std::size_t kChunk = 4096;

struct ArtinRow {
  std::uint64_t q = 0;
  std::uint64_t order = 0;
  bool artin = false;  // order == q - 1
};

/// Compensated (Neumaier) complex accumulator.
struct CompensatedSum {
  double re = 0, im = 0, re_c = 0, im_c = 0;
  void add(double x, double y);
  void add(const CompensatedSum& other);
  cplx value() const { return {re + re_c, im + im_c}; }
};

/// e(m·u) = exp(2πi·m·u) with m·u reduced mod 1 in extended precision.
cplx unit_root(double u, std::int64_t m);

namespace serial {
cplx weyl(std::span<const double> points, std::int64_t m);
std::vector<std::uint64_t> block_counts(std::span<const radix::Digit> digits, unsigned base,
                                        unsigned k);
/// S(a) = Σ_{x∈H} e(a·x/p) for a = 0..p-1.
std::vector<cplx> subgroup_spectrum(std::span<const std::uint64_t> elements, std::uint64_t p);
std::vector<ArtinRow> artin_rows(std::span<const std::uint64_t> primes);
}  // namespace serial

namespace parallel {
cplx weyl(std::span<const double> points, std::int64_t m);
std::vector<std::uint64_t> block_counts(std::span<const radix::Digit> digits, unsigned base,
                                        unsigned k);
std::vector<cplx> subgroup_spectrum(std::span<const std::uint64_t> elements, std::uint64_t p);
std::vector<ArtinRow> artin_rows(std::span<const std::uint64_t> primes);
}  // namespace parallel

/// Caps the OpenMP worker count; 0 leaves the runtime default.
void set_threads(unsigned threads);

}  // namespace pilab::kernels
