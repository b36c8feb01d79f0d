#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's engines: constants come from MPFR or a spigot, everything
// else is brute force.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

enum class Constant { pi, ln10, ln_pi };

/// Integer part and the first `digits` fractional digits (truncated), via MPFR.
struct Decimal {
  std::string integer_part;
  std::string fraction;
};
Decimal mpfr_constant(Constant c, std::size_t digits);

/// First `digits` fractional digits of π by the Rabinowitz–Wagon spigot.
std::string spigot_pi(std::size_t digits);

/// e^{x} for a decimal string x, compared against π·10ⁿ: returns
/// |e^{x} − π·10ⁿ| / (π·10ⁿ), evaluated in MPFR at `bits` precision.
double exp_consistency(const std::string& x, unsigned n, unsigned bits);

bool trial_prime(std::uint64_t n);
std::vector<std::uint64_t> trial_primes(std::size_t count);

/// "123456789101112..." style strings by to_string concatenation.
std::string naive_concat(const std::string& family, std::size_t digits);

std::uint64_t naive_order(std::uint64_t g, std::uint64_t m);
std::vector<std::uint64_t> naive_powers(std::uint64_t g, std::uint64_t m);
std::uint64_t naive_totient(std::uint64_t m);

std::complex<long double> naive_weyl(const std::vector<double>& u, long m);
/// sup_t |#{u_i < t}/N − t| by brute force over the candidate points.
double naive_discrepancy(const std::vector<double>& u);
std::map<std::string, std::uint64_t> naive_blocks(const std::string& digits, unsigned k);
std::complex<long double> naive_subgroup_sum(const std::vector<std::uint64_t>& H,
                                             std::uint64_t a, std::uint64_t p);

/// Digits of a rational num/den in base b by schoolbook long division.
std::string long_division(std::uint64_t num, std::uint64_t den, unsigned base, std::size_t digits);

}  // namespace oracle
