#include "pilab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pilab/error.hpp"
#include "pilab/primes.hpp"

namespace pilab::groups {

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw DomainError("totient of 0");
  std::uint64_t phi = m;
  for (auto [p, e] : primes::factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t mult_order(std::uint64_t g, std::uint64_t m) {
  if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
  if (std::gcd(g, m) != 1)
    throw DomainError("gcd(" + std::to_string(g) + ", " + std::to_string(m) + ") = " +
                      std::to_string(std::gcd(g, m)) + ", so " + std::to_string(g) +
                      " is not a unit");
  g %= m;
  std::uint64_t order = totient(m);
  for (auto [l, e] : primes::factorize(order)) {
    for (unsigned i = 0; i < e && primes::pow_mod(g, order / l, m) == 1; ++i) order /= l;
  }
  return order;
}

SubgroupReport subgroup(std::uint64_t g, std::uint64_t m, std::uint64_t element_cap) {
  SubgroupReport report;
  report.modulus = m;
  report.generator = g;
  report.order = mult_order(g, m);
  report.totient = totient(m);
  report.is_primitive = report.order == report.totient;
  if (report.order <= element_cap) {
    std::vector<std::uint64_t> elements;
    elements.reserve(report.order);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < report.order; ++i) {
      elements.push_back(x);
      x = primes::mul_mod(x, g % m, m);
    }
    std::sort(elements.begin(), elements.end());
    report.elements = std::move(elements);
  }
  return report;
}

namespace {

std::vector<std::uint64_t> orbit(std::uint64_t start, std::uint64_t g, std::uint64_t m,
                                 std::uint64_t steps) {
  std::vector<std::uint64_t> out;
  out.reserve(steps);
  std::uint64_t x = start % m;
  for (std::uint64_t n = 0; n < steps; ++n) {
    out.push_back(x);
    x = primes::mul_mod(x, g, m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t residue(const BigInt& x, std::uint64_t m) {
  return to_u64(floor_mod(x, from_u64(m)));
}

}  // namespace

CosetReport coset_structure(const cf::Convergent& conv, std::uint64_t element_cap) {
  CosetReport report;
  report.k = conv.k;
  report.p = conv.p;
  report.q = conv.q;
  if (conv.q < 2 || !fits_u64(conv.q))
    throw DomainError("coset structure needs 2 <= q_k < 2^64, got q_k = " + conv.q.get_str());
  const std::uint64_t q = to_u64(conv.q);
  report.hypothesis_holds = std::gcd<std::uint64_t>(10, q) == 1;
  if (!report.hypothesis_holds) return report;

  report.base = subgroup(10, q, element_cap);
  const std::uint64_t order = report.base->order;
  if (!report.base->elements) return report;
  report.materialized = true;

  const std::uint64_t pk = residue(conv.p, q);
  const std::uint64_t hk = residue(conv.p * conv.q + 1, q);
  report.G = orbit(pk, 10, q, order);
  report.H = orbit(hk, 10, q, order);
  report.card_G = report.G.size();
  report.card_H = report.H.size();
  const auto& sub = *report.base->elements;
  report.h_equals_subgroup = report.H == sub;
  std::vector<std::uint64_t> coset;
  coset.reserve(sub.size());
  for (std::uint64_t h : sub) coset.push_back(primes::mul_mod(pk, h, q));
  std::sort(coset.begin(), coset.end());
  report.g_equals_coset = report.G == coset;
  return report;
}

ArtinScan artin_scan(std::uint64_t limit, bool keep_rows) {
  if (limit < 100) throw DomainError("Artin scans need a limit of at least 100");
  std::vector<std::uint64_t> ps = primes::PrimeTable::shared().up_to(limit);
  std::erase_if(ps, [](std::uint64_t p) { return p == 2 || p == 5; });
  ArtinScan scan;
  scan.limit = limit;
  std::vector<kernels::ArtinRow> rows = kernels::parallel::artin_rows(ps);
  scan.count_primes = rows.size();
  for (const auto& row : rows) scan.count_artin += row.artin ? 1 : 0;
  scan.density = static_cast<double>(scan.count_artin) / static_cast<double>(scan.count_primes);
  if (keep_rows) scan.rows = std::move(rows);
  return scan;
}

ArtinNear find_artin_prime_near(const cf::Convergent& conv, double window_constant) {
  if (conv.q < 11) throw DomainError("the Artin window needs q_k >= 11, got " + conv.q.get_str());
  if (!fits_u64(conv.q)) throw DomainError("q_k exceeds 64 bits");
  const std::uint64_t qk = to_u64(conv.q);
  const double width = window_constant * static_cast<double>(qk) / std::log(static_cast<double>(qk));
  ArtinNear near;
  near.window_lo = qk;
  near.window_hi = qk + static_cast<std::uint64_t>(std::ceil(width));
  const BigInt h = conv.p * conv.q + 1;
  for (std::uint64_t q : primes::primes_in(near.window_lo, near.window_hi)) {
    if (q == 2 || q == 5) continue;
    if (residue(h, q) == 0) continue;
    if (mult_order(10, q) != q - 1) continue;
    if (!near.prime) near.prime = q;
    ++near.count;
  }
  return near;
}

}  // namespace pilab::groups
