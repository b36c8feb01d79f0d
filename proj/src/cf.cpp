#include "pilab/cf.hpp"

#include <algorithm>
#include <cmath>

#include "pilab/constants.hpp"
#include "pilab/error.hpp"
#include "pilab/primes.hpp"

namespace pilab::cf {

std::vector<BigInt> partial_quotients(const BigRational& x) {
  std::vector<BigInt> out;
  BigInt num = x.get_num(), den = x.get_den();
  while (den != 0) {
    BigInt a = floor_div(num, den);
    out.push_back(a);
    BigInt rem = num - a * den;
    num = den;
    den = rem;
  }
  return out;
}

std::vector<Convergent> convergents(const std::vector<BigInt>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  BigInt p_prev2 = 0, q_prev2 = 1, p_prev = 1, q_prev = 0;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    BigInt p = quotients[k] * p_prev + p_prev2;
    BigInt q = quotients[k] * q_prev + q_prev2;
    out.push_back({k, quotients[k], p, q});
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return out;
}

std::vector<Convergent> cf_expand(const BigRational& x, std::size_t depth) {
  std::vector<BigInt> qs = partial_quotients(x);
  if (depth >= qs.size())
    throw DomainError("expansion of " + rational_string(x) + " terminates at index " +
                      std::to_string(qs.size() - 1) + ", depth " + std::to_string(depth) +
                      " requested");
  qs.resize(depth + 1);
  return convergents(qs);
}

std::vector<Convergent> cf_expand(radix::DigitStream& fraction, const BigInt& integer_part,
                                  std::size_t depth, std::size_t digits) {
  const BigRational coarse = integer_part + radix::truncate(fraction, digits);
  const BigRational fine = integer_part + radix::truncate(fraction, 2 * digits);
  std::vector<BigInt> a = partial_quotients(coarse);
  std::vector<BigInt> b = partial_quotients(fine);
  for (std::size_t k = 0; k <= depth; ++k) {
    // The last quotient of a truncation's expansion is an artifact of the cut.
    if (k + 1 >= a.size() || k + 1 >= b.size() || a[k] != b[k])
      throw PrecisionError("partial quotient " + std::to_string(k) + " not certified by " +
                           std::to_string(digits) + " digits");
  }
  a.resize(depth + 1);
  return convergents(a);
}

std::vector<Convergent> constant_convergents(constants::Name name, std::size_t depth) {
  std::size_t digits = 4 * depth + 40;
  for (; 2 * digits <= constants::kDefaultCeiling; digits *= 2) {
    auto c = constants::const_digits({name, 2 * digits});
    try {
      return cf_expand(c.fraction, c.integer_part, depth, digits);
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("could not certify " + std::to_string(depth) + " quotients of " +
                       std::string(constants::to_string(name)));
}

std::vector<Convergent> pi_convergents(std::size_t depth) {
  return constant_convergents(constants::Name::pi, depth);
}

GapReport approximation_gap(const Convergent& conv, const BigInt& next_q,
                            const radix::FixedReal& pi) {
  if (pi.scale < 2 * decimal_length(conv.q) + 10)
    throw PrecisionError("pi carries " + std::to_string(pi.scale) + " decimals; gap at q = " +
                         conv.q.get_str() + " needs more than " +
                         std::to_string(2 * decimal_length(conv.q) + 10));
  GapReport g;
  g.gap = pi.value() - make_rational(conv.p, conv.q);
  g.error = pi.error_bound();
  g.approx = g.gap.get_d();
  g.positive = g.gap > 0;
  const BigInt q2 = conv.q * conv.q;
  const BigRational lower = make_rational(1, 2 * q2);
  const BigRational upper = make_rational(1, q2);
  const BigRational classical = make_rational(1, conv.q * next_q);
  const BigRational magnitude = abs(g.gap);
  g.lower_holds = lower <= g.gap;
  g.upper_holds = g.gap <= upper;
  g.classical_holds = magnitude < classical;
  auto clear_of = [&](const BigRational& bound, const BigRational& v) {
    return abs(BigRational(v - bound)) > g.error;
  };
  g.certified = clear_of(lower, g.gap) && clear_of(upper, g.gap) && clear_of(classical, magnitude);
  return g;
}

ResidueDecomposition residue_decompose(const Convergent& conv, std::size_t n) {
  if (n == 0) throw DomainError("residue decompositions start at n = 1");
  if (conv.q <= 0) throw DomainError("convergent denominator must be positive");
  const BigInt ten_n = pow_int(10, n);
  ResidueDecomposition d;
  d.n = n;
  const BigInt lhs1 = ten_n * conv.p;
  d.a = floor_div(lhs1, conv.q);
  d.r = lhs1 - d.a * conv.q;
  const BigInt q2 = conv.q * conv.q;
  const BigInt lhs2 = (conv.p * conv.q + 1) * ten_n;
  d.b = floor_div(lhs2, q2);
  const BigInt rest = lhs2 - d.b * q2;
  d.s = rest / conv.q;
  d.c = rest - d.s * conv.q;
  return d;
}

namespace {

struct PiFraction {
  BigRational value;  // truncated {π·10ⁿ}; the true value is in [value, value + ulp)
  std::string text;
  std::size_t digits;
};

// {π·10ⁿ} from verified π digits: the digit shift by n.
PiFraction pi_fraction(std::size_t n, std::size_t digits) {
  radix::FixedReal pi = constants::const_fixed(constants::Name::pi, n + digits);
  radix::FixedReal shifted{pi.mantissa, digits, pi.error};
  radix::FixedReal frac{floor_mod(shifted.mantissa, pow_int(10, digits)), digits, 1};
  return {frac.value(), frac.decimal(digits), digits};
}

Endpoint exact_endpoint(const BigRational& x) { return {x, static_cast<long double>(x.get_d())}; }

// q^{-(μ-1)}: exact for integral μ.
Endpoint inverse_power(const BigInt& q, double exponent) {
  if (exponent == std::floor(exponent) && exponent >= 0 && exponent < 4096) {
    BigInt d = 1;
    for (int i = 0; i < static_cast<int>(exponent); ++i) d *= q;
    return exact_endpoint(make_rational(1, d));
  }
  long double qd = std::stold(q.get_str());
  return {std::nullopt, std::pow(qd, -static_cast<long double>(exponent))};
}

Endpoint add(const Endpoint& x, const Endpoint& y) {
  if (x.exact && y.exact) return exact_endpoint(*x.exact + *y.exact);
  return {std::nullopt, x.approx + y.approx};
}

Endpoint difference(const BigRational& v, const Endpoint& e, bool value_minus_endpoint) {
  if (e.exact) {
    BigRational d = value_minus_endpoint ? BigRational(v - *e.exact) : BigRational(*e.exact - v);
    return exact_endpoint(d);
  }
  long double vd = v.get_d();
  return {std::nullopt, value_minus_endpoint ? vd - e.approx : e.approx - vd};
}

bool non_negative(const Endpoint& e) { return e.exact ? *e.exact >= 0 : e.approx >= 0; }

// Digits of π needed so the truncated {π·10ⁿ} cannot straddle any endpoint
// with denominator up to 2q².
std::size_t value_digits_for(const BigInt& q) { return 4 * decimal_length(q) + 30; }

AuditReport header(const char* lemma, const Convergent& conv, const AuditConfig& config) {
  if (config.mu < 2) throw DomainError("mu must be at least 2");
  AuditReport report;
  report.lemma = lemma;
  report.k = conv.k;
  report.p = conv.p;
  report.q = conv.q;
  report.mu = config.mu;
  report.k_even = conv.k % 2 == 0;
  report.value_digits = value_digits_for(conv.q);
  return report;
}

AuditRow make_row(const ResidueDecomposition& d, const PiFraction& v, Endpoint lower,
                  Endpoint upper) {
  AuditRow row;
  row.n = d.n;
  row.r = d.r;
  row.s = d.s;
  row.c = d.c;
  row.value = v.text;
  row.margin_lower = difference(v.value, lower, true);
  row.margin_upper = difference(v.value, upper, false);
  row.lower = std::move(lower);
  row.upper = std::move(upper);
  row.pass = non_negative(row.margin_lower) && non_negative(row.margin_upper);
  return row;
}

std::size_t n_limit(const BigInt& q, const AuditConfig& config) {
  if (fits_u64(q) && to_u64(q) < config.n_max) return to_u64(q);
  return config.n_max;
}

}  // namespace

AuditReport audit_lemma_caseI(const Convergent& conv, const AuditConfig& config) {
  AuditReport report = header("caseI", conv, config);
  const BigInt q2 = conv.q * conv.q;
  for (std::size_t n = 1; n <= n_limit(conv.q, config) && pow_int(10, n) <= conv.q; ++n) {
    ResidueDecomposition d = residue_decompose(conv, n);
    PiFraction v = pi_fraction(n, report.value_digits);
    Endpoint lower = exact_endpoint(make_rational(d.r, conv.q) + make_rational(pow_int(10, n), 2 * q2));
    Endpoint upper = exact_endpoint(make_rational(d.r + 1, conv.q));
    report.rows.push_back(make_row(d, v, std::move(lower), std::move(upper)));
  }
  return report;
}

AuditReport audit_lemma_caseII(const Convergent& conv, const AuditConfig& config) {
  AuditReport report = header("caseII", conv, config);
  const BigInt q2 = conv.q * conv.q;
  const Endpoint slack = inverse_power(conv.q, config.mu - 1);
  for (std::size_t n = 1; n <= n_limit(conv.q, config); ++n) {
    if (pow_int(10, n) <= conv.q) continue;
    ResidueDecomposition d = residue_decompose(conv, n);
    PiFraction v = pi_fraction(n, report.value_digits);
    Endpoint lower = add(exact_endpoint(make_rational(d.r, conv.q)), slack);
    Endpoint upper = exact_endpoint(make_rational(d.s, conv.q) + make_rational(d.c, q2));
    report.rows.push_back(make_row(d, v, std::move(lower), std::move(upper)));
  }
  return report;
}

std::optional<std::uint64_t> prime_near(const BigInt& qk, double window_constant) {
  if (!fits_u64(qk) || qk < 2) return std::nullopt;
  const std::uint64_t lo = to_u64(qk);
  const double width = window_constant * static_cast<double>(lo) / std::log(static_cast<double>(lo));
  const std::uint64_t hi = lo + static_cast<std::uint64_t>(std::ceil(width));
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (primes::is_prime(q)) return q;
  return std::nullopt;
}

AuditReport audit_lemma_prime_variant(const Convergent& conv, const AuditConfig& config) {
  AuditReport report = header("prime", conv, config);
  auto found = prime_near(conv.q, config.window_constant);
  if (!found)
    throw DomainError("no prime in the window [q_k, q_k + C*q_k/ln q_k] for q_k = " +
                      conv.q.get_str());
  report.prime = *found;
  const BigInt q = from_u64(*found);
  const long double q2 = static_cast<long double>(*found) * static_cast<long double>(*found);
  const Endpoint slack = inverse_power(2 * q, config.mu - 1);
  report.value_digits = value_digits_for(q);
  for (std::size_t n = 1; n <= n_limit(q, config); ++n) {
    ResidueDecomposition d = residue_decompose(conv, n);
    PiFraction v = pi_fraction(n, report.value_digits);
    Endpoint lower, upper;
    if (pow_int(10, n) <= conv.q) {
      lower = exact_endpoint(make_rational(d.r, 2 * q));
      upper = exact_endpoint(make_rational(d.r + 1, q));
    } else {
      lower = add(exact_endpoint(make_rational(d.r, 2 * q)), slack);
      upper = exact_endpoint(make_rational(d.s, q));
    }
    AuditRow row = make_row(d, v, std::move(lower), std::move(upper));
    if (config.implied_constant_report) {
      row.residual_lower_q2 = row.margin_lower.approx * q2;
      row.residual_upper_q2 = row.margin_upper.approx * q2;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pilab::cf
