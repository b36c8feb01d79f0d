#include "pilab/report.hpp"

#include <cstdio>
#include <ostream>

namespace pilab::report {

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string real(long double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

namespace {

json endpoint(const cf::Endpoint& e) {
  if (e.exact) return rational_string(*e.exact);
  return real(e.approx);
}

}  // namespace

json to_json(const cf::Convergent& conv) {
  return {{"k", conv.k}, {"a", conv.a.get_str()}, {"p", conv.p.get_str()}, {"q", conv.q.get_str()}};
}

json to_json(const cf::GapReport& gap) {
  return {{"gap", real(gap.approx)},
          {"positive", gap.positive},
          {"lower_holds", gap.lower_holds},
          {"upper_holds", gap.upper_holds},
          {"classical_holds", gap.classical_holds},
          {"certified", gap.certified}};
}

json to_json(const cf::AuditReport& audit) {
  json j;
  j["lemma"] = audit.lemma;
  j["k"] = audit.k;
  j["p"] = audit.p.get_str();
  j["q"] = audit.q.get_str();
  j["mu"] = real(audit.mu);
  j["k_even"] = audit.k_even;
  if (audit.prime) j["prime"] = *audit.prime;
  j["value_digits"] = audit.value_digits;
  json rows = json::array();
  for (const auto& row : audit.rows) {
    json r;
    r["n"] = row.n;
    r["r"] = row.r.get_str();
    r["s"] = row.s.get_str();
    r["c"] = row.c.get_str();
    r["lower"] = endpoint(row.lower);
    r["upper"] = endpoint(row.upper);
    r["value"] = row.value;
    r["pass"] = row.pass;
    r["margin_lower"] = endpoint(row.margin_lower);
    r["margin_upper"] = endpoint(row.margin_upper);
    if (row.residual_lower_q2) r["residual_lower_q2"] = real(*row.residual_lower_q2);
    if (row.residual_upper_q2) r["residual_upper_q2"] = real(*row.residual_upper_q2);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const groups::SubgroupReport& sub, bool with_elements) {
  json j{{"modulus", sub.modulus},
         {"generator", sub.generator},
         {"order", sub.order},
         {"totient", sub.totient},
         {"is_primitive", sub.is_primitive}};
  if (with_elements && sub.elements) j["elements"] = *sub.elements;
  return j;
}

json to_json(const groups::CosetReport& coset, bool with_sets) {
  json j{{"k", coset.k},
         {"p", coset.p.get_str()},
         {"q", coset.q.get_str()},
         {"hypothesis_gcd_10_q", coset.hypothesis_holds}};
  if (!coset.hypothesis_holds) {
    j["status"] = "hypothesis-failure";
    return j;
  }
  j["status"] = coset.materialized ? "checked" : "not-materialized";
  j["subgroup"] = to_json(*coset.base, false);
  j["card_G"] = coset.card_G;
  j["card_H"] = coset.card_H;
  j["H_equals_subgroup"] = coset.h_equals_subgroup;
  j["G_equals_coset"] = coset.g_equals_coset;
  if (with_sets && coset.materialized) {
    j["G"] = coset.G;
    j["H"] = coset.H;
  }
  return j;
}

json to_json(const groups::ArtinScan& scan) {
  return {{"limit", scan.limit},
          {"count_primes", scan.count_primes},
          {"count_artin", scan.count_artin},
          {"density", real(scan.density)}};
}

json to_json(const groups::ArtinNear& near) {
  json j{{"window_lo", near.window_lo}, {"window_hi", near.window_hi}};
  j["prime"] = near.prime ? json(*near.prime) : json(nullptr);
  j["count"] = near.count;
  return j;
}

json to_json(const spectra::WeylReport& weyl) {
  json rows = json::array();
  for (const auto& row : weyl.rows)
    rows.push_back({{"m", row.m},
                    {"re", real(row.re)},
                    {"im", real(row.im)},
                    {"magnitude", real(row.magnitude)},
                    {"error", real(row.error)}});
  return {{"N", weyl.N}, {"epsilon", real(weyl.epsilon)}, {"rows", std::move(rows)}};
}

std::string pattern(std::uint64_t index, unsigned base, unsigned k) {
  std::string s(k, '0');
  for (unsigned i = k; i-- > 0;) {
    s[i] = radix::digit_char(static_cast<radix::Digit>(index % base));
    index /= base;
  }
  return s;
}

json to_json(const spectra::BlockStats& stats) {
  json counts = json::object();
  for (std::uint64_t i = 0; i < stats.counts.size(); ++i)
    counts[pattern(i, stats.base, stats.k)] = stats.counts[i];
  return {{"base", stats.base},
          {"k", stats.k},
          {"windows", stats.windows},
          {"max_abs_dev", real(stats.max_abs_dev)},
          {"chi_square", real(stats.chi_square)},
          {"dof", stats.dof},
          {"counts", std::move(counts)}};
}

json to_json(const spectra::ExpSumReport& e) {
  json j{{"p", e.p},
         {"size_H", e.size_H},
         {"c", real(e.c)},
         {"max_magnitude", real(e.max_magnitude)},
         {"argmax_a", e.argmax},
         {"bound", real(e.bound)},
         {"ratio", real(e.ratio)},
         {"parseval_sum", real(e.parseval_sum)},
         {"parseval_expected", real(e.parseval_expected)}};
  if (e.transform_deviation) j["transform_deviation"] = real(*e.transform_deviation);
  return j;
}

json to_json(const spectra::LipschitzReport& l) {
  return {{"n", l.n},
          {"q", l.q.get_str()},
          {"s", l.s.get_str()},
          {"value", l.value},
          {"delta", real(l.delta)},
          {"lhs", real(l.lhs)},
          {"rhs_scale", real(l.rhs_scale)},
          {"ratio", real(l.ratio)},
          {"chord_arc_holds", l.chord_arc_holds}};
}

json to_json(const spectra::WallReport& wall) {
  json blocks = json::array();
  for (const auto& b : wall.blocks) blocks.push_back(to_json(b));
  return {{"label", wall.label},
          {"base", wall.base},
          {"N", wall.N},
          {"degenerate", wall.degenerate},
          {"weyl", to_json(wall.weyl)},
          {"star_discrepancy", real(wall.discrepancy)},
          {"blocks", std::move(blocks)}};
}

json to_json(const spectra::XSequenceAudit& audit) {
  return {{"n_max", audit.points.points.size()},
          {"weyl", to_json(audit.weyl)},
          {"star_discrepancy", real(audit.discrepancy)}};
}

void write_weyl_csv(std::ostream& out, const spectra::WeylReport& weyl) {
  out << "m,re,im,magnitude,error\n";
  for (const auto& row : weyl.rows)
    out << row.m << ',' << real(row.re) << ',' << real(row.im) << ',' << real(row.magnitude)
        << ',' << real(row.error) << '\n';
}

void write_blocks_csv(std::ostream& out, const std::vector<spectra::BlockStats>& blocks) {
  out << "k,block,count,frequency,deviation\n";
  for (const auto& b : blocks) {
    const double W = static_cast<double>(b.windows);
    const double expected = 1.0 / static_cast<double>(b.counts.size());
    for (std::uint64_t i = 0; i < b.counts.size(); ++i) {
      const double f = static_cast<double>(b.counts[i]) / W;
      out << b.k << ',' << pattern(i, b.base, b.k) << ',' << b.counts[i] << ',' << real(f) << ','
          << real(f - expected) << '\n';
    }
  }
}

void write_artin_csv(std::ostream& out, const std::vector<kernels::ArtinRow>& rows) {
  out << "q,ord,is_artin\n";
  for (const auto& row : rows) out << row.q << ',' << row.order << ',' << (row.artin ? 1 : 0) << '\n';
}

}  // namespace pilab::report
