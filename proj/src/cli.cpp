#include "pilab/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "pilab/cf.hpp"
#include "pilab/constants.hpp"
#include "pilab/constructors.hpp"
#include "pilab/error.hpp"
#include "pilab/groups.hpp"
#include "pilab/kernels.hpp"
#include "pilab/radix.hpp"
#include "pilab/report.hpp"
#include "pilab/spectra.hpp"

#ifndef PILAB_VERSION
#define PILAB_VERSION "0.0.0"
#endif

namespace pilab::cli {

std::string version() { return PILAB_VERSION; }

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

namespace {

using json = report::json;

struct Options {
  unsigned threads = 0;
  std::string manifest;

  std::string name = "pi";
  std::string method = "both";
  std::size_t digits = 0;
  std::string out;

  std::string family;
  unsigned base = 10;
  unsigned b = 2;
  std::uint64_t c = 3;
  std::uint64_t s = 0;

  std::string constant = "pi";
  std::size_t depth = 0;

  std::string lemma;
  std::size_t k = 0;
  double mu = 2.0;
  std::size_t n_max = 12;
  double window_constant = 1.0;

  std::uint64_t g = 10;
  std::uint64_t m = 0;
  std::uint64_t cap = groups::kDefaultElementCap;
  bool sets = false;

  std::uint64_t limit = 0;
  std::string csv;
  std::optional<std::size_t> near_k;

  std::string points;
  std::vector<std::int64_t> frequencies{1};
  std::optional<double> epsilon;
  std::optional<std::size_t> x_sequence;

  std::string in;
  std::size_t N = 0;
  unsigned kmax = 3;
  std::int64_t mmax = 5;

  std::uint64_t p = 0;
  double exponent_c = 0.5;
  bool no_transform = false;
};

class Run {
 public:
  explicit Run(std::ostream& out) : out_(out) {}

  void input(const std::string& path) { inputs_.push_back({path, sha256_file(path)}); }

  void write(const std::string& path, const std::string& content) {
    {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot write " + path);
      f << content;
      if (!f) throw Error("failed writing " + path);
    }
    outputs_.push_back({path, sha256_file(path)});
  }

  // To the named file, or to stdout when the path is empty.
  void emit(const std::string& content, const std::string& path) {
    if (path.empty()) out_ << content;
    else write(path, content);
  }

  void emit(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

  json files(const std::vector<std::pair<std::string, std::string>>& list) const {
    json a = json::array();
    for (const auto& [path, digest] : list) a.push_back({{"path", path}, {"sha256", digest}});
    return a;
  }

  const auto& outputs() const { return outputs_; }
  const auto& inputs() const { return inputs_; }

 private:
  std::ostream& out_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json parameters(const CLI::App& app, const CLI::App& sub) {
  json params = json::object();
  auto collect = [&params](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name == "manifest" || name == "version") continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        if (opt->get_type_size() == 0) params[name] = true;
        else if (res.size() == 1) params[name] = res.front();
        else params[name] = res;
      } else if (!opt->get_default_str().empty()) {
        params[name] = opt->get_default_str();
      } else {
        params[name] = nullptr;
      }
    }
  };
  collect(app);
  collect(sub);
  return params;
}

std::vector<cf::Convergent> pi_through(std::size_t k) { return cf::pi_convergents(k); }

radix::DigitStream open_digit_file(Run& run, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  run.input(path);
  return radix::read_digit_file(f);
}

std::string digits_text(std::span<const radix::Digit> ds) {
  std::string s;
  s.reserve(ds.size());
  for (auto d : ds) s.push_back(radix::digit_char(d));
  return s;
}

// ---- subcommands ----

void run_constants(Run& run, const Options& o) {
  const constants::Name name = constants::parse_name(o.name);
  BigInt integer_part;
  std::string digits;
  if (o.method == "both") {
    auto c = constants::const_digits({name, o.digits});
    integer_part = c.integer_part;
    digits = digits_text(c.fraction.first(o.digits));
    if (!o.out.empty()) {
      std::ostringstream file;
      auto stream = radix::DigitStream::finite(
          10, {c.fraction.first(o.digits).begin(), c.fraction.first(o.digits).end()},
          std::string(constants::to_string(name)) + " int=" + integer_part.get_str());
      radix::write_digit_file(file, stream, o.digits);
      run.write(o.out, file.str());
      return;
    }
  } else {
    if (o.digits == 0) throw DomainError("constant requests need at least one digit");
    const auto method =
        o.method == "primary" ? constants::Method::primary : constants::Method::cross_check;
    auto r = constants::released_digits(name, method, o.digits);
    integer_part = r.integer_part;
    digits = r.digits.substr(0, o.digits);
    if (!o.out.empty()) {
      std::vector<radix::Digit> ds;
      for (char ch : digits) ds.push_back(static_cast<radix::Digit>(ch - '0'));
      auto stream = radix::DigitStream::finite(
          10, std::move(ds), std::string(constants::to_string(name)) + " int=" + integer_part.get_str());
      std::ostringstream file;
      radix::write_digit_file(file, stream, o.digits);
      run.write(o.out, file.str());
      return;
    }
  }
  run.emit(integer_part.get_str() + "." + digits + "\n", "");
}

void run_construct(Run& run, const Options& o) {
  if (o.digits == 0) throw DomainError("at least one digit is required");
  std::optional<radix::DigitStream> stream;
  if (o.family == "stoneham") {
    stream = constructors::stoneham_digits({o.b, o.c, o.s}, o.digits);
  } else {
    stream = constructors::concat_digits({constructors::parse_family(o.family), o.base}, o.digits);
  }
  if (o.out.empty()) {
    run.emit(digits_text(stream->first(o.digits)) + "\n", "");
  } else {
    std::ostringstream file;
    radix::write_digit_file(file, *stream, o.digits);
    run.write(o.out, file.str());
  }
}

void run_cf(Run& run, const Options& o) {
  const constants::Name name = constants::parse_name(o.constant);
  json j;
  j["constant"] = o.constant;
  j["depth"] = o.depth;
  json rows = json::array();
  if (name == constants::Name::pi) {
    auto convs = cf::pi_convergents(o.depth + 1);
    const radix::FixedReal pi =
        constants::const_fixed(constants::Name::pi, 2 * decimal_length(convs.back().q) + 30);
    for (std::size_t k = 0; k <= o.depth; ++k) {
      json row = report::to_json(convs[k]);
      row["gap"] = report::to_json(cf::approximation_gap(convs[k], convs[k + 1].q, pi));
      rows.push_back(std::move(row));
    }
  } else {
    for (const auto& conv : cf::constant_convergents(name, o.depth)) rows.push_back(report::to_json(conv));
  }
  j["convergents"] = std::move(rows);
  run.emit(j, o.out);
}

cf::AuditConfig audit_config(const Options& o) {
  cf::AuditConfig config;
  config.mu = o.mu;
  config.n_max = o.n_max;
  config.window_constant = o.window_constant;
  return config;
}

void run_audit(Run& run, const Options& o) {
  const auto convs = pi_through(o.k);
  const cf::Convergent& conv = convs[o.k];
  const cf::AuditConfig config = audit_config(o);
  cf::AuditReport audit;
  if (o.lemma == "caseI") audit = cf::audit_lemma_caseI(conv, config);
  else if (o.lemma == "caseII") audit = cf::audit_lemma_caseII(conv, config);
  else audit = cf::audit_lemma_prime_variant(conv, config);
  run.emit(report::to_json(audit), o.out);
}

void run_order(Run& run, const Options& o) {
  run.emit(std::to_string(groups::mult_order(o.g, o.m)) + "\n", "");
}

void run_coset(Run& run, const Options& o) {
  const auto convs = pi_through(o.k);
  run.emit(report::to_json(groups::coset_structure(convs[o.k], o.cap), o.sets), o.out);
}

void run_artin(Run& run, const Options& o) {
  json j = json::object();
  if (o.limit == 0 && !o.near_k) throw DomainError("give --limit, --near-k, or both");
  if (o.limit > 0) {
    auto scan = groups::artin_scan(o.limit, !o.csv.empty());
    j["scan"] = report::to_json(scan);
    if (!o.csv.empty()) {
      std::ostringstream csv;
      report::write_artin_csv(csv, scan.rows);
      run.write(o.csv, csv.str());
    }
  }
  if (o.near_k) {
    const auto convs = pi_through(*o.near_k);
    const auto& conv = convs[*o.near_k];
    json near = report::to_json(groups::find_artin_prime_near(conv, o.window_constant));
    near["k"] = conv.k;
    near["q_k"] = conv.q.get_str();
    j["near"] = std::move(near);
  }
  run.emit(j, o.out);
}

spectra::PointSet read_points(Run& run, const std::string& path, std::optional<double> epsilon) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  run.input(path);
  std::vector<double> values;
  double eps = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("epsilon=");
      if (pos != std::string::npos) eps = std::stod(line.substr(pos + 8));
      continue;
    }
    try {
      std::size_t used = 0;
      values.push_back(std::stod(line, &used));
    } catch (const std::exception&) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": not a number: " + line);
    }
  }
  return spectra::make_points(std::move(values), epsilon.value_or(eps), path);
}

void run_weyl(Run& run, const Options& o) {
  json j;
  spectra::WeylReport weyl;
  if (o.x_sequence) {
    auto audit = spectra::x_sequence_audit(*o.x_sequence, o.frequencies);
    j["points"] = "frac(n ln10 + ln pi)";
    j["N"] = audit.points.points.size();
    j["weyl"] = report::to_json(audit.weyl);
    j["star_discrepancy"] = report::real(audit.discrepancy);
    weyl = std::move(audit.weyl);
  } else {
    if (o.points.empty()) throw DomainError("give --points FILE or --x-sequence N");
    auto points = read_points(run, o.points, o.epsilon);
    weyl = spectra::weyl_sum(points, o.frequencies);
    j["points"] = o.points;
    j["N"] = points.points.size();
    j["weyl"] = report::to_json(weyl);
    j["star_discrepancy"] = report::real(spectra::star_discrepancy(points));
  }
  if (!o.csv.empty()) {
    std::ostringstream csv;
    report::write_weyl_csv(csv, weyl);
    run.write(o.csv, csv.str());
  }
  run.emit(j, o.out);
}

void run_normality(Run& run, const Options& o) {
  radix::DigitStream digits = open_digit_file(run, o.in);
  const std::size_t depth = spectra::point_depth(digits.base());
  if (digits.size() <= depth)
    throw DomainError("digit file holds only " + std::to_string(digits.size()) + " digits");
  const std::size_t N = o.N == 0 ? digits.size() - depth : o.N;
  auto wall = spectra::wall_criterion_report(digits, N, o.kmax, o.mmax);
  if (!o.csv.empty()) {
    std::ostringstream csv;
    report::write_blocks_csv(csv, wall.blocks);
    run.write(o.csv, csv.str());
  }
  run.emit(report::to_json(wall), o.out);
}

void run_expsum(Run& run, const Options& o) {
  auto sub = groups::subgroup(o.g, o.p, o.p);
  auto e = spectra::subgroup_expsum(sub, o.exponent_c, !o.no_transform);
  json j;
  j["subgroup"] = report::to_json(sub, false);
  j["expsum"] = report::to_json(e);
  run.emit(j, o.out);
}

void run_report(Run& run, const Options& o) {
  const auto convs = pi_through(o.k + 1);
  const cf::Convergent& conv = convs[o.k];
  const cf::AuditConfig config = audit_config(o);
  json j;
  j["convergent"] = report::to_json(conv);
  const radix::FixedReal pi =
      constants::const_fixed(constants::Name::pi, 2 * decimal_length(convs.back().q) + 30);
  j["gap"] = report::to_json(cf::approximation_gap(conv, convs[o.k + 1].q, pi));
  j["caseI"] = report::to_json(cf::audit_lemma_caseI(conv, config));
  j["caseII"] = report::to_json(cf::audit_lemma_caseII(conv, config));
  try {
    j["prime"] = report::to_json(cf::audit_lemma_prime_variant(conv, config));
  } catch (const DomainError& e) {
    j["prime"] = {{"status", "no-prime"}, {"detail", e.what()}};
  }
  if (conv.q >= 2) j["coset"] = report::to_json(groups::coset_structure(conv, o.cap));
  if (conv.q >= 11) {
    auto near = groups::find_artin_prime_near(conv, o.window_constant);
    j["artin_near"] = report::to_json(near);
    // The sum scan is O(p·#H); skip it for primes beyond desk scale.
    if (near.prime && *near.prime <= 20000) {
      auto sub = groups::subgroup(10, *near.prime, *near.prime);
      j["expsum"] = report::to_json(spectra::subgroup_expsum(sub, o.exponent_c, true));
    }
  }
  json pairing = json::array();
  auto pi_digits = constants::const_digits({constants::Name::pi, 100});
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    auto d = cf::residue_decompose(conv, n);
    pairing.push_back(report::to_json(spectra::lipschitz_pairing(n, conv.q, d.s, pi_digits.fraction)));
  }
  j["pairing"] = std::move(pairing);
  run.emit(j, o.out);
}

void write_manifest(const Run& run, const Options& o, const CLI::App& app, const CLI::App& sub) {
  std::string path = o.manifest;
  if (path.empty()) {
    if (run.outputs().empty()) return;
    path = (o.out.empty() ? run.outputs().front().first : o.out) + ".manifest.json";
  }
  json m;
  m["subcommand"] = sub.get_name();
  m["parameters"] = parameters(app, sub);
  m["version"] = version();
  m["inputs"] = run.files(run.inputs());
  m["outputs"] = run.files(run.outputs());
  m["timestamp"] = timestamp();
  std::ofstream f(path);
  if (!f) throw Error("cannot write manifest " + path);
  f << m.dump(2) << "\n";
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Computational checks around the normality of pi", "pilab"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Cap on worker threads (0 = runtime default); output does not depend on it")->capture_default_str();
  app.add_option("--manifest", o.manifest, "Manifest path (default: <report>.manifest.json when files are written)");

  std::function<void(Run&, const Options&)> action;
  auto sub = [&](const char* name, const char* about, void (*fn)(Run&, const Options&)) {
    CLI::App* s = app.add_subcommand(name, about);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* constants_cmd = sub("constants",
                            "Decimal digits of pi, ln 10 or ln pi from two independent series "
                            "(Machin/Chudnovsky for pi, atanh splittings for the logarithms); "
                            "digits are released only where both agree",
                            run_constants);
  constants_cmd->add_option("--name", o.name, "pi | ln10 | ln_pi")->check(CLI::IsMember({"pi", "ln10", "ln_pi"}))->capture_default_str();
  constants_cmd->add_option("--digits", o.digits, "Fractional digits")->required();
  constants_cmd->add_option("--method", o.method, "both | primary | cross")->check(CLI::IsMember({"both", "primary", "cross"}))->capture_default_str();
  constants_cmd->add_option("--out", o.out, "Write a digit file instead of printing");

  auto* construct_cmd = sub("construct",
                            "Digits of the concatenation constants 0.123456789101112..., "
                            "0.235711131719... and 0.149162536... (Champernowne, Copeland-Erdos, "
                            "squares) and of Stoneham series sum 1/(c^n b^(c^n+s))",
                            run_construct);
  construct_cmd->add_option("--family", o.family, "integers | primes | squares | stoneham")->required()->check(CLI::IsMember({"integers", "primes", "squares", "stoneham"}));
  construct_cmd->add_option("--base", o.base, "Base of a concatenation")->capture_default_str();
  construct_cmd->add_option("--b", o.b, "Stoneham base b")->capture_default_str();
  construct_cmd->add_option("--c", o.c, "Stoneham parameter c, gcd(b,c) = 1")->capture_default_str();
  construct_cmd->add_option("--s", o.s, "Stoneham exponent shift s")->capture_default_str();
  construct_cmd->add_option("--digits", o.digits, "Digit count")->required();
  construct_cmd->add_option("--out", o.out, "Write a digit file instead of printing");

  auto* cf_cmd = sub("cf",
                     "Continued fraction convergents p_k/q_k; for pi each row checks "
                     "1/(2q^2) <= pi - p/q <= 1/q^2 and the classical |pi - p/q| < 1/(q_k q_(k+1))",
                     run_cf);
  cf_cmd->add_option("--const", o.constant, "pi | ln10 | ln_pi")->check(CLI::IsMember({"pi", "ln10", "ln_pi"}))->capture_default_str();
  cf_cmd->add_option("--depth", o.depth, "Last index K")->required();
  cf_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* audit_cmd = sub("audit",
                        "Residue decompositions 10^n p_k = a q_k + r and (p_k q_k + 1) 10^n = "
                        "b q_k^2 + s q_k + c, with the interval bounds on {pi 10^n} for 10^n <= q_k "
                        "(caseI), 10^n > q_k (caseII) and a nearby prime modulus (prime); failing "
                        "rows are findings",
                        run_audit);
  audit_cmd->add_option("--lemma", o.lemma, "caseI | caseII | prime")->required()->check(CLI::IsMember({"caseI", "caseII", "prime"}));
  audit_cmd->add_option("--k", o.k, "Convergent index")->required();
  audit_cmd->add_option("--mu", o.mu, "Irrationality-measure parameter (>= 2)")->capture_default_str();
  audit_cmd->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  audit_cmd->add_option("--window-constant", o.window_constant, "C in the prime window q_k + C q_k/ln q_k")->capture_default_str();
  audit_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* order_cmd = sub("order", "Multiplicative order ord_m(g) = min{n >= 1 : g^n = 1 mod m}", run_order);
  order_cmd->add_option("--g", o.g, "Generator")->capture_default_str();
  order_cmd->add_option("--m", o.m, "Modulus")->required();

  auto* coset_cmd = sub("coset",
                        "The subgroup <10> mod q_k and the sets G = {p_k 10^n} and "
                        "H = {(p_k q_k + 1) 10^n} mod q_k; needs gcd(10, q_k) = 1",
                        run_coset);
  coset_cmd->add_option("--k", o.k, "Convergent index")->required();
  coset_cmd->add_option("--cap", o.cap, "Largest subgroup to materialize")->capture_default_str();
  coset_cmd->add_flag("--sets", o.sets, "Include G and H in the report");
  coset_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* artin_cmd = sub("artin",
                        "Primes with primitive root 10 (Artin's conjecture; density "
                        "0.3739558...), and the least such prime near a convergent denominator",
                        run_artin);
  artin_cmd->add_option("--limit", o.limit, "Scan primes up to X (X >= 100)");
  artin_cmd->add_option("--csv", o.csv, "Per-prime rows q,ord,is_artin");
  artin_cmd->add_option("--near-k", o.near_k, "Search [q_k, q_k + C q_k/ln q_k] for convergent k");
  artin_cmd->add_option("--window-constant", o.window_constant, "C in the window")->capture_default_str();
  artin_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* weyl_cmd = sub("weyl",
                       "Weyl criterion sums (1/N)|sum e(m u_n)| and star discrepancy of a point "
                       "set mod 1, or of {n ln 10 + ln pi}",
                       run_weyl);
  auto* points_opt = weyl_cmd->add_option("--points", o.points, "One point in [0,1) per line; '# epsilon=E' sets the error bound");
  weyl_cmd->add_option("--x-sequence", o.x_sequence, "Use {n ln 10 + ln pi}, n = 1..N")->excludes(points_opt);
  weyl_cmd->add_option("--m", o.frequencies, "Frequencies, comma separated")->delimiter(',')->capture_default_str();
  weyl_cmd->add_option("--epsilon", o.epsilon, "Point error bound (overrides the file)");
  weyl_cmd->add_option("--csv", o.csv, "Per-frequency rows");
  weyl_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* normality_cmd = sub("normality",
                            "Wall's criterion: block frequencies of a digit expansion next to "
                            "Weyl sums and discrepancy of its shifts {alpha b^n}",
                            run_normality);
  normality_cmd->add_option("--in", o.in, "Digit file")->required();
  normality_cmd->add_option("--N", o.N, "Digits to use (default: what the file allows)");
  normality_cmd->add_option("--kmax", o.kmax, "Longest block")->capture_default_str();
  normality_cmd->add_option("--mmax", o.mmax, "Largest Weyl frequency")->capture_default_str();
  normality_cmd->add_option("--csv", o.csv, "Per-block rows");
  normality_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* expsum_cmd = sub("expsum",
                         "Exponential sums over the subgroup <g> of (Z/pZ)^x: "
                         "max_a |sum_(x in H) e(a x/p)| against e^(-(ln p)^c) #H, with Parseval check",
                         run_expsum);
  expsum_cmd->add_option("--p", o.p, "Prime modulus")->required();
  expsum_cmd->add_option("--g", o.g, "Generator")->capture_default_str();
  expsum_cmd->add_option("--c", o.exponent_c, "Exponent c in the bound")->capture_default_str();
  expsum_cmd->add_flag("--no-transform", o.no_transform, "Skip the FFT cross-check");
  expsum_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  auto* report_cmd = sub("report",
                         "All checks for one convergent of pi: approximation gap, residue audits, "
                         "cosets of <10>, nearby Artin prime, its exponential sums, and the "
                         "Lipschitz pairing |e({pi 10^n}) - e(s_n/q)|",
                         run_report);
  report_cmd->add_option("--k", o.k, "Convergent index")->required();
  report_cmd->add_option("--mu", o.mu, "Irrationality-measure parameter (>= 2)")->capture_default_str();
  report_cmd->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  report_cmd->add_option("--window-constant", o.window_constant, "C in the prime window")->capture_default_str();
  report_cmd->add_option("--c", o.exponent_c, "Exponent c in the sum bound")->capture_default_str();
  report_cmd->add_option("--cap", o.cap, "Largest subgroup to materialize")->capture_default_str();
  report_cmd->add_option("--out", o.out, "JSON report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (CLI::App* s : app.get_subcommands()) target = s;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    kernels::set_threads(o.threads);
    Run run(out);
    action(run, o);
    write_manifest(run, o, app, *app.get_subcommands().front());
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace pilab::cli
