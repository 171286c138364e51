// cubinv: command-line access to the invariant computations.
//
// Exit status: 0 when every requested check passes, 1 when a check fails or
// two series differ, 2 for invalid input.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cubinv/checks.hpp"
#include "cubinv/field.hpp"
#include "cubinv/hilbert.hpp"
#include "cubinv/invariants.hpp"
#include "cubinv/json_io.hpp"
#include "cubinv/parallel.hpp"
#include "cubinv/sagbi.hpp"

using namespace cubinv;
using nlohmann::json;

namespace {

struct Config {
  std::uint32_t prime = 0;
  std::optional<int> d_max;
  int i_max = 3;
  std::string format = "text";
  unsigned jobs = 1;
  std::string suite;
  std::string diff;
  std::string source = "closed";
  bool check = false;
  bool list = false;
  bool force = false;
};

int default_dmax(std::uint32_t p) {
  if (p == 5) return 24;
  if (p == 7) return 20;
  return 2 * int(p) + 2;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_gens(const Config& c) {
  const auto gens = build_generating_set(c.prime);
  std::vector<GeneratorRecord> hs;
  if (c.i_max > 0 && c.format == "json") hs = build_h_sequence(c.i_max, c.prime);
  if (c.format == "json") {
    json ranges = json::object();
    for (int fam = 1; fam <= 4; ++fam) ranges["fam" + std::to_string(fam)] = family_range(fam, c.prime);
    json out = {{"prime", c.prime}, {"ranges", ranges}, {"generators", json::array()}, {"h", json::array()}};
    for (const auto& g : gens) out["generators"].push_back(to_json(g));
    for (const auto& h : hs) out["h"].push_back(to_json(h));
    print_json(out);
    return 0;
  }
  std::cout << describe_ranges(c.prime);
  std::cout << std::left << std::setw(12) << "name" << std::setw(8) << "family" << std::setw(4) << "j" << std::setw(4)
            << "m" << std::setw(8) << "degree" << "lead\n";
  int top = 0;
  for (const auto& g : gens) {
    std::cout << std::setw(12) << g.name << std::setw(8) << to_string(g.family) << std::setw(4) << g.j
              << std::setw(4) << g.m << std::setw(8) << g.degree << g.lead.to_string() << '\n';
    top = std::max(top, g.degree);
  }
  std::cout << gens.size() << " generators, max degree " << top << '\n';
  return 0;
}

PowerSeries series_by(const std::string& source, std::uint32_t p, int d) {
  if (source == "closed") return expand(closed_form(p), d);
  if (source == "brute") return brute_series(p, d);
  if (source == "cones") return assemble_total(p, d, ConeSource::closed_forms);
  if (source == "counts") return assemble_total(p, d, ConeSource::counts);
  throw std::invalid_argument("unknown series source '" + source + "' (closed, brute, cones, counts)");
}

int cmd_hs(const Config& c) {
  const int d = c.d_max.value_or(default_dmax(c.prime));
  if (d < 0) throw std::invalid_argument("--dmax must be non-negative");
  std::string a = c.source, b;
  if (!c.diff.empty()) {
    const auto comma = c.diff.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--diff expects two sources, e.g. brute,closed");
    a = c.diff.substr(0, comma);
    b = c.diff.substr(comma + 1);
  } else if (c.check) {
    a = "brute";
    b = "closed";
  }
  const bool brute = a == "brute" || b == "brute";
  if (brute && c.prime >= 11 && !c.force) {
    std::cerr << "note: brute-force dimensions at p = " << c.prime
              << " need nullspaces of size about (d+3)^3/(6(p-1)) for every degree; pass --force to run anyway\n";
    return 2;
  }
  std::cerr << "computing " << a << (b.empty() ? "" : " and " + b) << " series through degree " << d << '\n';
  const PowerSeries first = series_by(a, c.prime, d);
  std::optional<PowerSeries> second;
  if (!b.empty()) second = series_by(b, c.prime, d);
  int at = -1;
  if (second)
    if (const auto d0 = first_difference(first, *second)) at = *d0;

  if (c.format == "json") {
    json out = {{"prime", c.prime}, {"d_max", d}, {"source", a}, {"series", to_json(first)}};
    if (second) {
      json where = nullptr;
      if (at >= 0) where = at;
      out["compare"] = {{"source", b}, {"series", to_json(*second)}, {"first_difference", where}};
      out["pass"] = at < 0;
    }
    print_json(out);
  } else {
    for (int k = 0; k <= d; ++k) {
      std::cout << k << ' ' << first[std::size_t(k)];
      if (second) std::cout << ' ' << (*second)[std::size_t(k)];
      std::cout << '\n';
    }
    if (second) {
      if (at >= 0)
        std::cout << "first difference: degree " << at << " (" << a << " " << first[std::size_t(at)] << ", " << b
                  << " " << (*second)[std::size_t(at)] << ")\n";
      else
        std::cout << "first difference: none (" << a << " = " << b << " through degree " << d << ")\n";
    }
  }
  return at >= 0 ? 1 : 0;
}

int cmd_verify(const Config& c) {
  if (c.list) {
    for (const auto& s : suites()) {
      if (c.format == "json") continue;
      std::cout << std::left << std::setw(9) << s.name << s.description << '\n';
    }
    if (c.format == "json") {
      json out = json::array();
      for (const auto& s : suites()) out.push_back({{"suite", s.name}, {"description", s.description}});
      print_json(out);
    }
    return 0;
  }
  if (c.prime == 0) throw std::invalid_argument("--prime is required");
  const Suite* suite = find_suite(c.suite);
  if (!suite) throw std::invalid_argument("unknown suite '" + c.suite + "'; see verify --list");
  if (c.i_max < 1) throw std::invalid_argument("--i-max must be at least 1");
  std::cerr << "running suite " << suite->name << " at p = " << c.prime << '\n';

  std::vector<Check> checks;
  std::optional<NoetherReport> report;
  if (suite->name == "noether") {
    NoetherReport r;
    int top = 0;
    for (const auto& g : build_generating_set(c.prime)) top = std::max(top, g.degree);
    checks.push_back(check_noether(c.prime, c.d_max.value_or(top + 2), &r));
    report = r;
  } else {
    checks = suite->run(c.prime, SuiteOptions{c.i_max, c.d_max});
  }
  bool all = true;
  for (const auto& k : checks) all = all && k.pass;

  if (c.format == "json") {
    json out = {{"prime", c.prime}, {"suite", suite->name}, {"pass", all}, {"checks", json::array()}};
    for (const auto& k : checks) out["checks"].push_back({{"claim", k.claim}, {"pass", k.pass}, {"detail", k.detail}});
    if (report) out["report"] = to_json(*report);
    print_json(out);
  } else {
    if (report) std::cout << to_text(*report);
    for (const auto& k : checks) std::cout << (k.pass ? "PASS " : "FAIL ") << k.claim << ": " << k.detail << '\n';
    std::cout << (all ? "suite passed" : "suite failed") << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of the binary cubic under SL_2(F_p)"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool prime_required) {
    auto* opt = sub->add_option("--prime,-p", c.prime, "characteristic p > 3");
    if (prime_required) opt->required();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* gens = app.add_subcommand("gens", "print the generating set with its resolved index ranges");
  add_common(gens, true);
  gens->add_option("--i-max", c.i_max, "also emit h_1..h_i in JSON output");

  auto* hs = app.add_subcommand("hs", "print or compare Hilbert series coefficients");
  add_common(hs, true);
  hs->add_option("--dmax", c.d_max, "last degree");
  hs->add_option("--source", c.source, "closed, brute, cones or counts");
  hs->add_flag("--check", c.check, "compare brute-force dimensions with the closed form");
  hs->add_option("--diff", c.diff, "compare two sources, e.g. brute,closed");
  hs->add_flag("--force", c.force, "allow brute-force series for p >= 11");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  verify->add_option("--suite", c.suite, "suite name");
  verify->add_option("--i-max", c.i_max, "number of h_i to check");
  verify->add_option("--dmax", c.d_max, "last degree for degreewise checks");
  verify->add_flag("--list", c.list, "list the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_max_jobs(c.jobs);
    if (c.prime != 0 || !verify->parsed()) require_supported_prime(c.prime);
    if (gens->parsed()) return cmd_gens(c);
    if (hs->parsed()) return cmd_hs(c);
    return cmd_verify(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
