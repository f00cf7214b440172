#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyrep/modsym.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/series.hpp"
#include "polyrep/symfunc.hpp"
#include "polyrep/wreath/char_table.hpp"
#include "polyrep/wreath/wreath.hpp"

namespace polyrep::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of multipartitions of n over k components, saturating at `cap`.
long multipartition_count(std::size_t k, int n, long cap) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t comp = 0; comp < k; ++comp)
    for (int part = 1; part <= n; ++part)
      for (int i = part; i <= n; ++i) c[i] = std::min(cap, c[i] + c[i - part]);
  return c[n];
}

void check_guardrail(const RunConfig& cfg, std::size_t components) {
  const long count = multipartition_count(components, cfg.max_degree, cfg.guardrail + 1);
  if (count > cfg.guardrail && !cfg.force)
    throw UsageError("degree " + std::to_string(cfg.max_degree) + " needs more than " +
                     std::to_string(cfg.guardrail) + " basis monomials; pass --force to run anyway");
}

void check_prime(const RunConfig& cfg) {
  if (!is_prime(cfg.prime)) throw UsageError("--p must be prime, got " + std::to_string(cfg.prime));
  if (cfg.max_degree < 1) throw UsageError("--max-degree must be at least 1");
}

std::string signed_text(const Rational& q) {
  const std::string s = q.get_str();
  return q < 0 ? "−" + s.substr(1) : s;
}

std::string tuple_text(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + signed_text(values[i]);
  return out + ")";
}

json strings(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& v : m.row(i)) row.push_back(v.get_str());
    rows.push_back(row);
  }
  return rows;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void report_line(std::ostream& out, const VerificationReport& r) {
  out << "n=" << r.degree << " p=" << r.prime << " rank=" << r.lattice_rank << " expected=" << r.expected_rank
      << " generators=" << r.generator_count << " lattice=" << digest(r.lattice_hnf)
      << " monomials=" << digest(r.generator_hnf) << " vanishing=" << bool_text(r.vanishing_ok)
      << " verdict=" << bool_text(r.passed()) << "\n";
}

int sym_generators(const RunConfig& cfg, std::ostream& out) {
  check_prime(cfg);
  check_guardrail(cfg, 1);
  const auto series = y_series_generators(cfg.max_degree, cfg.prime);
  const RenderOptions render{"x", cfg.prime};
  bool agree = true;
  json gens = json::array();
  for (int n = 1; n <= cfg.max_degree; ++n) {
    if (n % cfg.prime == 0) continue;
    const SymElement explicit_y = y_explicit(n, cfg.prime);
    const bool same = explicit_y == series[n];
    agree = agree && same;
    if (cfg.format == "json") {
      gens.push_back({{"n", n},
                      {"explicit", to_string(explicit_y, render)},
                      {"series", to_string(series[n], render)},
                      {"agree", same}});
    } else {
      out << "y_" << n << " = " << to_string(explicit_y, render) << "\n";
      if (!same) out << "  MISMATCH: series quotient gives " << to_string(series[n], render) << "\n";
    }
  }
  if (cfg.format == "json")
    out << json{{"command", "sym generators"}, {"prime", cfg.prime}, {"max_degree", cfg.max_degree},
                {"generators", gens}, {"agree", agree}}
               .dump(2)
        << "\n";
  return agree ? kVerified : kFailed;
}

int sym_verify(const RunConfig& cfg, std::ostream& out) {
  check_prime(cfg);
  check_guardrail(cfg, 1);
  bool all = true;
  json reports = json::array();
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const VerificationReport r = verify_theorem1(n, cfg.prime);
    all = all && r.passed();
    if (cfg.format == "json") reports.push_back(json::parse(report_to_json(r)));
    else report_line(out, r);
  }
  if (cfg.format == "json")
    out << json{{"command", "sym verify"}, {"prime", cfg.prime}, {"max_degree", cfg.max_degree},
                {"reports", reports}, {"all_passed", all}}
               .dump(2)
        << "\n";
  else out << (all ? "all degrees verified" : "VERIFICATION FAILED") << "\n";
  return all ? kVerified : kFailed;
}

int sym_chartable(const RunConfig& cfg, std::ostream& out) {
  if (cfg.chartable_n < 1) throw UsageError("--n must be at least 1");
  RunConfig bounded = cfg;
  bounded.max_degree = cfg.chartable_n;
  check_guardrail(bounded, 1);
  const auto lambdas = enumerate(cfg.chartable_n);
  std::vector<Partition> classes(lambdas.rbegin(), lambdas.rend());
  if (cfg.format == "json") {
    json chars = json::array();
    for (const auto& lambda : lambdas) {
      json values = json::array();
      for (const auto& mu : classes) values.push_back(mn_character(lambda, mu).get_str());
      chars.push_back({{"partition", lambda.to_string()}, {"values", values}});
    }
    json cls = json::array();
    for (const auto& mu : classes) cls.push_back(mu.to_string());
    out << json{{"n", cfg.chartable_n}, {"classes", cls}, {"characters", chars}}.dump(2) << "\n";
    return kVerified;
  }
  out << "classes:";
  for (const auto& mu : classes) out << " " << mu.to_string();
  out << "\n";
  for (const auto& lambda : lambdas) {
    out << lambda.to_string() << ":";
    for (const auto& mu : classes) out << " " << mn_character(lambda, mu).get_str();
    out << "\n";
  }
  return kVerified;
}

CharTable load_checked(const RunConfig& cfg) {
  if (cfg.table_path.empty()) throw UsageError("--table is required");
  if (!std::filesystem::exists(cfg.table_path)) throw UsageError("table file not found: " + cfg.table_path);
  try {
    return load_table(cfg.table_path);
  } catch (const TableError& e) {
    throw UsageError(std::string("invalid table: ") + e.what());
  }
}

void print_phi(std::ostream& out, const CharTable& table, const ELatticeBasis& e) {
  out << "group " << table.name << ", p=" << e.prime << ", M=" << e.regular_rank << ", N=" << table.irreducibles.size()
      << "\n";
  out << "phi = " << to_string(e.phi) << "\n";
}

int wreath_generators(const RunConfig& cfg, std::ostream& out) {
  check_prime(cfg);
  const CharTable table = load_checked(cfg);
  check_guardrail(cfg, table.irreducibles.size());
  const ELatticeBasis e = e_lattice(table, cfg.prime);
  json gens = json::array();
  if (cfg.format != "json") print_phi(out, table, e);
  for (std::size_t k = 0; k < e.regular_rank; ++k) {
    const auto y = yk_generators(table, e, k, cfg.max_degree);
    for (int n = 1; n <= cfg.max_degree; ++n) {
      if (n % cfg.prime == 0) continue;
      const std::string text = to_string(y[n], &table);
      if (cfg.format == "json") gens.push_back({{"k", k + 1}, {"n", n}, {"value", text}});
      else out << "y_{" << k + 1 << "," << n << "} = " << text << "\n";
    }
  }
  if (cfg.format == "json")
    out << json{{"command", "wreath generators"}, {"group", table.name},  {"prime", cfg.prime},
                {"max_degree", cfg.max_degree},  {"M", e.regular_rank}, {"phi", matrix_json(e.phi)},
                {"generators", gens}}
               .dump(2)
        << "\n";
  return kVerified;
}

int wreath_verify(const RunConfig& cfg, std::ostream& out) {
  check_prime(cfg);
  const CharTable table = load_checked(cfg);
  check_guardrail(cfg, table.irreducibles.size());
  const ELatticeBasis e = e_lattice(table, cfg.prime);
  if (cfg.format != "json") print_phi(out, table, e);
  bool all = true;
  json reports = json::array();
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const VerificationReport r = verify_theorem2(table, e, n);
    all = all && r.passed();
    if (cfg.format == "json") reports.push_back(json::parse(report_to_json(r)));
    else report_line(out, r);
  }
  const bool exchange = generator_exchange_check(table, e, cfg.max_degree);
  all = all && exchange;
  if (cfg.format == "json")
    out << json{{"command", "wreath verify"},
                {"group", table.name},
                {"prime", cfg.prime},
                {"max_degree", cfg.max_degree},
                {"M", e.regular_rank},
                {"phi", matrix_json(e.phi)},
                {"reports", reports},
                {"generator_exchange", exchange},
                {"all_passed", all}}
               .dump(2)
        << "\n";
  else
    out << "generator exchange up to degree " << cfg.max_degree << ": " << bool_text(exchange) << "\n"
        << (all ? "all degrees verified" : "VERIFICATION FAILED") << "\n";
  return all ? kVerified : kFailed;
}

int examples(const RunConfig& cfg, std::ostream& out) {
  bool all = true;
  json checks = json::array();
  for (const auto& c : example_identities()) {
    if (!c.informational) all = all && c.holds;
    if (cfg.format == "json") {
      checks.push_back({{"label", c.label},
                        {"degree", c.degree},
                        {"observed", strings(c.observed)},
                        {"expected", strings(c.expected)},
                        {"holds", c.holds},
                        {"informational", c.informational},
                        {"note", c.note}});
    } else if (c.informational) {
      out << "[info] " << c.label << ": " << tuple_text(c.observed) << " vs " << tuple_text(c.expected) << ", "
          << (c.holds ? "equal" : "differs") << " on characters (" << c.note << ")\n";
    } else {
      out << "[" << (c.holds ? "ok" : "FAIL") << "] " << c.label << " ↦ " << tuple_text(c.observed) << "  ("
          << c.note << ")\n";
    }
  }
  if (cfg.format == "json") out << json{{"command", "examples"}, {"checks", checks}, {"passed", all}}.dump(2) << "\n";
  return all ? kVerified : kFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Graded Grothendieck rings of modular projective representations"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub, bool degree) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--force", cfg.force, "Ignore the size guardrail");
    sub->add_option("--guardrail", cfg.guardrail, "Largest basis size accepted without --force");
    if (degree) {
      sub->add_option("--p", cfg.prime, "Prime characteristic")->required();
      sub->add_option("--max-degree", cfg.max_degree, "Largest degree")->required();
    }
  };

  auto* sym = app.add_subcommand("sym", "Symmetric groups");
  sym->require_subcommand(1);
  auto* sym_gen = sym->add_subcommand("generators", "Generators y_n in the x-basis");
  add_common(sym_gen, true);
  auto* sym_ver = sym->add_subcommand("verify", "Per-degree lattice equality for S_n");
  add_common(sym_ver, true);
  auto* sym_tab = sym->add_subcommand("chartable", "Murnaghan-Nakayama character table of S_n");
  add_common(sym_tab, false);
  sym_tab->add_option("--n", cfg.chartable_n, "Degree")->required();

  auto* wreath = app.add_subcommand("wreath", "Wreath products G wr S_n");
  wreath->require_subcommand(1);
  auto* wr_gen = wreath->add_subcommand("generators", "Generators y_{k,n} in the Phi-basis");
  add_common(wr_gen, true);
  wr_gen->add_option("--table", cfg.table_path, "Character table file")->required();
  auto* wr_ver = wreath->add_subcommand("verify", "Per-degree lattice equality for G wr S_n");
  add_common(wr_ver, true);
  wr_ver->add_option("--table", cfg.table_path, "Character table file")->required();

  auto* ex = app.add_subcommand("examples", "Low-degree character identities");
  add_common(ex, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (sym_gen->parsed()) return sym_generators(cfg, out);
    if (sym_ver->parsed()) return sym_verify(cfg, out);
    if (sym_tab->parsed()) return sym_chartable(cfg, out);
    if (wr_gen->parsed()) return wreath_generators(cfg, out);
    if (wr_ver->parsed()) return wreath_verify(cfg, out);
    if (ex->parsed()) return examples(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace polyrep::cli
