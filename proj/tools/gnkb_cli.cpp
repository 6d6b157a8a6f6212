// Command-line front end: info, sweep, verify, hypergraph.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"
#include "gnkb/hypergraph.hpp"
#include "gnkb/solver.hpp"
#include "gnkb/sweep.hpp"
#include "gnkb/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void line(const std::string& label, const std::string& value) {
  std::cout << std::left << std::setw(22) << label << value << '\n';
}

std::string exact_and_decimal(const gnkb::Rational& x) {
  return gnkb::to_string(x) + " (" + gnkb::to_decimal(x) + ")";
}

int cmd_info(const gnkb::Params& p, int solver_cap) {
  p.validate();
  std::cout << "G(n=" << p.n << ", k=" << p.k << ", b=" << p.b << ")\n";
  line("|V|", std::to_string(gnkb::vertex_count_formula(p)));
  line("|C|", std::to_string(gnkb::central_count(p)));
  line("edges", std::to_string(gnkb::edge_count(p)));
  if (p.b == p.k - 1 && p.n > p.k - 1)
    line("diameter", "infinite (edgeless)");
  else
    line("diameter", std::to_string(gnkb::diameter(p)));
  line("chvatal lower bound", std::to_string(gnkb::chvatal_lower_bound(p)));
  line("lex bound k*C(b,k)", std::to_string(gnkb::lex_upper_bound_value(p)));
  if (2 * p.b >= p.n + p.k - 1) {
    line("central lower bound", std::to_string(gnkb::central_lower_bound(p)));
    line("B (2b >= n+k-1)", std::to_string(gnkb::theorem1a_value(p)));
  }

  gnkb::Rational beta = gnkb::make_rational(p.b, p.n);
  if (2 * p.b <= p.n) {
    auto dec = gnkb::classify_case(beta);
    line("beta = b/n", gnkb::to_string(beta) + "  q=" + std::to_string(dec.q) + "  r=" + gnkb::to_string(dec.r) +
                           "  case " + gnkb::to_string(dec.which));
    if (p.k >= 2) {
      auto c = gnkb::coefficients(beta, p.k);
      line("c1", exact_and_decimal(c.c1));
      line("c2", exact_and_decimal(c.c2));
      line("c3", exact_and_decimal(c.c3));
      auto [lo, hi] = gnkb::theorem2_interval(beta, p.k);
      line("coefficient range", exact_and_decimal(lo) + " .. " + exact_and_decimal(hi));
    }
  } else {
    line("beta = b/n", gnkb::to_string(beta) + "  (above 1/2, no case split)");
  }

  auto cert = gnkb::certify(p, solver_cap);
  line("bounds", std::to_string(cert.lower) + "/" + std::to_string(cert.upper) + (cert.exact ? "  exact" : "  not exact"));
  line("best numbering", gnkb::to_string(cert.witness.method()));
  if (cert.solver_value) line("exact solver", std::to_string(*cert.solver_value));
  return kOk;
}

int cmd_sweep(gnkb::SweepConfig config) {
  auto rows = gnkb::run_sweep(config);
  if (config.output.empty()) {
    gnkb::write_csv(std::cout, rows);
  } else {
    std::ofstream out(config.output);
    if (!out) throw gnkb::ArgumentError("cannot write " + config.output);
    gnkb::write_csv(out, rows);
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& suites, const gnkb::VerifyOptions& options) {
  std::vector<std::string> names;
  for (const auto& s : suites) {
    if (s == "all")
      names.insert(names.end(), gnkb::suite_names().begin(), gnkb::suite_names().end());
    else
      names.push_back(s);
  }
  int failures = 0;
  for (const auto& name : names) {
    auto report = gnkb::run_suite(name, options);
    for (const auto& row : report.rows)
      std::cout << (row.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << report.name << std::setw(40)
                << row.instance << row.detail << '\n';
    std::cout << (report.passed() ? "PASS  " : "FAIL  ") << report.name << ": " << report.rows.size() << " checks, "
              << report.failures() << " failed\n";
    failures += report.failures();
  }
  return failures == 0 ? kOk : kFailed;
}

void print_graph(const gnkb::SimpleGraph& g) {
  std::cout << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) std::cout << u << ' ' << v << '\n';
}

int cmd_hypergraph(const std::string& file, const std::string& action) {
  std::ifstream in(file);
  if (!in) throw gnkb::ArgumentError("cannot read " + file);
  auto h = gnkb::parse_hypergraph(in);
  if (action == "two-section") {
    print_graph(gnkb::two_section(h));
  } else if (action == "transform") {
    print_graph(gnkb::weak_edge_clique_graph(h));
  } else if (action == "cover") {
    std::cout << "weak edge clique cover number " << gnkb::weak_edge_clique_cover_number(h) << '\n';
  } else if (action == "check-prop1") {
    auto v = gnkb::proposition1_values(h);
    std::cout << "weak edge clique cover number " << v.edge_cover << '\n'
              << "vertex clique cover number of the transform " << v.vertex_cover << '\n'
              << (v.equal() ? "equal" : "NOT equal") << " (" << v.edge_cover << " = " << v.vertex_cover << ")\n";
    return v.equal() ? kOk : kFailed;
  } else {
    throw gnkb::ArgumentError("unknown action '" + action + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bandwidth of the banded k-subset graphs G(n,k,b)"};
  app.require_subcommand(1);

  gnkb::Params params;
  int solver_cap = 24;
  auto* info = app.add_subcommand("info", "Counts, bounds and coefficients of one instance");
  info->add_option("--n", params.n, "largest element n")->required();
  info->add_option("--k", params.k, "subset size k")->required();
  info->add_option("--b", params.b, "span bound b")->required();
  info->add_option("--solver-cap", solver_cap, "run the exact solver up to this many vertices (0 disables)")
      ->capture_default_str();

  std::string config_file;
  gnkb::SweepConfig inline_config;
  std::vector<std::string> beta_text, method_text, nb_text;
  auto* sweep = app.add_subcommand("sweep", "CSV of numbering bandwidths over a parameter grid");
  sweep->add_option("--config", config_file, "key = value config file");
  sweep->add_option("--k", inline_config.k, "subset sizes")->delimiter(',');
  sweep->add_option("--beta", beta_text, "b/n ratios as p/q")->delimiter(',');
  sweep->add_option("--n", inline_config.n, "values of n")->delimiter(',');
  sweep->add_option("--nb", nb_text, "explicit n:b pairs")->delimiter(',');
  sweep->add_option("--method", method_text, "lex, spo, case_a, case_b")->delimiter(',');
  sweep->add_option("--output", inline_config.output, "CSV path (default: stdout)");
  sweep->add_option("--threads", inline_config.threads, "worker threads (0: all cores)");

  std::vector<std::string> suites;
  gnkb::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run named verification suites");
  verify->add_option("suite", suites, "suite names or 'all'")->required();
  verify->add_option("--random", verify_options.random, "random instances for prop1")->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "seed for random instances")->capture_default_str();

  std::string hyper_file, hyper_action;
  auto* hyper = app.add_subcommand("hypergraph", "Transformations and cover numbers of a hypergraph file");
  hyper->add_option("file", hyper_file, "hypergraph text file")->required();
  hyper->add_option("action", hyper_action, "two-section, transform, cover, check-prop1")
      ->required()
      ->check(CLI::IsMember({"two-section", "transform", "cover", "check-prop1"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(params, solver_cap);
    if (*sweep) {
      gnkb::SweepConfig config;
      if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw gnkb::ArgumentError("cannot read " + config_file);
        config = gnkb::parse_sweep_config(in);
      }
      // command-line lists extend or override the file
      if (!inline_config.k.empty()) config.k = inline_config.k;
      if (!inline_config.n.empty()) config.n = inline_config.n;
      if (!beta_text.empty()) {
        config.beta.clear();
        for (const auto& t : beta_text) config.beta.push_back(gnkb::parse_rational(t));
      }
      if (!nb_text.empty()) {
        std::ostringstream joined;
        joined << "nb =";
        for (const auto& t : nb_text) joined << ' ' << t;
        config.nb = gnkb::parse_sweep_config_string(joined.str()).nb;
      }
      if (!method_text.empty()) {
        config.method.clear();
        for (const auto& t : method_text) config.method.push_back(gnkb::parse_method(t));
      }
      if (!inline_config.output.empty()) config.output = inline_config.output;
      if (inline_config.threads) config.threads = inline_config.threads;
      return cmd_sweep(config);
    }
    if (*verify) return cmd_verify(suites, verify_options);
    if (*hyper) return cmd_hypergraph(hyper_file, hyper_action);
  } catch (const gnkb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
