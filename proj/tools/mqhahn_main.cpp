#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqhahn/runner.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the meta q-Hahn algebra, its bidiagonal "
               "representations, and the q-Hahn special functions"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites over parameter contexts");
  std::string config_path, format = "human", out_path;
  std::vector<std::string> suite_names;
  std::uint64_t seed = 0;
  int contexts = -1, max_n = -1;
  bool fail_fast = false;
  verify->add_option("--config", config_path, "config file (key=value sections)");
  verify->add_option("--suite", suite_names, "suite to run (repeatable; default all)");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--contexts", contexts, "number of sampled contexts");
  verify->add_option("--max-n", max_n, "largest sampled N");
  verify->add_option("--format", format, "human | structured");
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_flag("--fail-fast", fail_fast, "stop at the first failing check");

  // table
  auto* table = app.add_subcommand("table", "print a function value table on the (m,n) grid");
  std::string function, tq, tp1, tp2, tformat = "human", tout;
  int table_n = 0;
  bool decimals = false;
  table->add_option("--function", function, "qhahn | dual_qhahn | U | V")->required();
  table->add_option("--q", tq, "base q as a fraction")->required();
  table->add_option("--p1", tp1, "hat(a) for polynomials, q^a for rational functions")->required();
  table->add_option("--p2", tp2, "hat(b) for polynomials, q^b for rational functions")->required();
  table->add_option("--n", table_n, "grid size N")->required();
  table->add_option("--format", tformat, "human | structured");
  table->add_option("--out", tout, "write the table to this file");
  table->add_flag("--decimal", decimals, "append double approximations (display only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      mqhahn::RunConfig cfg;
      if (!config_path.empty()) cfg = mqhahn::load_config_file(config_path);
      for (const auto& s : suite_names)
        for (auto suite : mqhahn::parse_suites(s)) cfg.suites.push_back(suite);
      if (verify->count("--seed")) cfg.sample.seed = seed;
      if (contexts >= 0) cfg.sample.count = contexts;
      if (max_n >= 0) cfg.sample.max_n = max_n;
      if (cfg.explicit_contexts.empty() && cfg.sample.count == 0) cfg.sample.count = 25;
      if (verify->count("--format")) {
        if (format == "human") cfg.format = mqhahn::OutputFormat::human;
        else if (format == "structured") cfg.format = mqhahn::OutputFormat::structured;
        else throw mqhahn::ConfigParseError("format must be human or structured");
      }
      if (!out_path.empty()) cfg.out_path = out_path;
      if (fail_fast) cfg.fail_fast = true;

      mqhahn::VerifyResult result = mqhahn::run_verify(cfg);
      if (result.exit_code == 2) {
        std::cerr << result.rendered;
        return 2;
      }
      int rc = write_output(result.rendered, cfg.out_path);
      if (rc != 0) return rc;
      if (!cfg.out_path.empty())
        std::cout << "report written to " << cfg.out_path << " ("
                  << result.report.checks.size() - result.report.failed_count() << "/"
                  << result.report.checks.size() << " checks passed)\n";
      return result.exit_code;
    }

    // table
    mqhahn::TableConfig tcfg;
    tcfg.function = function;
    tcfg.q = mqhahn::Rational::from_string(tq);
    tcfg.p1 = mqhahn::Rational::from_string(tp1);
    tcfg.p2 = mqhahn::Rational::from_string(tp2);
    tcfg.N = table_n;
    tcfg.decimals = decimals;
    if (tformat == "structured") tcfg.format = mqhahn::OutputFormat::structured;
    else if (tformat != "human") throw mqhahn::ConfigParseError("format must be human or structured");
    return write_output(mqhahn::run_table(tcfg), tout);
  } catch (const mqhahn::ConfigParseError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const mqhahn::DegenerateContext& e) {
    std::cerr << "degenerate context: " << e.what() << "\n";
    return 2;
  } catch (const mqhahn::GenericitySamplingExhausted& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return 2;
  } catch (const mqhahn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
