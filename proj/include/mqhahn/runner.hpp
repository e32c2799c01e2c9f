#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mqhahn/qcore.hpp"
#include "mqhahn/report.hpp"

namespace mqhahn {

enum class Suite { algebra, embedding, bases, actions, polynomials, rationals };

const char* suite_name(Suite s);
// Parses a suite name or "all"; throws ConfigParseError on anything else.
std::vector<Suite> parse_suites(const std::string& name);

enum class OutputFormat { human, structured };

struct SampleSpec {
  std::uint64_t seed = 0;
  int count = 0;
  int max_n = 8;
};

struct RunConfig {
  std::vector<ParamContext> explicit_contexts;
  SampleSpec sample;
  std::vector<Suite> suites;  // empty = all
  OutputFormat format = OutputFormat::human;
  std::string out_path;  // empty = stdout only
  bool fail_fast = false;
};

// Plain-text key-value config with [context], [sample] and [run] sections.
// Rationals are written as "p/q" strings.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Seeded rejection sampling of generic contexts (retry cap 100 per context).
std::vector<ParamContext> sample_contexts(const SampleSpec& spec);

// Deterministic pencil scalars for the embedding suite (10 draws + 0 + the
// W-pencil value -[mu]_q).
std::vector<Rational> embedding_pencil_scalars(const ParamContext& ctx, std::uint64_t seed);

struct VerifyResult {
  int exit_code = 0;  // 0 pass, 1 identity failure, 2 config/degeneracy error
  std::string rendered;
  Report report;
};

// Runs the selected suites over all contexts (explicit ones are rejected if
// they fail validate_genericity) and renders the report.
VerifyResult run_verify(const RunConfig& config);

struct TableConfig {
  std::string function;  // qhahn | dual_qhahn | U | V
  Rational q;
  Rational p1;  // a_hat (polynomials) or q^a (rational functions)
  Rational p2;  // b_hat or q^b
  int N = 0;
  OutputFormat format = OutputFormat::human;
  bool decimals = false;
};

std::string run_table(const TableConfig& config);

// Re-reads a structured table dump; returns the (m,n) value grid.
std::map<std::pair<int, int>, Rational> parse_table_output(const std::string& text);

}  // namespace mqhahn
