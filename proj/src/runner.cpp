#include "mqhahn/runner.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "mqhahn/actions.hpp"
#include "mqhahn/bases.hpp"
#include "mqhahn/repr.hpp"
#include "mqhahn/specfun.hpp"

namespace mqhahn {

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::algebra: return "algebra";
    case Suite::embedding: return "embedding";
    case Suite::bases: return "bases";
    case Suite::actions: return "actions";
    case Suite::polynomials: return "polynomials";
    case Suite::rationals: return "rationals";
  }
  return "?";
}

static const std::vector<Suite> kAllSuites = {Suite::algebra,     Suite::embedding,
                                              Suite::bases,       Suite::actions,
                                              Suite::polynomials, Suite::rationals};

std::vector<Suite> parse_suites(const std::string& name) {
  if (name == "all") return kAllSuites;
  for (Suite s : kAllSuites)
    if (name == suite_name(s)) return {s};
  throw ConfigParseError("unknown suite '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct ContextDraft {
  std::map<std::string, std::string> kv;
  ParamContext build() const {
    auto need = [&](const std::string& key) -> const std::string& {
      auto it = kv.find(key);
      if (it == kv.end()) throw ConfigParseError("[context] missing key '" + key + "'");
      return it->second;
    };
    int n = 0;
    try {
      n = std::stoi(need("N"));
    } catch (const std::exception&) {
      throw ConfigParseError("[context] N must be an integer");
    }
    std::vector<Rational> a;
    std::string aspec = kv.count("a_seq") ? kv.at("a_seq") : "ones";
    if (trim(aspec) == "ones") {
      a = ParamContext::ones(n);
    } else {
      for (const auto& piece : split(aspec, ','))
        if (!trim(piece).empty()) a.push_back(Rational::from_string(trim(piece)));
    }
    try {
      return ParamContext(Rational::from_string(need("q")), Rational::from_string(need("t_alpha")),
                          Rational::from_string(need("t_beta")), Rational::from_string(need("t_mu")),
                          n, std::move(a));
    } catch (const DegenerateContext& e) {
      throw ConfigParseError(std::string("[context] invalid: ") + e.what());
    } catch (const Error& e) {
      throw ConfigParseError(std::string("[context] bad value: ") + e.what());
    }
  }
};

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::string section;
  std::optional<ContextDraft> draft;
  std::map<std::string, std::string> sample_kv, run_kv;

  auto flush_context = [&] {
    if (draft) {
      cfg.explicit_contexts.push_back(draft->build());
      draft.reset();
    }
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      flush_context();
      section = trim(line.substr(1, line.size() - 2));
      if (section != "context" && section != "sample" && section != "run")
        throw ConfigParseError("unknown section [" + section + "] at line " +
                               std::to_string(lineno));
      if (section == "context") draft.emplace();
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError("expected key=value at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (section == "context") {
      if (!draft) throw ConfigParseError("key outside [context] section");
      draft->kv[key] = value;
    } else if (section == "sample") {
      sample_kv[key] = value;
    } else if (section == "run") {
      run_kv[key] = value;
    } else {
      throw ConfigParseError("key=value before any section at line " + std::to_string(lineno));
    }
  }
  flush_context();

  try {
    if (sample_kv.count("seed")) cfg.sample.seed = std::stoull(sample_kv.at("seed"));
    if (sample_kv.count("count")) cfg.sample.count = std::stoi(sample_kv.at("count"));
    if (sample_kv.count("max_n")) cfg.sample.max_n = std::stoi(sample_kv.at("max_n"));
  } catch (const std::exception&) {
    throw ConfigParseError("[sample] values must be integers");
  }
  if (run_kv.count("suites")) {
    cfg.suites.clear();
    for (const auto& piece : split(run_kv.at("suites"), ','))
      for (Suite s : parse_suites(trim(piece)))
        cfg.suites.push_back(s);
  }
  if (run_kv.count("format")) {
    const std::string& f = run_kv.at("format");
    if (f == "human") cfg.format = OutputFormat::human;
    else if (f == "structured") cfg.format = OutputFormat::structured;
    else throw ConfigParseError("format must be human or structured");
  }
  if (run_kv.count("out")) cfg.out_path = run_kv.at("out");
  if (run_kv.count("fail_fast")) cfg.fail_fast = run_kv.at("fail_fast") == "true";
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

// Deterministic draws: raw engine output only (std::uniform_int_distribution
// is implementation-defined; the report must be byte-identical everywhere).
long draw_below(std::mt19937_64& rng, long n) { return static_cast<long>(rng() % static_cast<std::uint64_t>(n)); }

Rational draw_small_rational(std::mt19937_64& rng) {
  static const long nums[] = {1, 2, 3, 4, 5, -1, -2, -3, -4, -5};
  static const long dens[] = {1, 2, 3, 4, 5};
  return Rational(nums[draw_below(rng, 10)], dens[draw_below(rng, 5)]);
}

Rational draw_t_value(std::mt19937_64& rng, const Rational& q) {
  long j = draw_below(rng, 5) - 2;  // power of q in [-2, 2]
  Rational r = draw_small_rational(rng);
  return q.pow(j) * r;
}

}  // namespace

std::vector<ParamContext> sample_contexts(const SampleSpec& spec) {
  static const std::vector<Rational> q_pool = {
      Rational(2),     Rational(3),     Rational(1, 2), Rational(3, 2), Rational(2, 3),
      Rational(5, 2),  Rational(1, 3),  Rational(-2),   Rational(-3),   Rational(-1, 2)};
  std::mt19937_64 rng(spec.seed);
  std::vector<ParamContext> out;
  for (int i = 0; i < spec.count; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      const Rational& q = q_pool[static_cast<std::size_t>(draw_below(rng, static_cast<long>(q_pool.size())))];
      int n = 1 + static_cast<int>(draw_below(rng, spec.max_n));
      Rational ta = draw_t_value(rng, q);
      Rational tb = draw_t_value(rng, q);
      Rational tm = draw_t_value(rng, q);
      std::vector<Rational> a;
      for (int k = 0; k < n; ++k) a.push_back(draw_small_rational(rng));
      bool nonzero = !ta.is_zero() && !tb.is_zero() && !tm.is_zero();
      for (const auto& x : a)
        if (x.is_zero()) nonzero = false;
      if (!nonzero) continue;
      ParamContext ctx(q, ta, tb, tm, n, std::move(a));
      if (is_generic(ctx)) {
        out.push_back(std::move(ctx));
        found = true;
      }
    }
    if (!found)
      throw GenericitySamplingExhausted("no generic context found in 100 attempts (context " +
                                        std::to_string(i) + ", seed " +
                                        std::to_string(spec.seed) + ")");
  }
  return out;
}

std::vector<Rational> embedding_pencil_scalars(const ParamContext& ctx, std::uint64_t seed) {
  std::vector<Rational> out;
  out.push_back(Rational(0));
  out.push_back(-ctx.brk(0, 0, 0, 1));  // the W pencil: -[mu]_q
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int i = 0; i < 10; ++i) out.push_back(draw_small_rational(rng));
  return out;
}

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n' || c == '\r') out.push_back(' ');
    else if (c == '"') out.push_back('\'');
    else out.push_back(c);
  }
  return out;
}

Report run_suite_on_context(Suite s, const Representation& rep, std::uint64_t seed) {
  Report rep_out;
  switch (s) {
    case Suite::algebra:
      rep_out.merge(verify_defining_relations(rep));
      rep_out.merge(verify_casimir(rep));
      rep_out.merge(verify_bidiagonal_structure(rep));
      break;
    case Suite::embedding: {
      int idx = 0;
      for (const Rational& mu : embedding_pencil_scalars(rep.ctx, seed)) {
        Report r = verify_qhahn_embedding(rep, mu);
        for (auto& c : r.checks) c.name += "_pencil" + std::to_string(idx);
        rep_out.merge(r);
        ++idx;
      }
      break;
    }
    case Suite::bases:
      rep_out.merge(verify_bases_suite(rep));
      break;
    case Suite::actions:
      rep_out.merge(verify_actions_suite(rep));
      rep_out.merge(leonard_pair_check(rep));
      break;
    case Suite::polynomials: {
      rep_out.merge(verify_poly_identification(rep));
      rep_out.merge(verify_orthogonality_qhahn(rep));
      rep_out.merge(verify_bispectrality_qhahn(rep));
      // Proof-level identity sweeps at this context's q
      std::vector<Rational> bases = {Rational(3),      Rational(1, 4), Rational(-2, 3),
                                     rep.ctx.t_alpha,  rep.ctx.t_beta, Rational(7, 5)};
      rep_out.merge(pochhammer_identity_suite(rep.ctx.q, bases, 6));
      HatParams hp = HatParams::from_context(rep.ctx);
      std::vector<std::array<Rational, 4>> draws = {
          {Rational(3), Rational(1, 5), Rational(2, 7), Rational(5, 3)},
          {Rational(-2), Rational(3, 4), Rational(1, 7), Rational(-3, 5)},
          {Rational(1, 3), Rational(-5, 2), Rational(4, 9), Rational(7, 2)}};
      rep_out.merge(sears_and_32_transform_suite(rep.ctx.q, draws, 4, hp.a_hat, hp.b_hat,
                                                 std::min(rep.ctx.N, 4)));
      break;
    }
    case Suite::rationals:
      rep_out.merge(verify_rational_identification(rep));
      rep_out.merge(verify_biorthogonality(rep));
      rep_out.merge(verify_bispectrality_rational(rep));
      rep_out.merge(verify_contiguity(rep));
      rep_out.merge(verify_normalization_limit(RationalParams::from_context(rep.ctx)));
      break;
  }
  return rep_out;
}

}  // namespace

VerifyResult run_verify(const RunConfig& config) {
  VerifyResult result;
  std::ostringstream out;
  std::vector<Suite> suites = config.suites.empty() ? kAllSuites : config.suites;

  std::vector<ParamContext> contexts;
  try {
    for (const ParamContext& ctx : config.explicit_contexts) {
      Report gen = validate_genericity(ctx);
      if (!gen.all_passed()) {
        std::ostringstream msg;
        msg << "explicit context rejected as degenerate: " << ctx.str();
        for (const auto& c : gen.checks)
          if (!c.passed) msg << "\n  violated " << c.name << ": " << c.detail;
        result.exit_code = 2;
        result.rendered = msg.str() + "\n";
        return result;
      }
      contexts.push_back(ctx);
    }
    std::vector<ParamContext> sampled = sample_contexts(config.sample);
    contexts.insert(contexts.end(), sampled.begin(), sampled.end());
  } catch (const Error& e) {
    result.exit_code = 2;
    result.rendered = std::string("configuration error: ") + e.what() + "\n";
    return result;
  }

  const bool structured = config.format == OutputFormat::structured;
  if (structured) {
    out << "mqhahn-report v1\n";
    out << "run suites=";
    for (std::size_t i = 0; i < suites.size(); ++i)
      out << (i ? "," : "") << suite_name(suites[i]);
    out << " seed=" << config.sample.seed << " sampled=" << config.sample.count
        << " max_n=" << config.sample.max_n << " contexts=" << contexts.size() << "\n";
  }

  bool stopped = false;
  for (std::size_t ci = 0; ci < contexts.size() && !stopped; ++ci) {
    const ParamContext& ctx = contexts[ci];
    if (structured)
      out << "context idx=" << ci << " " << ctx.str() << "\n";
    else
      out << "== context " << ci << ": " << ctx.str() << "\n";

    Representation rep = build_representation(ctx);
    for (Suite s : suites) {
      Report r;
      try {
        r = run_suite_on_context(s, rep, config.sample.seed + ci);
      } catch (const Error& e) {
        r.add(suite_name(s), "suite_exception", false, e.what());
      }
      for (const auto& c : r.checks) {
        if (structured) {
          out << "check ctx=" << ci << " suite=" << c.suite << " name=" << c.name
              << " status=" << (c.passed ? "pass" : "fail");
          if (!c.passed) out << " detail=\"" << sanitize(c.detail) << "\"";
          out << "\n";
        } else {
          out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.suite << "/" << c.name;
          if (!c.passed) out << "  " << sanitize(c.detail);
          out << "\n";
        }
        result.report.checks.push_back(c);
        if (!c.passed && config.fail_fast) {
          stopped = true;
        }
      }
      if (stopped) break;
    }
  }

  std::size_t failed = result.report.failed_count();
  out << "summary checks=" << result.report.checks.size()
      << " passed=" << (result.report.checks.size() - failed) << " failed=" << failed
      << (stopped ? " (fail-fast stop)" : "") << "\n";
  result.exit_code = failed == 0 ? 0 : 1;
  result.rendered = out.str();
  return result;
}

std::string run_table(const TableConfig& config) {
  std::ostringstream out;
  const int N = config.N;
  if (N < 0) throw ConfigParseError("table: N must be non-negative");

  auto value = [&](int m, int n) -> Rational {
    if (config.function == "qhahn") {
      HatParams hp{config.q, config.p1, config.p2, N};
      return qhahn_poly(hp, m, n);
    }
    if (config.function == "dual_qhahn") {
      HatParams hp{config.q, config.p1, config.p2, N};
      return dual_qhahn_poly(hp, m, n);
    }
    if (config.function == "U") {
      RationalParams rp{config.q, config.p1, config.p2, N};
      return rational_U(rp, m, n);
    }
    if (config.function == "V") {
      RationalParams rp{config.q, config.p1, config.p2, N};
      return rational_V(rp, m, n);
    }
    throw ConfigParseError("table: unknown function '" + config.function + "'");
  };

  if (config.format == OutputFormat::structured) {
    out << "mqhahn-table v1\n";
    out << "function=" << config.function << " q=" << config.q << " p1=" << config.p1
        << " p2=" << config.p2 << " N=" << N << "\n";
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n) {
        out << "value m=" << m << " n=" << n << " v=" << value(m, n);
        if (config.decimals) out << " approx=" << value(m, n).to_double();
        out << "\n";
      }
  } else {
    out << config.function << " values on the (m,n) grid, N=" << N << ", q=" << config.q
        << ", p1=" << config.p1 << ", p2=" << config.p2 << "\n";
    for (int m = 0; m <= N; ++m) {
      out << "m=" << m << ":";
      for (int n = 0; n <= N; ++n) {
        out << "  " << value(m, n);
        if (config.decimals) out << " (" << value(m, n).to_double() << ")";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::map<std::pair<int, int>, Rational> parse_table_output(const std::string& text) {
  std::map<std::pair<int, int>, Rational> values;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("value ", 0) != 0) continue;
    int m = -1, n = -1;
    std::string v;
    for (const auto& tok : split(line, ' ')) {
      if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
      else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
      else if (tok.rfind("v=", 0) == 0) v = tok.substr(2);
    }
    if (m < 0 || n < 0 || v.empty()) throw ConfigParseError("malformed table line: " + line);
    values[{m, n}] = Rational::from_string(v);
  }
  return values;
}

}  // namespace mqhahn
