#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mqhahn/runner.hpp"
#include "mqhahn/specfun.hpp"

using namespace mqhahn;

TEST_CASE("config parsing") {
  std::string text =
      "# sample configuration\n"
      "[context]\n"
      "q = 2\n"
      "t_alpha = 3\n"
      "t_beta = 5/1\n"
      "t_mu = 7\n"
      "N = 2\n"
      "a_seq = 3/2, -2\n"
      "\n"
      "[context]\n"
      "q = 3/2\n"
      "t_alpha = 5\n"
      "t_beta = 7\n"
      "t_mu = 11\n"
      "N = 1\n"
      "a_seq = ones\n"
      "\n"
      "[sample]\n"
      "seed = 42\n"
      "count = 3\n"
      "max_n = 5\n"
      "[run]\n"
      "suites = algebra, bases\n"
      "format = structured\n"
      "fail_fast = true\n";
  RunConfig cfg = parse_config(text);
  REQUIRE(cfg.explicit_contexts.size() == 2);
  CHECK(cfg.explicit_contexts[0].q == Rational(2));
  CHECK(cfg.explicit_contexts[0].a_seq[1] == Rational(-2));
  CHECK(cfg.explicit_contexts[1].N == 1);
  CHECK(cfg.sample.seed == 42);
  CHECK(cfg.sample.count == 3);
  CHECK(cfg.sample.max_n == 5);
  REQUIRE(cfg.suites.size() == 2);
  CHECK(cfg.suites[0] == Suite::algebra);
  CHECK(cfg.suites[1] == Suite::bases);
  CHECK(cfg.format == OutputFormat::structured);
  CHECK(cfg.fail_fast);

  CHECK_THROWS_AS(parse_config("[bogus]\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[context]\nq = 2\n"), ConfigParseError);  // missing keys
  CHECK_THROWS_AS(parse_config("[run]\nsuites = nonsense\n"), ConfigParseError);
  CHECK_THROWS_AS(parse_config("[context]\nq = x\nt_alpha = 1\nt_beta = 1\nt_mu = 1\nN = 0\n"),
                  ConfigParseError);
  // q = 1 is rejected at context construction and surfaces as a config error
  CHECK_THROWS_AS(
      parse_config("[context]\nq = 1\nt_alpha = 3\nt_beta = 5\nt_mu = 7\nN = 1\na_seq = 1\n"),
      ConfigParseError);
}

TEST_CASE("sampling is deterministic and generic") {
  SampleSpec spec{99, 6, 5};
  auto c1 = sample_contexts(spec);
  auto c2 = sample_contexts(spec);
  REQUIRE(c1.size() == 6);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].str() == c2[i].str());
    CHECK(c1[i].N >= 1);
    CHECK(c1[i].N <= 5);
  }
  SampleSpec other{100, 6, 5};
  bool any_different = false;
  auto c3 = sample_contexts(other);
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (c3[i].str() != c1[i].str()) any_different = true;
  CHECK(any_different);
}

TEST_CASE("pencil scalars include zero and the W value") {
  ParamContext ctx(Rational(2), Rational(3), Rational(5), Rational(7), 2,
                   ParamContext::ones(2));
  auto draws = embedding_pencil_scalars(ctx, 5);
  REQUIRE(draws.size() == 12);
  CHECK(draws[0].is_zero());
  CHECK(draws[1] == -ctx.brk(0, 0, 0, 1));
  CHECK(embedding_pencil_scalars(ctx, 5) == draws);
}

TEST_CASE("verify run: structured report is deterministic, exit code 0") {
  RunConfig cfg;
  cfg.sample = {7, 2, 3};
  cfg.format = OutputFormat::structured;
  VerifyResult r1 = run_verify(cfg);
  VerifyResult r2 = run_verify(cfg);
  CHECK(r1.exit_code == 0);
  CHECK(r1.report.all_passed());
  CHECK(r1.rendered == r2.rendered);
  CHECK(r1.rendered.find("mqhahn-report v1") == 0);
  CHECK(r1.rendered.find("summary checks=") != std::string::npos);
}

TEST_CASE("verify run: degenerate explicit context is rejected with exit code 2") {
  RunConfig cfg;
  cfg.explicit_contexts.push_back(
      ParamContext(Rational(2), Rational(8), Rational(4), Rational(2), 2,
                   ParamContext::ones(2)));
  VerifyResult r = run_verify(cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.rendered.find("rejected as degenerate") != std::string::npos);
  CHECK(r.rendered.find("violated") != std::string::npos);
}

TEST_CASE("verify run: explicit generic context passes a single suite") {
  RunConfig cfg;
  cfg.explicit_contexts.push_back(
      ParamContext(Rational(2), Rational(3), Rational(5), Rational(7), 2,
                   ParamContext::ones(2)));
  cfg.suites = {Suite::algebra};
  VerifyResult r = run_verify(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.checks.size() > 0);
}

TEST_CASE("table output and round trip") {
  TableConfig tc;
  tc.function = "qhahn";
  tc.q = Rational(2);
  tc.p1 = Rational(7, 10);
  tc.p2 = Rational(1, 70);
  tc.N = 3;
  tc.format = OutputFormat::structured;
  std::string text = run_table(tc);
  auto values = parse_table_output(text);
  REQUIRE(values.size() == 16);
  HatParams hp{tc.q, tc.p1, tc.p2, tc.N};
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(values.at({m, n}) == qhahn_poly(hp, m, n));
  // row m = 0 is identically 1
  for (int n = 0; n <= 3; ++n) CHECK(values.at({0, n}).is_one());

  tc.function = "U";
  tc.p1 = Rational(3, 5);
  tc.p2 = Rational(2, 25);
  std::string utext = run_table(tc);
  auto uvalues = parse_table_output(utext);
  RationalParams rp{tc.q, tc.p1, tc.p2, tc.N};
  for (int n = 0; n <= 3; ++n) CHECK(uvalues.at({0, n}).is_one());
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(uvalues.at({m, n}) == rational_U(rp, m, n));

  tc.function = "bogus";
  CHECK_THROWS_AS(run_table(tc), ConfigParseError);
}
