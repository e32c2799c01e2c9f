#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mqhahn/specfun.hpp"

using namespace mqhahn;

namespace {

ParamContext generic_ctx(int n, std::vector<Rational> a = {}) {
  if (a.empty()) a = ParamContext::ones(n);
  return ParamContext(Rational(2), Rational(3), Rational(5), Rational(7), n, std::move(a));
}

void check_all(const Report& r, const char* tag) {
  for (const auto& c : r.checks) {
    INFO(tag, " ", c.name, " ", c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("q-Hahn polynomial values") {
  HatParams hp{Rational(2), Rational(1, 16), Rational(1, 4), 2};
  CHECK(qhahn_poly(hp, 0, 2).is_one());
  CHECK(qhahn_poly(hp, 2, 0).is_one());
  CHECK(dual_qhahn_poly(hp, 0, 1).is_one());
  CHECK(dual_qhahn_poly(hp, 1, 0).is_one());

  // two-term hand sum for m = x = 1:
  // 1 + (1-q^{-1})(1-ab q^2)(1-q^{-1}) q / ((1-aq)(1-q^{-2})(1-q))
  Rational q(2), a(1, 16), b(1, 4);
  Rational expected =
      Rational(1) + (Rational(1) - q.pow(-1)) * (Rational(1) - a * b * q.pow(2)) *
                        (Rational(1) - q.pow(-1)) * q /
                        ((Rational(1) - a * q) * (Rational(1) - q.pow(-2)) * (Rational(1) - q));
  CHECK(qhahn_poly(hp, 1, 1) == expected);

  // duality against the dual polynomial on the grid
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(dual_qhahn_poly(hp, m, n) == qhahn_poly(hp, n, m));
}

TEST_CASE("rational function values and edges") {
  RationalParams rp = RationalParams::from_context(generic_ctx(3));
  for (int x = 0; x <= 3; ++x) {
    CHECK(rational_U(rp, 0, x).is_one());
    CHECK(rational_V(rp, 0, x).is_one());
  }
  // the value just past the top index is an exact zero
  for (int x = 0; x <= 3; ++x) {
    CHECK(rational_U(rp, 4, x).is_zero());
    CHECK(rational_V(rp, 4, x).is_zero());
  }
  // the two evaluation routes to V agree
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(rational_V(rp, m, n) == rational_V_sum_path(rp, m, n));
  // the general-argument evaluator agrees at integer points
  for (int m = 0; m <= 3; ++m)
    for (int x = 0; x <= 3; ++x)
      CHECK(rational_U(rp, m, x) == rational_U_at(rp, m, rp.q.pow(-x)));
}

TEST_CASE("overlap matrices start at 1") {
  Representation rep = build_representation(generic_ctx(2));
  CHECK(overlap_matrix(rep, OverlapKind::S).at(0, 0).is_one());
  CHECK(overlap_matrix(rep, OverlapKind::U).at(0, 0).is_one());
}

TEST_CASE("polynomial identification, orthogonality, bispectrality") {
  for (int n : {1, 2, 3, 5}) {
    Representation rep = build_representation(generic_ctx(n));
    check_all(verify_poly_identification(rep), "polyid");
    check_all(verify_orthogonality_qhahn(rep), "orth");
    check_all(verify_bispectrality_qhahn(rep), "bispec");
  }
}

TEST_CASE("rational identification, biorthogonality, bispectrality, contiguity") {
  for (int n : {1, 2, 3, 5}) {
    Representation rep = build_representation(generic_ctx(n));
    check_all(verify_rational_identification(rep), "ratid");
    check_all(verify_biorthogonality(rep), "biorth");
    check_all(verify_bispectrality_rational(rep), "bispec");
    check_all(verify_contiguity(rep), "contig");
    check_all(verify_normalization_limit(RationalParams::from_context(rep.ctx)), "norm");
  }
}

TEST_CASE("identifications hold in any gauge") {
  std::vector<Rational> gauge = {Rational(3, 2), Rational(-2), Rational(5, 7)};
  Representation rep = build_representation(generic_ctx(3, gauge));
  check_all(verify_poly_identification(rep), "polyid-gauge");
  check_all(verify_rational_identification(rep), "ratid-gauge");
  check_all(verify_biorthogonality(rep), "biorth-gauge");
}

TEST_CASE("a negative-q context verifies as well") {
  ParamContext ctx(Rational(-2), Rational(3), Rational(5), Rational(7), 2,
                   ParamContext::ones(2));
  Representation rep = build_representation(ctx);
  check_all(verify_poly_identification(rep), "polyid-negq");
  check_all(verify_bispectrality_rational(rep), "bispec-negq");
}

TEST_CASE("hat and rational parameter maps from the context") {
  ParamContext ctx = generic_ctx(2);
  HatParams hp = HatParams::from_context(ctx);
  CHECK(hp.a_hat == ctx.t_mu / (ctx.t_beta * ctx.q));
  CHECK(hp.b_hat == (ctx.t_mu * ctx.t_beta * ctx.q).inv());
  RationalParams rp = RationalParams::from_context(ctx);
  CHECK(rp.qa == ctx.t_alpha / ctx.t_beta);
  CHECK(rp.qb == ctx.q.pow(ctx.N - 1) / (ctx.t_beta * ctx.t_beta));
  // inversion sends q^{a'} (in base 1/q) to the value of q^{-(b-a+2)}
  RationalParams ri = rp.inverted();
  CHECK(ri.q == ctx.q.inv());
  CHECK(ri.qa == rp.qa / (rp.qb * ctx.q * ctx.q));
  CHECK(ri.qb == rp.qb.inv());
}
