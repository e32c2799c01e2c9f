#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mqhahn/repr.hpp"

using namespace mqhahn;

namespace {

ParamContext generic_ctx(int n, std::vector<Rational> a = {}) {
  if (a.empty()) a = ParamContext::ones(n);
  return ParamContext(Rational(2), Rational(3), Rational(5), Rational(7), n, std::move(a));
}

}  // namespace

TEST_CASE("N=0 representation is scalar") {
  ParamContext ctx(Rational(2), Rational(8), Rational(4), Rational(2), 0, {});
  Representation rep = build_representation(ctx);
  CHECK(rep.X.at(0, 0) == Rational(-7));  // -[alpha]_2 with q^alpha = 8
  CHECK(rep.Z.at(0, 0) == Rational(-1));
  // [-beta][beta+1] with q^beta = 4
  CHECK(rep.V.at(0, 0) == Rational(-3, 4) * Rational(7) * Rational(-1) * Rational(-1));
  CHECK(rep.V.at(0, 0) == Rational(-21, 4));
  CHECK(verify_defining_relations(rep).all_passed());
  CHECK(verify_casimir(rep).all_passed());
}

TEST_CASE("bidiagonal entries at the small sample point") {
  // q=2, q^alpha=8, q^beta=4, N=2: X diagonal (-[3], -[2], -[1]) = (-7, -3, -1)
  ParamContext ctx(Rational(2), Rational(8), Rational(4), Rational(2), 2,
                   ParamContext::ones(2));
  Representation rep = build_representation(ctx);
  CHECK(rep.X.at(0, 0) == Rational(-7));
  CHECK(rep.X.at(1, 1) == Rational(-3));
  CHECK(rep.X.at(2, 2) == Rational(-1));
  // V coupling |1> -> |0>: -q^{alpha-N} [1][N] = -2*1*3
  CHECK(rep.V.at(0, 1) == Rational(-6));
  // xi = q^{alpha+1}[-beta-1][beta-N] = 16 * (-7/8) * 0 = 0 here,
  // eta = q[alpha] + [alpha-N] = 14 + 1
  CHECK(rep.xi.is_zero());
  CHECK(rep.eta == Rational(15));
  CHECK(verify_defining_relations(rep).all_passed());
  CHECK(verify_bidiagonal_structure(rep).all_passed());
}

TEST_CASE("defining relations fail under a perturbed central parameter") {
  Representation rep = build_representation(generic_ctx(3));
  rep.xi += Rational(1);
  Report r = verify_defining_relations(rep);
  CHECK_FALSE(r.all_passed());
  // only the relation carrying xi breaks
  for (const auto& c : r.checks) {
    if (c.name == "defining_relation_xv") CHECK_FALSE(c.passed);
    else CHECK(c.passed);
  }
}

TEST_CASE("q-commutator") {
  Rational q(2);
  Matrix a(2), b(2);
  std::mt19937_64 rng(21);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a.at(i, j) = draw();
      b.at(i, j) = draw();
    }
  // A = B: [A,A]_s = (1-s) A^2
  Rational s(3, 2);
  CHECK(q_commutator(a, a, s) == (Rational(1) - s) * (a * a));
  // s = 1 with identity: commutes
  CHECK(q_commutator(Matrix::identity(2), a, Rational(1)).is_zero());
  // entrywise cross-check of AB - s BA
  Matrix lhs = q_commutator(a, b, s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational ab = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
      Rational ba = b.at(i, 0) * a.at(0, j) + b.at(i, 1) * a.at(1, j);
      CHECK(lhs.at(i, j) == ab - s * ba);
    }
  CHECK_THROWS_AS(q_commutator(a, Matrix(3), s), DimMismatch);
}

TEST_CASE("casimir is central and scalar; value from two entries agrees") {
  for (int n : {1, 2, 4, 6}) {
    Representation rep = build_representation(generic_ctx(n));
    Report r = verify_casimir(rep);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.detail);
      CHECK(c.passed);
    }
    auto [qm, c] = casimir(rep);
    CHECK(qm.at(0, 0) == c);
    CHECK(qm.at(n, n) == c);
  }
}

TEST_CASE("casimir scalar and relations are gauge invariant") {
  Representation plain = build_representation(generic_ctx(3));
  Representation gauged = build_representation(
      generic_ctx(3, {Rational(3, 2), Rational(-2), Rational(5, 7)}));
  CHECK(casimir(plain).second == casimir(gauged).second);
  CHECK(verify_defining_relations(gauged).all_passed());
  CHECK(verify_casimir(gauged).all_passed());
}

TEST_CASE("q-Hahn algebra embedding") {
  std::mt19937_64 rng(22);
  for (int n : {1, 3, 6}) {
    Representation rep = build_representation(generic_ctx(n));
    // mu = 0 and the W pencil value -[mu]_q
    CHECK(verify_qhahn_embedding(rep, Rational(0)).all_passed());
    CHECK(verify_qhahn_embedding(rep, -rep.ctx.brk(0, 0, 0, 1)).all_passed());
    for (int i = 0; i < 10; ++i) {
      Rational mu(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      Report r = verify_qhahn_embedding(rep, mu);
      INFO("mu=", mu.str());
      CHECK(r.all_passed());
    }
  }
}
